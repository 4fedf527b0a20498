#include "hball/geometry.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hball/rng.hpp"

namespace hball {

Complex hermitianInner(const CVec& z, const CVec& w) {
    if (z.size() != w.size())
        throw DimensionError("hermitianInner: vectors of length " + std::to_string(z.size()) +
                             " and " + std::to_string(w.size()));
    // Eigen's dot conjugates its *object*, so w.dot(z) = sum conj(w_j) z_j.
    return w.dot(z);
}

BallPoint::BallPoint(CVec coords) : coords_(std::move(coords)) {
    if (coords_.size() < 1) throw DimensionError("BallPoint: dimension must be >= 1");
    norm_ = coords_.norm();
    if (!(norm_ < 1.0))
        throw DomainError("BallPoint: norm " + std::to_string(norm_) + " not inside the unit ball");
}

BallPoint BallPoint::origin(int n) { return BallPoint(CVec::Zero(n)); }

SpherePoint::SpherePoint(CVec coords) : coords_(std::move(coords)) {
    if (coords_.size() < 1) throw DimensionError("SpherePoint: dimension must be >= 1");
    const double len = coords_.norm();
    if (len < 1e-12) throw DomainError("SpherePoint: cannot normalize a (near-)zero vector");
    coords_ /= len;
}

SpherePoint SpherePoint::axis(int n, int j) {
    if (j < 0 || j >= n) throw DimensionError("SpherePoint::axis: index out of range");
    CVec c = CVec::Zero(n);
    c[j] = 1.0;
    return SpherePoint(std::move(c));
}

BallPoint radialPoint(const SpherePoint& xi, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("radialPoint: radius must lie in [0,1)");
    return BallPoint(r * xi.coords());
}

ApproachRegion::ApproachRegion(SpherePoint vertex, double aperture)
    : vertex_(std::move(vertex)), aperture_(aperture) {
    if (!(aperture_ > 1.0)) throw ConfigurationError("ApproachRegion: aperture must exceed 1");
}

bool inAdmissibleRegion(const BallPoint& z, const ApproachRegion& region) {
    if (z.dim() != region.vertex().dim())
        throw DimensionError("inAdmissibleRegion: point/region dimension mismatch");
    const Complex pairing = hermitianInner(z.coords(), region.vertex().coords());
    const double lhs = std::abs(1.0 - pairing);
    const double rhs = 0.5 * region.aperture() * (1.0 - z.norm() * z.norm());
    return lhs < rhs;
}

Curve radialCurve(const SpherePoint& xi, double tangentialBound) {
    return Curve{[xi](double t) { return radialPoint(xi, t); }, xi, tangentialBound};
}

Curve linearTangentialCurve(const SpherePoint& xi, const CVec& direction, double scale,
                            double tangentialBound) {
    if (direction.size() != xi.coords().size())
        throw DimensionError("linearTangentialCurve: direction dimension mismatch");
    if (!(scale > 0.0 && scale < 1.0))
        throw ConfigurationError("linearTangentialCurve: scale must lie in (0,1)");
    CVec orth = direction - hermitianInner(direction, xi.coords()) * xi.coords();
    const double len = orth.norm();
    if (len < 1e-12)
        throw ConfigurationError("linearTangentialCurve: direction parallel to the vertex");
    orth /= len;
    const CVec vertex = xi.coords();
    return Curve{[vertex, orth, scale](double t) { return BallPoint(t * vertex + scale * (1.0 - t) * orth); },
                 xi, tangentialBound};
}

CurveCheck restrictedCurveCheck(const Curve& curve, const std::vector<double>& ts, double tolCurve) {
    if (ts.empty()) throw ConfigurationError("restrictedCurveCheck: empty parameter sequence");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] >= 0.0 && ts[i] < 1.0))
            throw ConfigurationError("restrictedCurveCheck: parameters must lie in [0,1)");
        if (i > 0 && !(ts[i] > ts[i - 1]))
            throw ConfigurationError("restrictedCurveCheck: parameters must be strictly increasing");
    }

    const CVec& xi = curve.target.coords();
    std::vector<double> special(ts.size());
    double tangentialSup = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const BallPoint p = curve.sampler(ts[i]);  // leaves the ball -> DomainError from BallPoint
        if (p.dim() != curve.target.dim())
            throw DimensionError("restrictedCurveCheck: sample dimension mismatch");
        const Complex lambda = hermitianInner(p.coords(), xi);
        const double lambdaAbs = std::abs(lambda);
        const CVec orth = p.coords() - lambda * xi;
        special[i] = orth.squaredNorm() / (1.0 - lambdaAbs * lambdaAbs);
        tangentialSup = std::max(tangentialSup, std::abs(lambda - 1.0) / (1.0 - lambdaAbs));
    }

    // Tail estimate over the last tenth of the samples (at least one).
    const std::size_t tail = std::max<std::size_t>(1, ts.size() / 10);
    double specialLimit = 0.0;
    for (std::size_t i = ts.size() - tail; i < ts.size(); ++i) specialLimit += special[i];
    specialLimit /= static_cast<double>(tail);

    const bool restricted = specialLimit <= tolCurve && tangentialSup <= curve.tangentialBound;
    return CurveCheck{specialLimit, tangentialSup, restricted};
}

SphereGrid sphereGrid(int n, int count, std::uint64_t seed) {
    if (n < 1) throw DimensionError("sphereGrid: dimension must be >= 1");
    if (count < 1) throw ConfigurationError("sphereGrid: node count must be >= 1");
    Rng rng(seed);
    SphereGrid grid;
    grid.seed = seed;
    grid.nodes.reserve(count);
    grid.weights.assign(count, 1.0 / count);
    while (static_cast<int>(grid.nodes.size()) < count) {
        CVec g(n);
        for (int j = 0; j < n; ++j) g[j] = rng.complexGaussian();
        if (g.norm() < 1e-12) continue;  // redraw a degenerate sample
        grid.nodes.emplace_back(std::move(g));
    }
    return grid;
}

void writeSphereGridCsv(const SphereGrid& grid, std::ostream& out) {
    out << "# seed=" << grid.seed << "\n";
    const int n = grid.dim();
    for (int j = 0; j < n; ++j) out << "re" << j << ",im" << j << ",";
    out << "weight\n";
    out.precision(17);
    for (int i = 0; i < grid.size(); ++i) {
        const CVec& c = grid.nodes[i].coords();
        for (int j = 0; j < n; ++j) out << c[j].real() << "," << c[j].imag() << ",";
        out << grid.weights[i] << "\n";
    }
}

SphereGrid readSphereGridCsv(std::istream& in) {
    SphereGrid grid;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("seed=");
            if (pos != std::string::npos) grid.seed = std::stoull(line.substr(pos + 5));
            continue;
        }
        if (line.compare(0, 2, "re") == 0) continue;  // header row
        std::stringstream ss(line);
        std::vector<double> fields;
        std::string tok;
        while (std::getline(ss, tok, ',')) fields.push_back(std::stod(tok));
        if (fields.size() < 3 || fields.size() % 2 == 0)
            throw ConfigurationError("readSphereGridCsv: malformed row");
        const int n = static_cast<int>(fields.size() / 2);
        CVec c(n);
        for (int j = 0; j < n; ++j) c[j] = Complex(fields[2 * j], fields[2 * j + 1]);
        grid.nodes.emplace_back(std::move(c));
        grid.weights.push_back(fields.back());
    }
    return grid;
}

}  // namespace hball
