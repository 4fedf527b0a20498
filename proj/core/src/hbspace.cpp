#include "hball/hbspace.hpp"

#include <algorithm>
#include <cmath>

#include "hball/parallel.hpp"
#include "hball/rng.hpp"

namespace hball {

PointConfiguration::PointConfiguration(std::vector<BallPoint> points) : points_(std::move(points)) {
    if (points_.empty()) throw ConfigurationError("PointConfiguration: empty point set");
    const int n = points_.front().dim();
    separation_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].dim() != n)
            throw DimensionError("PointConfiguration: mixed point dimensions");
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            separation_ = std::min(separation_, (points_[i].coords() - points_[j].coords()).norm());
    }
    if (points_.size() > 1 && !(separation_ > 1e-14))
        throw ConfigurationError("PointConfiguration: coincident points");
}

GramSection gramMatrix(const Symbol& b, const PointConfiguration& config, double regEpsilon) {
    const int m = config.size();
    Eigen::MatrixXcd G(m, m);
    const auto& pts = config.points();
    parallelFor(static_cast<std::size_t>(m) * m, [&](std::size_t e) {
        const int i = static_cast<int>(e / m), j = static_cast<int>(e % m);
        G(i, j) = hbKernel(b, pts[i], pts[j]).value;
    });
    // PSD sanity: a failure here means the symbol is not a contractive
    // multiplier (or the assembly is broken), not an ill-conditioned config.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    const double lmax = es.eigenvalues().maxCoeff();
    if (lmin < -1e-8 * std::max(lmax, 1e-300))
        throw DomainError("gramMatrix: section not positive semidefinite (min eigenvalue " +
                          std::to_string(lmin) + ")");
    return GramSection{config, std::move(G), regEpsilon};
}

NormEstimate minNormInterpolantNorm(const GramSection& gram, const Eigen::VectorXcd& values,
                                    double rangeTol) {
    if (values.size() != gram.config.size())
        throw DimensionError("minNormInterpolantNorm: value vector length != config size");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram.matrix);
    const Eigen::VectorXd lam = es.eigenvalues();
    const double lmax = lam.maxCoeff();
    const double cutoff = gram.regEpsilon * std::max(lmax, 0.0);
    const Eigen::VectorXcd y = es.eigenvectors().adjoint() * values;

    double norm2 = 0.0, outside2 = 0.0;
    for (int i = 0; i < lam.size(); ++i) {
        if (lam[i] > cutoff)
            norm2 += std::norm(y[i]) / lam[i];
        else
            outside2 += std::norm(y[i]);
    }
    const double vnorm = values.norm();
    if (vnorm > 0.0 && std::sqrt(outside2) > rangeTol * vnorm) return NormEstimate{false, norm2};
    return NormEstimate{true, norm2};
}

double reproducingCheck(const Symbol& b, const PointConfiguration& config,
                        const Eigen::VectorXcd& coeffs, const BallPoint& z) {
    if (coeffs.size() != config.size())
        throw DimensionError("reproducingCheck: coefficient length != config size");
    for (const BallPoint& p : config.points())
        if ((p.coords() - z.coords()).norm() < 1e-14)
            throw ConfigurationError("reproducingCheck: z coincides with a configuration point");

    std::vector<BallPoint> augmented = config.points();
    augmented.push_back(z);
    const PointConfiguration augConfig(std::move(augmented));
    const GramSection aug = gramMatrix(b, augConfig);
    const int m = config.size();

    Complex direct = 0.0;  // f(z) evaluated through the kernel definition
    for (int j = 0; j < m; ++j) direct += coeffs[j] * hbKernel(b, z, config.points()[j]).value;
    Complex viaGram = 0.0;  // <f, K^b(.,z)>_b read off the augmented section
    for (int j = 0; j < m; ++j) viaGram += coeffs[j] * aug.matrix(m, j);
    return std::abs(direct - viaGram);
}

Complex hbInnerProduct(const GramSection& gram, const Eigen::VectorXcd& a,
                       const Eigen::VectorXcd& c) {
    if (a.size() != gram.config.size() || c.size() != gram.config.size())
        throw DimensionError("hbInnerProduct: coefficient length != config size");
    return (c.adjoint() * gram.matrix * a)(0, 0);
}

CandidateFunction constantCandidate(Complex value) {
    return CandidateFunction{[value](const BallPoint&) { return value; }, "constant"};
}

CandidateFunction coordinateCandidate(int j) {
    return CandidateFunction{[j](const BallPoint& z) {
                                 if (j < 0 || j >= z.dim())
                                     throw DimensionError("coordinateCandidate: index out of range");
                                 return z.coords()[j];
                             },
                             "coordinate" + std::to_string(j)};
}

CandidateFunction boundaryKernelCandidate(const Symbol& b, const SpherePoint& xi, Complex eta) {
    const Symbol bc = b;
    const SpherePoint target = xi;
    return CandidateFunction{
        [bc, target, eta](const BallPoint& z) {
            return (eta - bc.eval(z)) * szego(z, target).value;
        },
        "boundaryKernel"};
}

CandidateFunction szegoCandidate(const SpherePoint& xi) {
    const SpherePoint target = xi;
    return CandidateFunction{[target](const BallPoint& z) { return szego(z, target).value; },
                             "szego"};
}

std::string verdictName(MembershipVerdict v) {
    switch (v) {
        case MembershipVerdict::Bounded: return "bounded";
        case MembershipVerdict::Diverging: return "diverging";
        case MembershipVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

bool containsPoint(const PointConfiguration& config, const BallPoint& p) {
    for (const BallPoint& q : config.points())
        if (q.coords() == p.coords()) return true;
    return false;
}

// Least-squares slope of ln(estimate) vs ln(size) over sizes within a decade
// of the last one.
double tailLogLogSlope(const std::vector<int>& sizes, const std::vector<double>& estimates) {
    std::vector<double> xs, ys;
    const double lastSize = sizes.back();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] >= lastSize / 10.0 && estimates[i] > 0.0) {
            xs.push_back(std::log(static_cast<double>(sizes[i])));
            ys.push_back(std::log(estimates[i]));
        }
    }
    if (xs.size() < 2) return 0.0;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return den == 0.0 ? 0.0 : num / den;
}

}  // namespace

MembershipReport membershipEstimate(const Symbol& b, const CandidateFunction& f,
                                    const std::vector<PointConfiguration>& configs,
                                    const MembershipOptions& opt) {
    if (configs.empty()) throw ConfigurationError("membershipEstimate: no configurations");
    for (std::size_t k = 1; k < configs.size(); ++k) {
        if (configs[k].size() <= configs[k - 1].size())
            throw ConfigurationError("membershipEstimate: configurations must grow strictly");
        for (const BallPoint& p : configs[k - 1].points())
            if (!containsPoint(configs[k], p))
                throw ConfigurationError("membershipEstimate: configurations are not nested");
    }

    MembershipReport report;
    report.label = f.label;
    bool infeasible = false;
    for (const PointConfiguration& config : configs) {
        const GramSection gram = gramMatrix(b, config, opt.regEpsilon);
        Eigen::VectorXcd v(config.size());
        for (int i = 0; i < config.size(); ++i) v[i] = f.evaluator(config.points()[i]);
        const NormEstimate est = minNormInterpolantNorm(gram, v, opt.rangeTol);
        if (!est.feasible) {
            infeasible = true;  // data left the span: nothing in H(b) interpolates it
            break;
        }
        report.configSizes.push_back(config.size());
        report.normEstimates.push_back(est.value);
    }

    report.boundValue = report.normEstimates.empty() ? 0.0 : report.normEstimates.back();
    if (infeasible) {
        report.verdict = MembershipVerdict::Diverging;
        return report;
    }

    const std::size_t count = report.normEstimates.size();
    const double last = report.normEstimates.back();
    const double half = report.normEstimates[(count - 1) / 2];
    const double tiny = 1e-14;
    if ((last <= tiny && half <= tiny) || last - half < opt.plateauTol * std::max(half, tiny)) {
        report.verdict = MembershipVerdict::Bounded;
    } else if (tailLogLogSlope(report.configSizes, report.normEstimates) > opt.slopeTol) {
        report.verdict = MembershipVerdict::Diverging;
    } else {
        report.verdict = MembershipVerdict::Inconclusive;
    }
    return report;
}

std::vector<PointConfiguration> nestedRadialConfigs(const SpherePoint& xi, int levels,
                                                    int rungsPerLevel, int scaffoldCount,
                                                    std::uint64_t seed) {
    if (levels < 1 || rungsPerLevel < 1)
        throw ConfigurationError("nestedRadialConfigs: need at least one level and one rung");
    const int n = xi.dim();
    Rng rng(seed);

    std::vector<BallPoint> scaffold;
    int guard = 0;
    while (static_cast<int>(scaffold.size()) < scaffoldCount) {
        if (++guard > 1000 * (scaffoldCount + 1))
            throw ConfigurationError("nestedRadialConfigs: could not separate scaffold points");
        CVec g(n);
        for (int j = 0; j < n; ++j) g[j] = rng.complexGaussian();
        if (g.norm() < 1e-12) continue;
        g *= rng.uniform(0.25, 0.55) / g.norm();
        BallPoint candidate(std::move(g));
        bool separated = true;
        for (const BallPoint& p : scaffold)
            if ((p.coords() - candidate.coords()).norm() < 0.05) separated = false;
        if (separated) scaffold.push_back(std::move(candidate));
    }

    std::vector<PointConfiguration> out;
    std::vector<BallPoint> pts = scaffold;
    for (int level = 1; level <= levels; ++level) {
        for (int r = 0; r < rungsPerLevel; ++r) {
            const int k = (level - 1) * rungsPerLevel + r + 1;
            pts.push_back(radialPoint(xi, 1.0 - std::ldexp(1.0, -k)));
        }
        out.emplace_back(pts);
    }
    return out;
}

SupDefResult supDefNormEstimate(const Symbol& b, const MultiIndexPoly& f, int degree,
                                const SupDefOptions& opt) {
    if (!b.taylor())
        throw UnsupportedError("supDefNormEstimate: symbol '" + b.label() + "' is not polynomial");
    const int n = b.dimension();
    if (f.vars() != n) throw DimensionError("supDefNormEstimate: candidate dimension mismatch");
    if (degree < f.degree())
        throw ConfigurationError("supDefNormEstimate: degree must cover deg f");

    const MultiIndexPoly& bp = *b.taylor();
    const int degB = bp.degree();
    const std::vector<MultiIndex> gBasis = multiIndicesUpTo(n, degree);
    const std::vector<MultiIndex> rangeBasis = multiIndicesUpTo(n, degree + degB);
    std::map<MultiIndex, int> rangeIndex;
    for (std::size_t i = 0; i < rangeBasis.size(); ++i) rangeIndex[rangeBasis[i]] = static_cast<int>(i);

    Eigen::VectorXd sqrtWg(gBasis.size()), sqrtWr(rangeBasis.size());
    for (std::size_t i = 0; i < gBasis.size(); ++i) sqrtWg[i] = std::sqrt(monomialNormSq(gBasis[i], n));
    for (std::size_t i = 0; i < rangeBasis.size(); ++i)
        sqrtWr[i] = std::sqrt(monomialNormSq(rangeBasis[i], n));

    // Multiplication by b between orthonormalized monomial bases.
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(rangeBasis.size(), gBasis.size());
    for (std::size_t c = 0; c < gBasis.size(); ++c) {
        for (const auto& [beta, coef] : bp.table()) {
            MultiIndex gamma(n);
            for (int j = 0; j < n; ++j) gamma[j] = gBasis[c][j] + beta[j];
            const int r = rangeIndex.at(gamma);
            B(r, c) += coef * sqrtWr[r] / sqrtWg[c];
        }
    }

    Eigen::VectorXcd fhat = Eigen::VectorXcd::Zero(rangeBasis.size());
    for (const auto& [alpha, coef] : f.table()) {
        const auto it = rangeIndex.find(alpha);
        if (it == rangeIndex.end())
            throw ConfigurationError("supDefNormEstimate: candidate degree exceeds the basis");
        fhat[it->second] = coef * sqrtWr[it->second];
    }

    const Eigen::MatrixXcd M =
        Eigen::MatrixXcd::Identity(gBasis.size(), gBasis.size()) - B.adjoint() * B;
    const Eigen::VectorXcd rhs = B.adjoint() * fhat;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    const Eigen::VectorXd lam = es.eigenvalues();
    const Eigen::VectorXcd y = es.eigenvectors().adjoint() * rhs;

    // ||b||_inf <= 1 makes M PSD with spectrum in [0,1]; an absolute cutoff is
    // meaningful in these coordinates.
    double value = fhat.squaredNorm();
    double kernelMass2 = 0.0;
    for (int i = 0; i < lam.size(); ++i) {
        if (lam[i] > opt.kernelCutoff)
            value += std::norm(y[i]) / lam[i];
        else
            kernelMass2 += std::norm(y[i]);
    }
    if (std::sqrt(kernelMass2) > opt.componentTol * (1.0 + fhat.norm()))
        return SupDefResult{false, std::numeric_limits<double>::infinity()};
    return SupDefResult{true, value};
}

}  // namespace hball
