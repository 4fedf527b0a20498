#include "hball/clark.hpp"

#include <cmath>
#include <ostream>

#include "hball/parallel.hpp"

namespace hball {

double DiscreteMeasure::totalMass() const {
    double mass = 0.0;
    for (double w : weights) mass += w;
    for (const auto& [p, w] : designatedAtoms) mass += w;
    return mass;
}

int DiscreteMeasure::dim() const {
    if (!support.empty()) return support.front().dim();
    if (!designatedAtoms.empty()) return designatedAtoms.front().first.dim();
    return 0;
}

double poissonRHS(const Symbol& b, const ClarkParameter& alpha, const BallPoint& z) {
    const Complex bv = b.eval(z);
    const Complex a = alpha.value();
    const double direct = (1.0 - std::norm(bv)) / std::norm(a - bv);
    const double herglotz = ((a + bv) / (a - bv)).real();
    if (std::abs(direct - herglotz) > 1e-12 * std::max(1.0, std::abs(direct)))
        throw DomainError("poissonRHS: quotient and Herglotz form disagree beyond tolerance");
    if (b.isSchur() && !(direct > 0.0))
        throw DomainError("poissonRHS: non-positive value for a Schur symbol");
    return direct;
}

double poissonTransform(const DiscreteMeasure& mu, const BallPoint& z) {
    double sum = 0.0;
    for (std::size_t j = 0; j < mu.support.size(); ++j)
        sum += mu.weights[j] * invariantPoisson(z, mu.support[j]);
    for (const auto& [p, w] : mu.designatedAtoms) sum += w * invariantPoisson(z, p);
    return sum;
}

ClarkSolveReport solveClark(const ClarkProblem& problem) {
    const int n = problem.b.dimension();
    if (problem.grid.dim() != n) throw DimensionError("solveClark: grid dimension mismatch");
    const int gridCount = problem.grid.size();
    const int sampleCount = static_cast<int>(problem.interiorSamples.size());
    if (sampleCount < gridCount / 10)
        throw ConfigurationError("solveClark: need at least grid-size/10 interior samples");
    for (const SpherePoint& c : problem.atomCandidates)
        if (c.dim() != n) throw DimensionError("solveClark: atom candidate dimension mismatch");

    const int cols = gridCount + static_cast<int>(problem.atomCandidates.size());
    const int rows = sampleCount + (problem.massConstraint ? 1 : 0);

    Eigen::MatrixXd A(rows, cols);
    Eigen::VectorXd u(rows);
    parallelFor(sampleCount, [&](std::size_t k) {
        const BallPoint& z = problem.interiorSamples[k];
        for (int j = 0; j < gridCount; ++j) A(k, j) = invariantPoisson(z, problem.grid.nodes[j]);
        for (std::size_t a = 0; a < problem.atomCandidates.size(); ++a)
            A(k, gridCount + a) = invariantPoisson(z, problem.atomCandidates[a]);
        u[k] = poissonRHS(problem.b, problem.alpha, z);
    });

    const double totalMassTarget =
        poissonRHS(problem.b, problem.alpha, BallPoint::origin(n));
    if (problem.massConstraint) {
        const double rowWeight = 10.0 * A.topRows(sampleCount).cwiseAbs().maxCoeff();
        A.row(rows - 1).setConstant(rowWeight);
        u[rows - 1] = rowWeight * totalMassTarget;
    }

    const NnlsResult sol = nnlsSolve(A, u, problem.nnls);
    const double sampleResidual =
        (A.topRows(sampleCount) * sol.x - u.head(sampleCount)).norm() / u.head(sampleCount).norm();
    if (!sol.converged)
        throw SolverError("solveClark: NNLS hit the iteration cap (best residual " +
                              std::to_string(sampleResidual) + ")",
                          sampleResidual, sol.iterations);

    ClarkSolveReport report;
    report.measure.support = problem.grid.nodes;
    report.measure.weights.assign(sol.x.data(), sol.x.data() + gridCount);
    for (std::size_t a = 0; a < problem.atomCandidates.size(); ++a)
        report.measure.designatedAtoms.emplace_back(problem.atomCandidates[a],
                                                    sol.x[gridCount + a]);
    report.residualL2 = sampleResidual;
    report.totalMass = report.measure.totalMass();
    report.iterations = sol.iterations;
    for (const SpherePoint& p : problem.capPoints) {
        CapMassRow row{p, problem.capRadii, {}};
        for (double r : problem.capRadii) row.masses.push_back(capMass(report.measure, p, r));
        report.capMasses.push_back(std::move(row));
    }
    return report;
}

double clarkInnerIdentityCheck(const Symbol& b, const DiscreteMeasure& mu, const BallPoint& z,
                               const BallPoint& w) {
    if (z.norm() > 0.5 + 1e-12 || w.norm() > 0.5 + 1e-12)
        throw ConfigurationError("clarkInnerIdentityCheck: arguments must satisfy ||.|| <= 1/2");
    auto cauchyPair = [&](const SpherePoint& xi) {
        return szegoBoundary(xi, w).value * std::conj(szegoBoundary(xi, z).value);
    };
    Complex lhs = 0.0;
    for (std::size_t j = 0; j < mu.support.size(); ++j) lhs += mu.weights[j] * cauchyPair(mu.support[j]);
    for (const auto& [p, mass] : mu.designatedAtoms) lhs += mass * cauchyPair(p);

    const Complex rhs = hbKernel(b, z, w).value /
                        ((1.0 - std::conj(b.eval(w))) * (1.0 - b.eval(z)));
    return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

Complex vbTransform(const Symbol& b, const DiscreteMeasure& mu, const std::vector<Complex>& gValues,
                    const BallPoint& z) {
    if (gValues.size() != mu.support.size() + mu.designatedAtoms.size())
        throw DimensionError("vbTransform: g must be given on all support points and atoms");
    Complex integral = 0.0;
    for (std::size_t j = 0; j < mu.support.size(); ++j)
        integral += mu.weights[j] * gValues[j] * szego(z, mu.support[j]).value;
    for (std::size_t a = 0; a < mu.designatedAtoms.size(); ++a)
        integral += mu.designatedAtoms[a].second * gValues[mu.support.size() + a] *
                    szego(z, mu.designatedAtoms[a].first).value;
    return (1.0 - b.eval(z)) * integral;
}

double atomMassUpperBound(const Symbol& b, const ClarkParameter& alpha, const SpherePoint& xi0,
                          double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("atomMassUpperBound: r must lie in (0,1)");
    const BallPoint z = radialPoint(xi0, r);
    return poissonRHS(b, alpha, z) / invariantPoisson(z, xi0);
}

AbsContinuityResult absoluteContinuityCheck(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                            double cutoff, double relTol) {
    if (mu.support.size() != nu.support.size())
        throw ConfigurationError("absoluteContinuityCheck: measures on different grids");
    for (std::size_t j = 0; j < mu.support.size(); ++j)
        if (mu.support[j].coords() != nu.support[j].coords())
            throw ConfigurationError("absoluteContinuityCheck: measures on different grids");

    AbsContinuityResult result;
    result.singularMass = 0.0;
    double l2 = 0.0;
    for (std::size_t j = 0; j < mu.support.size(); ++j) {
        if (mu.weights[j] > cutoff) {
            const double d = nu.weights[j] / mu.weights[j];
            result.densityValues.push_back(d);
            l2 += mu.weights[j] * d * d;
        } else {
            result.singularMass += nu.weights[j];
        }
    }
    // Designated atoms of nu are matched against mu's atoms at the same point.
    for (const auto& [p, w] : nu.designatedAtoms) {
        double muAtom = 0.0;
        for (const auto& [q, v] : mu.designatedAtoms)
            if ((p.coords() - q.coords()).norm() < 1e-12) muAtom = v;
        if (muAtom > cutoff) {
            const double d = w / muAtom;
            result.densityValues.push_back(d);
            l2 += muAtom * d * d;
        } else {
            result.singularMass += w;
        }
    }
    result.l2NormInMu = std::sqrt(l2);
    result.comparable = result.singularMass <= relTol * std::max(nu.totalMass(), 1e-300);
    return result;
}

double capDistance(const SpherePoint& a, const SpherePoint& b) {
    return std::sqrt(std::abs(1.0 - hermitianInner(a.coords(), b.coords())));
}

double capMass(const DiscreteMeasure& mu, const SpherePoint& center, double radius) {
    double mass = 0.0;
    for (std::size_t j = 0; j < mu.support.size(); ++j)
        if (capDistance(mu.support[j], center) <= radius) mass += mu.weights[j];
    for (const auto& [p, w] : mu.designatedAtoms)
        if (capDistance(p, center) <= radius) mass += w;
    return mass;
}

std::vector<BallPoint> clarkInteriorSamples(const SphereGrid& grid,
                                            const std::vector<SpherePoint>& atomCandidates,
                                            const std::vector<double>& shells, int stride,
                                            int ladderDepth) {
    if (stride < 1) throw ConfigurationError("clarkInteriorSamples: stride must be >= 1");
    std::vector<BallPoint> samples;
    for (double r : shells) {
        if (!(r > 0.0 && r < 1.0))
            throw ConfigurationError("clarkInteriorSamples: shell radii must lie in (0,1)");
        for (int j = 0; j < grid.size(); j += stride) samples.push_back(radialPoint(grid.nodes[j], r));
    }
    for (const SpherePoint& xi : atomCandidates)
        for (int k = 1; k <= ladderDepth; ++k)
            samples.push_back(radialPoint(xi, 1.0 - std::ldexp(1.0, -k)));
    return samples;
}

void writeMeasureCsv(const DiscreteMeasure& mu, std::ostream& out) {
    const int n = mu.dim();
    for (int j = 0; j < n; ++j) out << "re" << j << ",im" << j << ",";
    out << "weight,designated\n";
    out.precision(17);
    auto row = [&](const SpherePoint& p, double w, int flag) {
        for (int j = 0; j < n; ++j)
            out << p.coords()[j].real() << "," << p.coords()[j].imag() << ",";
        out << w << "," << flag << "\n";
    };
    for (std::size_t j = 0; j < mu.support.size(); ++j) row(mu.support[j], mu.weights[j], 0);
    for (const auto& [p, w] : mu.designatedAtoms) row(p, w, 1);
}

}  // namespace hball
