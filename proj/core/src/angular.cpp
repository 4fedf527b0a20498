#include "hball/angular.hpp"

#include <cmath>
#include <future>

#include "hball/parallel.hpp"

namespace hball {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Two-level Richardson extrapolation along the geometric ladder h_k = 2^{-k}:
// exact for sequences a + b h + c h^2.
double richardson(const std::vector<double>& a) {
    const std::size_t m = a.size();
    if (m == 1) return a[0];
    if (m == 2) return 2.0 * a[1] - a[0];
    const double r1 = 2.0 * a[m - 1] - a[m - 2];
    const double r0 = 2.0 * a[m - 2] - a[m - 3];
    return (4.0 * r1 - r0) / 3.0;
}

// Declared divergent when the sequence keeps growing and at least doubles
// over the last four rungs.
bool divergesGeometrically(const std::vector<double>& a) {
    const std::size_t m = a.size();
    if (m < 5) return false;
    for (std::size_t i = m - 4; i < m; ++i)
        if (!(a[i] > a[i - 1])) return false;
    return a[m - 1] > 2.0 * a[m - 5];
}

double extrapolateOrInf(const std::vector<double>& a) {
    return divergesGeometrically(a) ? kInf : richardson(a);
}

}  // namespace

BoundaryQuotients boundaryQuotients(const Symbol& b, const BallPoint& z, const SpherePoint& xi,
                                    std::optional<Complex> eta) {
    if (z.dim() != b.dimension() || xi.dim() != b.dimension())
        throw DimensionError("boundaryQuotients: dimension mismatch");
    const Complex bv = b.eval(z);
    const double bAbs = std::abs(bv);
    BoundaryQuotients q;
    q.q1 = (1.0 - bAbs) / (1.0 - z.norm());
    q.q2 = hbKernelNorm(b, z).squared;
    if (eta) {
        const Complex denom = 1.0 - hermitianInner(z.coords(), xi.coords());
        q.adQuotient = std::conj(*eta) * (bv - *eta) / denom;
    }
    return q;
}

ADReport angularDerivativeEstimate(const Symbol& b, const SpherePoint& xi, int ladderDepth) {
    if (ladderDepth < 8)
        throw ConfigurationError("angularDerivativeEstimate: ladder depth must be >= 8");
    std::vector<double> q1s, q2s;
    std::vector<Complex> bValues;
    std::vector<BallPoint> rungs;
    for (int k = 1; k <= ladderDepth; ++k) {
        const BallPoint z = radialPoint(xi, 1.0 - std::ldexp(1.0, -k));
        const BoundaryQuotients q = boundaryQuotients(b, z, xi);
        q1s.push_back(q.q1);
        q2s.push_back(q.q2);
        bValues.push_back(b.eval(z));
        rungs.push_back(z);
    }

    ADReport report{xi, extrapolateOrInf(q1s), extrapolateOrInf(q2s), std::nullopt, false,
                    std::nullopt};
    const Complex bLast = bValues.back();
    if (std::abs(bLast) > 0.999) report.etaEstimate = bLast / std::abs(bLast);
    report.caratheodory = std::isfinite(report.cEstimate) && report.etaEstimate.has_value();

    if (report.etaEstimate) {
        const Complex eta = *report.etaEstimate;
        std::vector<double> adMod;
        for (std::size_t k = 0; k < rungs.size(); ++k) {
            const Complex denom = 1.0 - hermitianInner(rungs[k].coords(), xi.coords());
            adMod.push_back(std::abs(std::conj(eta) * (bValues[k] - eta) / denom));
        }
        if (!divergesGeometrically(adMod)) report.derivativeModulus = richardson(adMod);
    }
    return report;
}

JuliaCheck juliaInequalityCheck(const Symbol& b, const SpherePoint& p, Complex q, double alphaJ,
                                const std::vector<BallPoint>& samples) {
    JuliaCheck out{0, -kInf};
    for (const BallPoint& z : samples) {
        const Complex bv = b.eval(z);
        const double lhs = std::norm(1.0 - std::conj(q) * bv) /
                           std::norm(1.0 - hermitianInner(z.coords(), p.coords()));
        const double rhs =
            alphaJ * (1.0 - std::norm(bv)) / (1.0 - z.norm() * z.norm());
        if (lhs > rhs + 1e-9) ++out.violations;
        out.worstSlack = std::max(out.worstSlack, lhs - rhs);
    }
    return out;
}

AdmissibleLimitReport admissibleLimit(const Symbol& b, const CandidateFunction& f,
                                      const SpherePoint& xi, double aperture,
                                      const std::vector<Curve>& curves,
                                      const std::vector<double>& ts) {
    if (curves.empty()) throw ConfigurationError("admissibleLimit: no curves");
    const ApproachRegion region(xi, aperture);

    AdmissibleLimitReport report;
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const CurveCheck check = restrictedCurveCheck(curves[c], ts);
        if (!check.isRestricted)
            throw ConfigurationError("admissibleLimit: curve " + std::to_string(c) +
                                     " fails the restricted-approach conditions");
        std::vector<Complex> values;
        for (double t : ts) {
            const BallPoint z = curves[c].sampler(t);
            if (z.dim() != b.dimension())
                throw DimensionError("admissibleLimit: curve dimension mismatch");
            if (!inAdmissibleRegion(z, region))
                throw ConfigurationError("admissibleLimit: curve " + std::to_string(c) +
                                         " leaves the approach region at t=" + std::to_string(t));
            values.push_back(f.evaluator(z));
        }
        const std::size_t tail = std::max<std::size_t>(1, values.size() / 10);
        Complex mean = 0.0;
        double maxAbs = 0.0;
        for (std::size_t i = values.size() - tail; i < values.size(); ++i) {
            mean += values[i];
            maxAbs = std::max(maxAbs, std::abs(values[i]));
        }
        mean /= static_cast<double>(tail);
        report.limits.push_back(mean);
        report.finite.push_back(maxAbs <= 1e6);
    }

    report.spread = 0.0;
    report.allFinite = true;
    for (std::size_t i = 0; i < report.limits.size(); ++i) {
        if (!report.finite[i]) {
            report.allFinite = false;
            continue;
        }
        for (std::size_t j = i + 1; j < report.limits.size(); ++j)
            if (report.finite[j])
                report.spread = std::max(report.spread, std::abs(report.limits[i] - report.limits[j]));
    }
    return report;
}

double essentialNormLowerBound(const Symbol& b, const std::vector<Symbol>& phi,
                               const std::vector<BallPoint>& ladder) {
    const int n = b.dimension();
    if (static_cast<int>(phi.size()) != n)
        throw DimensionError("essentialNormLowerBound: phi needs one coordinate symbol per variable");
    for (const Symbol& component : phi)
        if (component.dimension() != n)
            throw DimensionError("essentialNormLowerBound: coordinate symbol dimension mismatch");
    if (ladder.empty()) throw ConfigurationError("essentialNormLowerBound: empty ladder");

    std::vector<double> ratios;
    for (const BallPoint& w : ladder) {
        CVec image(n);
        for (int j = 0; j < n; ++j) image[j] = phi[j].eval(w);
        if (!(image.norm() < 1.0))
            throw DomainError("essentialNormLowerBound: phi maps a ladder point outside the ball");
        const BallPoint phiW(std::move(image));
        ratios.push_back(hbKernelNorm(b, phiW).value / hbKernelNorm(b, w).value);
    }
    const std::size_t window = std::max<std::size_t>(1, ratios.size() / 4);
    double bound = 0.0;
    for (std::size_t i = ratios.size() - window; i < ratios.size(); ++i)
        bound = std::max(bound, ratios[i]);
    return bound;
}

EquivalenceRecord equivalenceHarness(const Symbol& b, const SpherePoint& xi,
                                     const ClarkParameter& alpha,
                                     const EquivalenceSettings& settings) {
    const int n = b.dimension();
    if (xi.dim() != n) throw DimensionError("equivalenceHarness: boundary point dimension mismatch");

    const ADReport ad = angularDerivativeEstimate(b, xi, settings.adLadderDepth);
    const Complex eta = ad.etaEstimate.value_or(alpha.value());

    auto runMembership = [&]() {
        const auto configs =
            nestedRadialConfigs(xi, settings.membershipLevels, settings.membershipRungsPerLevel,
                                settings.scaffoldCount, settings.seed);
        return membershipEstimate(b, boundaryKernelCandidate(b, xi, eta), configs,
                                  settings.membership);
    };
    auto runClark = [&]() {
        ClarkProblem problem{b,
                             alpha,
                             {},
                             sphereGrid(n, settings.gridCount, settings.seed + 1),
                             {xi},
                             true,
                             {xi},
                             {0.1, 0.2},
                             settings.nnls};
        problem.interiorSamples = clarkInteriorSamples(problem.grid, problem.atomCandidates,
                                                       settings.shells, settings.sampleStride,
                                                       settings.clarkLadderDepth);
        return solveClark(problem);
    };

    MembershipReport membership;
    ClarkSolveReport clark;
    if (threadCap() > 1) {
        auto memberFuture = std::async(std::launch::async, runMembership);
        clark = runClark();
        membership = memberFuture.get();
    } else {
        membership = runMembership();
        clark = runClark();
    }

    EquivalenceRecord record{b.label(),
                             xi,
                             alpha.value(),
                             n,
                             std::isfinite(ad.cEstimate),
                             ad.cEstimate,
                             std::isfinite(ad.q2Limit),
                             ad.q2Limit,
                             ad.caratheodory,
                             ad.etaEstimate,
                             membership.verdict,
                             membership.boundValue,
                             clark.measure.designatedAtoms.front().second,
                             clark.residualL2,
                             false};
    if (n == 1) {
        const bool bounded = record.membershipVerdict == MembershipVerdict::Bounded;
        const bool atom = record.atomMass > settings.atomThreshold;
        record.consistent_n1 = (record.cFinite == bounded) && (bounded == atom) &&
                               (atom == record.caratheodory);
    }
    return record;
}

}  // namespace hball
