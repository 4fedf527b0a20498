#pragma once

#include <optional>

#include "hball/clark.hpp"
#include "hball/hbspace.hpp"

namespace hball {

struct BoundaryQuotients {
    double q1;  // (1 - |b(z)|) / (1 - ||z||), the Caratheodory quotient
    double q2;  // (1 - |b(z)|^2) / (1 - ||z||^2)^n = ||K^b(.,z)||_b^2
    std::optional<Complex> adQuotient;  // conj(eta)(b(z) - eta) / (1 - <z,xi>)
};

/// Both boundary quotients at z toward xi. They coincide in the limit only
/// for n = 1; q2 is the quantity controlling kernel membership and Clark
/// atoms, q1 the classical derivative bound. Both are always reported.
BoundaryQuotients boundaryQuotients(const Symbol& b, const BallPoint& z, const SpherePoint& xi,
                                    std::optional<Complex> eta = std::nullopt);

struct ADReport {
    SpherePoint xi;
    double cEstimate;  // extrapolated liminf of q1 along the radial ladder
    double q2Limit;    // same extrapolation of q2
    std::optional<Complex> etaEstimate;
    bool caratheodory;  // finite c and unimodular boundary value
    std::optional<double> derivativeModulus;
};

/// Radial-ladder estimate (r_k = 1 - 2^{-k}, k <= ladderDepth) of the
/// angular-derivative data at xi. Limits are Richardson-extrapolated along
/// the geometric ladder and declared infinite when the quotient keeps
/// doubling over the last four rungs; the output is a liminf estimate.
ADReport angularDerivativeEstimate(const Symbol& b, const SpherePoint& xi, int ladderDepth = 20);

struct JuliaCheck {
    int violations;
    double worstSlack;
};

/// Counts samples violating |1 - conj(q) b(z)|^2 / |1 - <z,p>|^2 <=
/// alphaJ (1 - |b(z)|^2) / (1 - ||z||^2) beyond a 1e-9 slack. alphaJ should
/// be a finite liminf estimate of q1 at p.
JuliaCheck juliaInequalityCheck(const Symbol& b, const SpherePoint& p, Complex q, double alphaJ,
                                const std::vector<BallPoint>& samples);

struct AdmissibleLimitReport {
    std::vector<Complex> limits;  // tail estimate per curve
    std::vector<bool> finite;
    double spread;  // max pairwise difference of the finite curve limits
    bool allFinite;
};

/// Limit of f along each curve (sampled at ts), all curves constrained to
/// the approach region of the given aperture and to pass the restricted
/// check. A small spread across curves indicates a single admissible limit.
AdmissibleLimitReport admissibleLimit(const Symbol& b, const CandidateFunction& f,
                                      const SpherePoint& xi, double aperture,
                                      const std::vector<Curve>& curves,
                                      const std::vector<double>& ts);

/// limsup estimate of ||K^b(.,phi(w))|| / ||K^b(.,w)|| along the ladder: the
/// essential-norm lower bound for the composition operator with symbol phi
/// (one coordinate Symbol per component of phi).
double essentialNormLowerBound(const Symbol& b, const std::vector<Symbol>& phi,
                               const std::vector<BallPoint>& ladder);

struct EquivalenceSettings {
    int adLadderDepth = 20;
    int membershipLevels = 8;
    int membershipRungsPerLevel = 2;
    int scaffoldCount = 6;
    int gridCount = 400;
    std::vector<double> shells = {0.3, 0.6, 0.85};
    int sampleStride = 4;
    int clarkLadderDepth = 10;
    double atomThreshold = 0.1;
    std::uint64_t seed = 1;
    MembershipOptions membership;
    NnlsOptions nnls;
};

/// Per-boundary-point record of all four indicators. consistent_n1 asserts
/// their agreement only in dimension one; in higher dimensions the record
/// stores the indicators without asserting any equivalence.
struct EquivalenceRecord {
    std::string symbolLabel;
    SpherePoint xi;
    Complex alpha;
    int dimension;
    bool cFinite;
    double cEstimate;
    bool q2Finite;
    double q2Limit;
    bool caratheodory;
    std::optional<Complex> eta;
    MembershipVerdict membershipVerdict;
    double membershipBound;
    double atomMass;
    double clarkResidual;
    bool consistent_n1;
};

EquivalenceRecord equivalenceHarness(const Symbol& b, const SpherePoint& xi,
                                     const ClarkParameter& alpha,
                                     const EquivalenceSettings& settings = {});

}  // namespace hball
