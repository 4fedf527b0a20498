#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hball/kernels.hpp"
#include "hball/multiindex.hpp"
#include "hball/symbols.hpp"

namespace hball {

/// A finite set of pairwise-distinct interior points, the index set of a
/// finite section of H(b).
class PointConfiguration {
public:
    explicit PointConfiguration(std::vector<BallPoint> points);

    const std::vector<BallPoint>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }
    int dim() const { return points_.front().dim(); }
    double separation() const { return separation_; }

private:
    std::vector<BallPoint> points_;
    double separation_;
};

/// Kernel matrix of a point configuration, entry[i][j] = K^b(p_i, p_j).
/// Hermitian and positive semidefinite (up to rounding) for Schur symbols.
struct GramSection {
    PointConfiguration config;
    Eigen::MatrixXcd matrix;
    double regEpsilon;  // relative spectral cutoff for pseudo-inverse solves
};

GramSection gramMatrix(const Symbol& b, const PointConfiguration& config, double regEpsilon = 1e-10);

/// Result of a minimal-norm interpolation: value is the squared H(b) norm of
/// the minimal-norm element of the kernel span interpolating the data, or
/// infeasible when the data has a component outside the numerical range of
/// the Gram matrix (no such element exists).
struct NormEstimate {
    bool feasible;
    double value;
};

NormEstimate minNormInterpolantNorm(const GramSection& gram, const Eigen::VectorXcd& values,
                                    double rangeTol = 1e-6);

/// Residual of the reproducing identity f(z) = <f, K^b(.,z)>_b for
/// f = sum coeffs_j K^b(., w_j), with the inner product taken from the
/// augmented Gram section on config + {z}.
double reproducingCheck(const Symbol& b, const PointConfiguration& config,
                        const Eigen::VectorXcd& coeffs, const BallPoint& z);

/// <sum a_i K^b(.,w_i), sum c_j K^b(.,w_j)>_b = c^H G a.
Complex hbInnerProduct(const GramSection& gram, const Eigen::VectorXcd& a,
                       const Eigen::VectorXcd& c);

struct CandidateFunction {
    std::function<Complex(const BallPoint&)> evaluator;
    std::string label;
};

CandidateFunction constantCandidate(Complex value);
CandidateFunction coordinateCandidate(int j);
// z -> (eta - b(z)) / (1 - <z,xi>)^n, the boundary kernel candidate.
CandidateFunction boundaryKernelCandidate(const Symbol& b, const SpherePoint& xi, Complex eta);
// z -> (1 - <z,xi>)^{-n}.
CandidateFunction szegoCandidate(const SpherePoint& xi);

enum class MembershipVerdict { Bounded, Diverging, Inconclusive };
std::string verdictName(MembershipVerdict v);

struct MembershipOptions {
    double plateauTol = 0.05;  // relative growth of the last vs half-sequence estimate
    double slopeTol = 0.25;    // log-log slope of estimates vs config size
    double rangeTol = 1e-6;
    double regEpsilon = 1e-10;
};

struct MembershipReport {
    std::string label;
    std::vector<int> configSizes;
    std::vector<double> normEstimates;  // squared-norm estimates, nondecreasing
    MembershipVerdict verdict;
    double boundValue;  // last feasible estimate
};

/// Membership evidence for f in H(b) from minimal-norm interpolation along a
/// strictly nested family of configurations. The estimates are certified
/// lower bounds of ||f||_b^2; the verdict thresholds are heuristics and
/// "inconclusive" is an honest outcome.
MembershipReport membershipEstimate(const Symbol& b, const CandidateFunction& f,
                                    const std::vector<PointConfiguration>& configs,
                                    const MembershipOptions& opt = {});

/// Strictly nested configurations: a fixed well-separated interior scaffold
/// plus a radial geometric ladder r_k = 1 - 2^{-k} toward xi, deepened
/// rungsPerLevel at a time.
std::vector<PointConfiguration> nestedRadialConfigs(const SpherePoint& xi, int levels,
                                                    int rungsPerLevel, int scaffoldCount,
                                                    std::uint64_t seed);

struct SupDefOptions {
    double kernelCutoff = 1e-10;  // eigenvalues of I - B^H B below this count as kernel
    double componentTol = 1e-8;   // rhs mass on the kernel that flags unboundedness
};

struct SupDefResult {
    bool bounded;
    double value;
};

/// The sup-definition norm: sup over polynomials g with deg g <= degree of
/// ||f + b g||_2^2 - ||g||_2^2, solved as a concave quadratic maximization in
/// monomial coordinates. Returns unbounded when the stationarity system is
/// inconsistent (f has mass on the kernel of I - B^H B). Nondecreasing in
/// degree.
SupDefResult supDefNormEstimate(const Symbol& b, const MultiIndexPoly& f, int degree,
                                const SupDefOptions& opt = {});

}  // namespace hball
