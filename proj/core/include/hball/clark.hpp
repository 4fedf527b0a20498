#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "hball/kernels.hpp"
#include "hball/nnls.hpp"
#include "hball/symbols.hpp"

namespace hball {

/// The unimodular parameter of a Clark measure.
class ClarkParameter {
public:
    explicit ClarkParameter(Complex alpha) : alpha_(alpha) {
        if (std::abs(std::abs(alpha) - 1.0) > 1e-12)
            throw ConfigurationError("ClarkParameter: |alpha| must be 1");
    }
    Complex value() const { return alpha_; }

private:
    Complex alpha_;
};

/// Atoms-with-weights on the sphere. Grid-supported weights plus optional
/// designated atoms kept outside the grid (candidate point masses).
struct DiscreteMeasure {
    std::vector<SpherePoint> support;
    std::vector<double> weights;
    std::vector<std::pair<SpherePoint, double>> designatedAtoms;

    double totalMass() const;
    int dim() const;
};

/// Boundary data of the Clark measure: u(z) = (1-|b(z)|^2)/|alpha-b(z)|^2
/// = Re((alpha+b)/(alpha-b)); both routes are evaluated and cross-checked.
double poissonRHS(const Symbol& b, const ClarkParameter& alpha, const BallPoint& z);

/// sum_j weight_j P(z, xi_j), designated atoms included. At z = 0 this is the
/// total mass.
double poissonTransform(const DiscreteMeasure& mu, const BallPoint& z);

struct ClarkProblem {
    Symbol b;
    ClarkParameter alpha;
    std::vector<BallPoint> interiorSamples;
    SphereGrid grid;
    std::vector<SpherePoint> atomCandidates;  // get dedicated columns in the solve
    bool massConstraint = true;
    std::vector<SpherePoint> capPoints;
    std::vector<double> capRadii;
    NnlsOptions nnls;
};

struct CapMassRow {
    SpherePoint point;
    std::vector<double> radii;
    std::vector<double> masses;
};

struct ClarkSolveReport {
    DiscreteMeasure measure;
    double residualL2;  // ||A x - u|| / ||u|| over the interior-sample rows
    double totalMass;
    std::vector<CapMassRow> capMasses;
    int iterations;
};

/// Inverse Poisson problem: nonnegative weights on the grid nodes (plus one
/// column per designated-atom candidate) fitting u at the interior samples;
/// optionally with the total-mass equality appended as a heavily weighted
/// row. The discrete representation is not unique and the report never
/// claims it is; only its Poisson data matters downstream.
ClarkSolveReport solveClark(const ClarkProblem& problem);

/// Relative residual of the measure-space kernel identity
/// int K(xi,w) conj(K(xi,z)) dmu = K^b(z,w) / ((1-conj(b(w)))(1-b(z))),
/// stated for the alpha = 1 Clark measure. Callers keep ||z||,||w|| <= 0.5
/// so the quadrature on the solved measure is trustworthy.
double clarkInnerIdentityCheck(const Symbol& b, const DiscreteMeasure& mu, const BallPoint& z,
                               const BallPoint& w);

/// (1 - b(z)) sum_j weight_j g_j (1 - <z,xi_j>)^{-n}. gValues lists g on the
/// grid support first, then on the designated atoms.
Complex vbTransform(const Symbol& b, const DiscreteMeasure& mu, const std::vector<Complex>& gValues,
                    const BallPoint& z);

/// u(r xi0) / P(r xi0, xi0): an upper bound for the atom mass of the Clark
/// measure at xi0, valid for every r in (0,1); scan r -> 1 to tighten it.
double atomMassUpperBound(const Symbol& b, const ClarkParameter& alpha, const SpherePoint& xi0,
                          double r);

struct AbsContinuityResult {
    std::vector<double> densityValues;  // nu_j / mu_j where mu_j > cutoff
    double l2NormInMu;                  // (sum mu_j density_j^2)^{1/2}
    bool comparable;                    // nu puts (almost) no mass where mu vanishes
    double singularMass;                // nu-mass on {mu_j <= cutoff}
};

/// Discrete surrogate for "nu absolutely continuous w.r.t. mu with
/// L^2(mu) density". Both measures must share the grid support.
AbsContinuityResult absoluteContinuityCheck(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                            double cutoff = 1e-12, double relTol = 1e-8);

// Cap pseudo-metric d(xi,zeta) = |1 - <xi,zeta>|^{1/2}.
double capDistance(const SpherePoint& a, const SpherePoint& b);
// Mass of the measure within cap distance radius of center.
double capMass(const DiscreteMeasure& mu, const SpherePoint& center, double radius);

/// Sample design for Clark solves: radial shells of grid-subsampled
/// directions plus a geometric ladder toward each candidate atom; the
/// near-boundary ladder rows are what separate atoms from density.
std::vector<BallPoint> clarkInteriorSamples(const SphereGrid& grid,
                                            const std::vector<SpherePoint>& atomCandidates,
                                            const std::vector<double>& shells = {0.3, 0.6, 0.85},
                                            int stride = 4, int ladderDepth = 10);

void writeMeasureCsv(const DiscreteMeasure& mu, std::ostream& out);

}  // namespace hball
