#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "hball/errors.hpp"

namespace hball {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;

/// Hermitian pairing <z,w> = sum_j z_j * conj(w_j), conjugate-linear in the
/// second slot. Every kernel formula in the library is written against this
/// convention.
Complex hermitianInner(const CVec& z, const CVec& w);

/// A point strictly inside the unit ball of C^n. Immutable; caches the
/// Euclidean norm.
class BallPoint {
public:
    explicit BallPoint(CVec coords);

    static BallPoint origin(int n);

    const CVec& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    double norm() const { return norm_; }

private:
    CVec coords_;
    double norm_;
};

/// A point of the unit sphere S^n (the boundary of the ball of C^n, real
/// dimension 2n-1). Renormalized on construction.
class SpherePoint {
public:
    explicit SpherePoint(CVec coords);

    // The coordinate axis point e_j (0-based j).
    static SpherePoint axis(int n, int j);

    const CVec& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }

private:
    CVec coords_;
};

BallPoint radialPoint(const SpherePoint& xi, double r);

/// Admissible (Koranyi) approach region with vertex xi and aperture alpha:
/// { z : |1 - <z,xi>| < (alpha/2)(1 - ||z||^2) }.
class ApproachRegion {
public:
    ApproachRegion(SpherePoint vertex, double aperture);

    const SpherePoint& vertex() const { return vertex_; }
    double aperture() const { return aperture_; }

private:
    SpherePoint vertex_;
    double aperture_;
};

bool inAdmissibleRegion(const BallPoint& z, const ApproachRegion& region);

/// A curve t in [0,1) -> B^n approaching a boundary target, together with the
/// tangential bound M of the restricted-approach condition.
struct Curve {
    std::function<BallPoint(double)> sampler;
    SpherePoint target;
    double tangentialBound;
};

// The radius t -> t*xi.
Curve radialCurve(const SpherePoint& xi, double tangentialBound = 2.0);

// t -> t*xi + scale*(1-t)*v with v the component of direction orthogonal to
// xi, normalized. Requires 0 < scale < 1 so samples stay inside the ball.
Curve linearTangentialCurve(const SpherePoint& xi, const CVec& direction, double scale = 0.8,
                            double tangentialBound = 2.0);

struct CurveCheck {
    double specialLimit;   // tail estimate of |L(t) - l(t) xi|^2 / (1 - |l(t)|^2)
    double tangentialSup;  // sup_t |l(t) - 1| / (1 - |l(t)|)
    bool isRestricted;
};

/// Evaluates the two restricted-approach conditions along the given parameter
/// samples. ts must be non-empty, strictly increasing with sup < 1; the first
/// condition is judged on the tail (last tenth) of the samples against
/// tolCurve, the second against the curve's own bound.
CurveCheck restrictedCurveCheck(const Curve& curve, const std::vector<double>& ts,
                                double tolCurve = 1e-3);

/// Quadrature nodes and weights for the normalized surface measure of S^n.
struct SphereGrid {
    std::vector<SpherePoint> nodes;
    std::vector<double> weights;
    std::uint64_t seed = 0;

    int dim() const { return nodes.empty() ? 0 : nodes.front().dim(); }
    int size() const { return static_cast<int>(nodes.size()); }
};

/// Monte Carlo grid: count i.i.d. uniform points of S^n (normalized complex
/// Gaussians), equal weights 1/count. Deterministic for a fixed seed.
SphereGrid sphereGrid(int n, int count, std::uint64_t seed);

// CSV with one node per row (re/im per coordinate, then weight); the seed is
// recorded in a leading comment line.
void writeSphereGridCsv(const SphereGrid& grid, std::ostream& out);
SphereGrid readSphereGridCsv(std::istream& in);

}  // namespace hball
