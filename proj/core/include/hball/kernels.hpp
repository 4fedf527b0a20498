#pragma once

#include "hball/geometry.hpp"
#include "hball/symbols.hpp"

namespace hball {

// Pairings closer to the singular set <z,w> = 1 than this are rejected.
inline constexpr double kSingularityTol = 1e-14;

struct KernelValue {
    Complex value;
    double conditionHint;  // |1 - <z,w>|, proximity to the singular set
};

/// Szego kernel K(z,w) = (1 - <z,w>)^{-n}. With a boundary second argument
/// this is the Cauchy kernel C(z,xi); there is no separate operation.
KernelValue szego(const BallPoint& z, const BallPoint& w);
KernelValue szego(const BallPoint& z, const SpherePoint& w);
// Both arguments on the sphere (used when integrating kernels against
/// boundary measures); the pairing must stay off the singular set.
KernelValue szegoBoundary(const SpherePoint& z, const BallPoint& w);

/// Invariant Poisson kernel P(z,xi) = ((1 - ||z||^2) / |1 - <z,xi>|^2)^n.
double invariantPoisson(const BallPoint& z, const SpherePoint& xi);

/// H(b) reproducing kernel K^b(z,w) = (1 - conj(b(w)) b(z)) K(z,w),
/// holomorphic in z and conjugate-holomorphic in w.
KernelValue hbKernel(const Symbol& b, const BallPoint& z, const BallPoint& w);

struct KernelNorm {
    double squared;  // (1 - |b(z)|^2) / (1 - ||z||^2)^n = K^b(z,z)
    double value;    // its square root
};

/// Norm of the kernel section K^b(.,z).
KernelNorm hbKernelNorm(const Symbol& b, const BallPoint& z);

}  // namespace hball
