#include "hball/kernels.hpp"

#include <cmath>

namespace hball {

namespace {

Complex ipow(Complex base, int k) {
    Complex out = 1.0;
    for (int i = 0; i < k; ++i) out *= base;
    return out;
}

double ipow(double base, int k) {
    double out = 1.0;
    for (int i = 0; i < k; ++i) out *= base;
    return out;
}

// (1 - <z,w>)^{-n}; integer exponent, so this is the principal power.
KernelValue szegoFromPairing(Complex pairing, int n) {
    const Complex base = 1.0 - pairing;
    const double hint = std::abs(base);
    if (hint < kSingularityTol)
        throw SingularityError("szego: pairing within " + std::to_string(hint) +
                                   " of the singular set",
                               hint);
    return KernelValue{1.0 / ipow(base, n), hint};
}

}  // namespace

KernelValue szego(const BallPoint& z, const BallPoint& w) {
    return szegoFromPairing(hermitianInner(z.coords(), w.coords()), z.dim());
}

KernelValue szego(const BallPoint& z, const SpherePoint& w) {
    return szegoFromPairing(hermitianInner(z.coords(), w.coords()), z.dim());
}

KernelValue szegoBoundary(const SpherePoint& z, const BallPoint& w) {
    return szegoFromPairing(hermitianInner(z.coords(), w.coords()), z.dim());
}

double invariantPoisson(const BallPoint& z, const SpherePoint& xi) {
    const Complex pairing = hermitianInner(z.coords(), xi.coords());
    const double denom = std::norm(1.0 - pairing);
    if (std::sqrt(denom) < kSingularityTol)
        throw SingularityError("invariantPoisson: pairing at the singular set", std::sqrt(denom));
    const double base = (1.0 - z.norm() * z.norm()) / denom;
    return ipow(base, z.dim());
}

KernelValue hbKernel(const Symbol& b, const BallPoint& z, const BallPoint& w) {
    if (b.dimension() != z.dim() || z.dim() != w.dim())
        throw DimensionError("hbKernel: dimension mismatch");
    const KernelValue k = szego(z, w);
    const Complex factor = 1.0 - std::conj(b.eval(w)) * b.eval(z);
    return KernelValue{factor * k.value, k.conditionHint};
}

KernelNorm hbKernelNorm(const Symbol& b, const BallPoint& z) {
    const double bAbsSq = std::norm(b.eval(z));
    const double squared = (1.0 - bAbsSq) / ipow(1.0 - z.norm() * z.norm(), z.dim());
    return KernelNorm{squared, std::sqrt(std::max(0.0, squared))};
}

}  // namespace hball
