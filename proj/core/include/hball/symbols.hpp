#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hball/geometry.hpp"
#include "hball/multiindex.hpp"

namespace hball {

enum class SymbolKind { CoordinateSlice, AffineHalf, Monomial, DiscLift, Theta };

/// Analytically known boundary data attached to a catalog symbol. Test
/// fixtures only: nothing on a numerical code path reads these, so checks
/// against them cannot be circular.
struct BoundaryFact {
    SpherePoint point;
    double cLimit;          // lim (1-|b|)/(1-||z||) at the point; +inf when absent
    double clarkAtomMass;   // mass of the alpha=eta Clark measure at the point
    Complex eta;            // unimodular boundary value (when |b*| = 1 there)
};

struct KnownFacts {
    std::vector<BoundaryFact> boundary;
};

/// A catalog Schur-class symbol b : B^n -> closed unit disc. Immutable, pure
/// evaluation. Polynomial kinds carry exact Taylor data.
class Symbol {
public:
    int dimension() const { return n_; }
    SymbolKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    bool isSchur() const { return schur_; }

    Complex eval(const BallPoint& z) const;
    // Evaluation at boundary points (the catalog evaluators extend continuously).
    Complex evalBoundary(const SpherePoint& xi) const;

    const std::optional<MultiIndexPoly>& taylor() const { return taylor_; }
    const KnownFacts& knownFacts() const { return facts_; }

    friend Symbol coordinateSlice(const SpherePoint& xi0);
    friend Symbol affineHalf(const SpherePoint& xi0);
    friend Symbol monomialSymbol(int n, const MultiIndex& alpha, Complex c);
    friend Symbol discLift(const SpherePoint& xi0, const std::vector<Complex>& blaschkeZeros);
    friend Symbol thetaSymbol(const SpherePoint& xi0);

private:
    Symbol(int n, SymbolKind kind, std::string label) : n_(n), kind_(kind), label_(std::move(label)) {}

    Complex evalRaw(const CVec& z) const;

    int n_;
    SymbolKind kind_;
    std::string label_;
    bool schur_ = true;
    CVec xi0_;                      // slice direction for slice/affine/discLift/theta
    MultiIndex alpha_;              // monomial exponent
    Complex coefficient_{1.0};      // monomial coefficient
    std::vector<Complex> zeros_;    // Blaschke zeros for discLift
    std::optional<MultiIndexPoly> taylor_;
    KnownFacts facts_;
};

// b(z) = <z, xi0>.
Symbol coordinateSlice(const SpherePoint& xi0);
// b(z) = (1 + <z, xi0>) / 2.
Symbol affineHalf(const SpherePoint& xi0);
// b(z) = c z^alpha; |c| must not exceed 1/max_{S^n}|z^alpha|.
Symbol monomialSymbol(int n, const MultiIndex& alpha, Complex c);
// b(z) = phi(<z, xi0>) with phi the finite Blaschke product with the given zeros.
Symbol discLift(const SpherePoint& xi0, const std::vector<Complex>& blaschkeZeros);
// b(z) = 1 - (1 - <z, xi0>)^n. Schur only for n = 1; larger n exceeds modulus
// one inside the ball (|b(-xi0)| = 2^n - 1) and is kept constructible, flagged
// non-Schur, for the Clark-recovery experiments that probe exactly this case.
Symbol thetaSymbol(const SpherePoint& xi0);

// Largest |c| keeping |c z^alpha| <= 1 on the sphere: the max of |z^alpha| is
// prod_j (alpha_j/|alpha|)^{alpha_j/2}.
double monomialCoefficientCap(const MultiIndex& alpha);

// Construction from a JSON document {"kind": ..., "n": ..., "parameters": {...}}.
Symbol symbolFromJson(const std::string& jsonText);

/// Lower bound for ||b||_inf: max of |b(r xi)| over all grid nodes and radii.
double supNormEstimate(const Symbol& b, const std::vector<SphereGrid>& grids,
                       const std::vector<double>& radii);

/// Exact Taylor coefficients of a polynomial symbol, restricted to |alpha| <=
/// maxDegree. UnsupportedError for kinds without Taylor data.
MultiIndexPoly taylorCoefficients(const Symbol& b, int maxDegree);

}  // namespace hball
