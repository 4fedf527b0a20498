#pragma once

#include <map>
#include <vector>

#include "hball/geometry.hpp"

namespace hball {

using MultiIndex = std::vector<int>;

int multiDegree(const MultiIndex& alpha);

// All multi-indices of length n with |alpha| <= degree, graded, deterministic order.
std::vector<MultiIndex> multiIndicesUpTo(int n, int degree);

// Squared H^2(B^n) norm of the monomial z^alpha: alpha! (n-1)! / (n-1+|alpha|)!.
double monomialNormSq(const MultiIndex& alpha, int n);

/// Polynomial in n complex variables stored as a multi-indexed coefficient
/// table. Ordered map, so iteration (and any serialization) is deterministic.
class MultiIndexPoly {
public:
    explicit MultiIndexPoly(int n) : n_(n) {}

    int vars() const { return n_; }
    int degree() const;
    bool empty() const { return coeffs_.empty(); }

    void add(const MultiIndex& alpha, Complex c);
    Complex coeff(const MultiIndex& alpha) const;
    const std::map<MultiIndex, Complex>& table() const { return coeffs_; }

    Complex eval(const CVec& z) const;

    MultiIndexPoly operator*(const MultiIndexPoly& other) const;
    MultiIndexPoly operator+(const MultiIndexPoly& other) const;
    MultiIndexPoly scaled(Complex c) const;

    static MultiIndexPoly constant(int n, Complex c);
    // The linear form z -> <z, xi> = sum conj(xi_j) z_j.
    static MultiIndexPoly pairingForm(const CVec& xi);
    static MultiIndexPoly monomialTerm(const MultiIndex& alpha, Complex c);

private:
    void prune(const MultiIndex& alpha);

    int n_;
    std::map<MultiIndex, Complex> coeffs_;
};

}  // namespace hball
