#include "hball/multiindex.hpp"

#include <numeric>

namespace hball {

int multiDegree(const MultiIndex& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

namespace {

void enumerate(int n, int remaining, MultiIndex& current, std::vector<MultiIndex>& out) {
    if (static_cast<int>(current.size()) == n - 1) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        current.push_back(k);
        enumerate(n, remaining - k, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> multiIndicesUpTo(int n, int degree) {
    if (n < 1) throw DimensionError("multiIndicesUpTo: need n >= 1");
    std::vector<MultiIndex> out;
    for (int d = 0; d <= degree; ++d) {
        MultiIndex current;
        enumerate(n, d, current, out);
    }
    return out;
}

double monomialNormSq(const MultiIndex& alpha, int n) {
    if (static_cast<int>(alpha.size()) != n) throw DimensionError("monomialNormSq: index length != n");
    // alpha! (n-1)! / (n-1+|alpha|)! as a running product, exact in doubles for
    // the degrees used here.
    const int total = multiDegree(alpha);
    double value = 1.0;
    // (n-1)! / (n-1+|alpha|)! = 1 / ((n) (n+1) ... (n-1+|alpha|))
    for (int k = 0; k < total; ++k) value /= static_cast<double>(n + k);
    for (int a : alpha)
        for (int k = 2; k <= a; ++k) value *= static_cast<double>(k);
    return value;
}

int MultiIndexPoly::degree() const {
    int d = 0;
    for (const auto& [alpha, c] : coeffs_) d = std::max(d, multiDegree(alpha));
    return d;
}

void MultiIndexPoly::add(const MultiIndex& alpha, Complex c) {
    if (static_cast<int>(alpha.size()) != n_) throw DimensionError("MultiIndexPoly::add: index length");
    coeffs_[alpha] += c;
    prune(alpha);
}

void MultiIndexPoly::prune(const MultiIndex& alpha) {
    auto it = coeffs_.find(alpha);
    if (it != coeffs_.end() && std::abs(it->second) == 0.0) coeffs_.erase(it);
}

Complex MultiIndexPoly::coeff(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Complex(0.0) : it->second;
}

Complex MultiIndexPoly::eval(const CVec& z) const {
    if (z.size() != n_) throw DimensionError("MultiIndexPoly::eval: dimension mismatch");
    Complex sum = 0.0;
    for (const auto& [alpha, c] : coeffs_) {
        Complex term = c;
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < alpha[j]; ++k) term *= z[j];
        sum += term;
    }
    return sum;
}

MultiIndexPoly MultiIndexPoly::operator*(const MultiIndexPoly& other) const {
    if (other.n_ != n_) throw DimensionError("MultiIndexPoly::*: dimension mismatch");
    MultiIndexPoly out(n_);
    for (const auto& [a, ca] : coeffs_)
        for (const auto& [b, cb] : other.coeffs_) {
            MultiIndex sum(n_);
            for (int j = 0; j < n_; ++j) sum[j] = a[j] + b[j];
            out.add(sum, ca * cb);
        }
    return out;
}

MultiIndexPoly MultiIndexPoly::operator+(const MultiIndexPoly& other) const {
    if (other.n_ != n_) throw DimensionError("MultiIndexPoly::+: dimension mismatch");
    MultiIndexPoly out = *this;
    for (const auto& [a, c] : other.coeffs_) out.add(a, c);
    return out;
}

MultiIndexPoly MultiIndexPoly::scaled(Complex c) const {
    MultiIndexPoly out(n_);
    for (const auto& [a, v] : coeffs_) out.add(a, c * v);
    return out;
}

MultiIndexPoly MultiIndexPoly::constant(int n, Complex c) {
    MultiIndexPoly p(n);
    p.add(MultiIndex(n, 0), c);
    return p;
}

MultiIndexPoly MultiIndexPoly::pairingForm(const CVec& xi) {
    MultiIndexPoly p(static_cast<int>(xi.size()));
    for (int j = 0; j < xi.size(); ++j) {
        MultiIndex alpha(xi.size(), 0);
        alpha[j] = 1;
        p.add(alpha, std::conj(xi[j]));
    }
    return p;
}

MultiIndexPoly MultiIndexPoly::monomialTerm(const MultiIndex& alpha, Complex c) {
    MultiIndexPoly p(static_cast<int>(alpha.size()));
    p.add(alpha, c);
    return p;
}

}  // namespace hball
