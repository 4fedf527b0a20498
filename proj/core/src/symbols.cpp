#include "hball/symbols.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

namespace hball {

namespace {

Complex ipow(Complex base, int k) {
    Complex out = 1.0;
    for (int i = 0; i < k; ++i) out *= base;
    return out;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// |phi'(1)| of a finite Blaschke product: sum (1-|a|^2)/|1-a|^2 over its zeros.
double blaschkeBoundaryDerivative(const std::vector<Complex>& zeros) {
    double sum = 0.0;
    for (Complex a : zeros) sum += (1.0 - std::norm(a)) / std::norm(1.0 - a);
    return sum;
}

Complex blaschkeEval(const std::vector<Complex>& zeros, Complex w) {
    Complex out = 1.0;
    for (Complex a : zeros) out *= (w - a) / (1.0 - std::conj(a) * w);
    return out;
}

}  // namespace

Complex Symbol::evalRaw(const CVec& z) const {
    switch (kind_) {
        case SymbolKind::CoordinateSlice:
            return hermitianInner(z, xi0_);
        case SymbolKind::AffineHalf:
            return 0.5 * (1.0 + hermitianInner(z, xi0_));
        case SymbolKind::Monomial: {
            Complex out = coefficient_;
            for (int j = 0; j < static_cast<int>(alpha_.size()); ++j)
                for (int k = 0; k < alpha_[j]; ++k) out *= z[j];
            return out;
        }
        case SymbolKind::DiscLift:
            return blaschkeEval(zeros_, hermitianInner(z, xi0_));
        case SymbolKind::Theta:
            return 1.0 - ipow(1.0 - hermitianInner(z, xi0_), n_);
    }
    throw UnsupportedError("Symbol: unknown kind");
}

Complex Symbol::eval(const BallPoint& z) const {
    if (z.dim() != n_) throw DimensionError("Symbol::eval: dimension mismatch");
    const Complex v = evalRaw(z.coords());
    if (schur_ && std::abs(v) > 1.0 + 1e-12)
        throw DomainError("Symbol::eval: modulus " + std::to_string(std::abs(v)) +
                          " exceeds the Schur bound");
    return v;
}

Complex Symbol::evalBoundary(const SpherePoint& xi) const {
    if (xi.dim() != n_) throw DimensionError("Symbol::evalBoundary: dimension mismatch");
    return evalRaw(xi.coords());
}

Symbol coordinateSlice(const SpherePoint& xi0) {
    Symbol b(xi0.dim(), SymbolKind::CoordinateSlice, "coordinateSlice");
    b.xi0_ = xi0.coords();
    b.taylor_ = MultiIndexPoly::pairingForm(b.xi0_);
    b.facts_.boundary.push_back(
        BoundaryFact{xi0, 1.0, xi0.dim() == 1 ? 1.0 : 0.0, Complex(1.0)});
    return b;
}

Symbol affineHalf(const SpherePoint& xi0) {
    Symbol b(xi0.dim(), SymbolKind::AffineHalf, "affineHalf");
    b.xi0_ = xi0.coords();
    b.taylor_ = MultiIndexPoly::constant(b.n_, 0.5) + MultiIndexPoly::pairingForm(b.xi0_).scaled(0.5);
    b.facts_.boundary.push_back(
        BoundaryFact{xi0, 0.5, xi0.dim() == 1 ? 2.0 : 0.0, Complex(1.0)});
    return b;
}

double monomialCoefficientCap(const MultiIndex& alpha) {
    const int total = multiDegree(alpha);
    if (total == 0) return 1.0;
    double maxModulus = 1.0;  // max of |z^alpha| on the sphere
    for (int a : alpha)
        if (a > 0) maxModulus *= std::pow(static_cast<double>(a) / total, 0.5 * a);
    return 1.0 / maxModulus;
}

Symbol monomialSymbol(int n, const MultiIndex& alpha, Complex c) {
    if (static_cast<int>(alpha.size()) != n) throw DimensionError("monomialSymbol: index length != n");
    if (multiDegree(alpha) == 0)
        throw ConfigurationError("monomialSymbol: constant symbols are excluded");
    if (std::abs(c) > monomialCoefficientCap(alpha) * (1.0 + 1e-12))
        throw ConfigurationError("monomialSymbol: coefficient exceeds the Schur normalization");
    Symbol b(n, SymbolKind::Monomial, "monomial");
    b.alpha_ = alpha;
    b.coefficient_ = c;
    b.taylor_ = MultiIndexPoly::monomialTerm(alpha, c);

    int supportCount = 0, supportAxis = -1;
    for (int j = 0; j < n; ++j)
        if (alpha[j] > 0) {
            ++supportCount;
            supportAxis = j;
        }
    if (supportCount >= 2) {
        // b vanishes along every axis direction: infinite quotient, no atom.
        for (int j = 0; j < n; ++j)
            if (alpha[j] > 0)
                b.facts_.boundary.push_back(
                    BoundaryFact{SpherePoint::axis(n, j), kInf, 0.0, Complex(0.0)});
    } else if (c == Complex(1.0)) {
        // b(z) = z_j^k: derivative k at e_j, Clark mass 1/k there when n = 1.
        const int k = alpha[supportAxis];
        b.facts_.boundary.push_back(BoundaryFact{SpherePoint::axis(n, supportAxis),
                                                 static_cast<double>(k),
                                                 n == 1 ? 1.0 / k : 0.0, Complex(1.0)});
    }
    return b;
}

Symbol discLift(const SpherePoint& xi0, const std::vector<Complex>& blaschkeZeros) {
    if (blaschkeZeros.empty())
        throw ConfigurationError("discLift: empty zero list gives a constant symbol");
    for (Complex a : blaschkeZeros)
        if (!(std::abs(a) < 1.0))
            throw ConfigurationError("discLift: Blaschke zeros must lie inside the disc");
    Symbol b(xi0.dim(), SymbolKind::DiscLift, "discLift");
    b.xi0_ = xi0.coords();
    b.zeros_ = blaschkeZeros;

    bool polynomial = true;
    for (Complex a : blaschkeZeros)
        if (a != Complex(0.0)) polynomial = false;
    if (polynomial) {
        MultiIndexPoly p = MultiIndexPoly::constant(b.n_, 1.0);
        const MultiIndexPoly s = MultiIndexPoly::pairingForm(b.xi0_);
        for (std::size_t k = 0; k < blaschkeZeros.size(); ++k) p = p * s;
        b.taylor_ = p;
    }

    const double c = blaschkeBoundaryDerivative(blaschkeZeros);
    b.facts_.boundary.push_back(BoundaryFact{xi0, c, b.n_ == 1 ? 1.0 / c : 0.0,
                                             blaschkeEval(blaschkeZeros, Complex(1.0))});
    return b;
}

Symbol thetaSymbol(const SpherePoint& xi0) {
    const int n = xi0.dim();
    Symbol b(n, SymbolKind::Theta, "theta");
    b.xi0_ = xi0.coords();
    // 1 - (1-s)^n = sum_{k>=1} binom(n,k) (-1)^{k+1} s^k with s = <z,xi0>.
    MultiIndexPoly p(n);
    const MultiIndexPoly s = MultiIndexPoly::pairingForm(b.xi0_);
    MultiIndexPoly sPow = MultiIndexPoly::constant(n, 1.0);
    double binom = 1.0;
    for (int k = 1; k <= n; ++k) {
        binom = binom * (n - k + 1) / k;
        sPow = sPow * s;
        p = p + sPow.scaled(Complex((k % 2 == 1 ? 1.0 : -1.0) * binom));
    }
    b.taylor_ = p;
    if (n == 1) {
        b.facts_.boundary.push_back(BoundaryFact{xi0, 1.0, 1.0, Complex(1.0)});
    } else {
        // |b(-xi0)| = 2^n - 1 > 1: outside the Schur class; kept constructible
        // for the Clark-recovery experiment probing this symbol.
        b.schur_ = false;
    }
    return b;
}

Symbol symbolFromJson(const std::string& jsonText) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(jsonText);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigurationError(std::string("symbolFromJson: parse failure: ") + e.what());
    }
    try {
        const std::string kind = doc.at("kind").get<std::string>();
        const int n = doc.at("n").get<int>();
        if (n < 1) throw ConfigurationError("symbolFromJson: n must be >= 1");
        const nlohmann::json params =
            doc.contains("parameters") ? doc["parameters"] : nlohmann::json::object();

        auto complexOf = [](const nlohmann::json& j) -> Complex {
            if (j.is_number()) return Complex(j.get<double>(), 0.0);
            return Complex(j.at(0).get<double>(), j.at(1).get<double>());
        };
        auto pointOf = [&](const nlohmann::json& j) -> SpherePoint {
            CVec c(j.size());
            for (std::size_t k = 0; k < j.size(); ++k) c[k] = complexOf(j[k]);
            return SpherePoint(std::move(c));
        };
        const SpherePoint xi0 =
            params.contains("xi0") ? pointOf(params["xi0"]) : SpherePoint::axis(n, 0);
        if (xi0.dim() != n) throw ConfigurationError("symbolFromJson: xi0 dimension != n");

        if (kind == "coordinateSlice") return coordinateSlice(xi0);
        if (kind == "affineHalf") return affineHalf(xi0);
        if (kind == "theta") return thetaSymbol(xi0);
        if (kind == "monomial") {
            MultiIndex alpha = params.at("alpha").get<std::vector<int>>();
            const Complex c = params.contains("c") ? complexOf(params["c"]) : Complex(1.0);
            return monomialSymbol(n, alpha, c);
        }
        if (kind == "discLift") {
            std::vector<Complex> zeros;
            for (const auto& j : params.at("zeros")) zeros.push_back(complexOf(j));
            return discLift(xi0, zeros);
        }
        throw ConfigurationError("symbolFromJson: unknown kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ConfigurationError(std::string("symbolFromJson: malformed config: ") + e.what());
    }
}

double supNormEstimate(const Symbol& b, const std::vector<SphereGrid>& grids,
                       const std::vector<double>& radii) {
    for (double r : radii)
        if (!(r > 0.0 && r < 1.0)) throw ConfigurationError("supNormEstimate: radii must lie in (0,1)");
    double sup = 0.0;
    for (const SphereGrid& grid : grids) {
        if (grid.dim() != b.dimension())
            throw DimensionError("supNormEstimate: grid dimension mismatch");
        for (const SpherePoint& node : grid.nodes)
            for (double r : radii)
                sup = std::max(sup, std::abs(b.eval(radialPoint(node, r))));
    }
    return sup;
}

MultiIndexPoly taylorCoefficients(const Symbol& b, int maxDegree) {
    if (!b.taylor())
        throw UnsupportedError("taylorCoefficients: symbol '" + b.label() +
                               "' has no polynomial Taylor data");
    MultiIndexPoly out(b.dimension());
    for (const auto& [alpha, c] : b.taylor()->table())
        if (multiDegree(alpha) <= maxDegree) out.add(alpha, c);
    return out;
}

}  // namespace hball
