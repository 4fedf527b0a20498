#include "hball/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "hball/angular.hpp"
#include "hball/clark.hpp"
#include "hball/hbspace.hpp"
#include "hball/kernels.hpp"
#include "hball/reports.hpp"
#include "hball/rng.hpp"
#include "hball/symbols.hpp"

namespace hball {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Checker {
    bool ok = true;
    std::vector<std::string> details;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back("FAIL " + what);
        }
    }
    void note(const std::string& s) { details.push_back(s); }
};

CriterionResult timed(int id, const std::string& name, double budgetSeconds,
                      const std::function<void(Checker&)>& body) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.details.push_back(std::string("FAIL exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= budgetSeconds) {
        c.ok = false;
        c.details.push_back("FAIL runtime budget " + fmt12(budgetSeconds) + " s exceeded");
    }
    return CriterionResult{id, name, c.ok, seconds, c.details};
}

BallPoint randomInterior(Rng& rng, int n, double maxRadius) {
    CVec g(n);
    double len = 0.0;
    do {
        for (int j = 0; j < n; ++j) g[j] = rng.complexGaussian();
        len = g.norm();
    } while (len < 1e-12);
    return BallPoint(g * (maxRadius * std::sqrt(rng.uniform01()) / len));
}

// Truncated binomial series  sum_{k<200} C(n+k-1,k) s^k for (1-s)^{-n}.
Complex szegoSeriesOracle(Complex s, int n) {
    Complex sum = 0.0, term = 1.0;
    for (int k = 0; k < 200; ++k) {
        sum += term;
        term *= s * (static_cast<double>(n + k) / static_cast<double>(k + 1));
    }
    return sum;
}

// The Schur catalog instances exercised by the acceptance suite. theta is
// included only at n = 1; for n >= 2 it is not Schur (its Gram sections are
// not PSD) and is probed separately by the Clark experiment.
std::vector<Symbol> schurCatalog(int n) {
    const SpherePoint xi0 = SpherePoint::axis(n, 0);
    std::vector<Symbol> out{coordinateSlice(xi0), affineHalf(xi0), discLift(xi0, {0.0, 0.5})};
    if (n == 1) {
        out.push_back(monomialSymbol(1, MultiIndex{2}, 1.0));
        out.push_back(thetaSymbol(xi0));
    } else {
        MultiIndex a(n, 0);
        a[0] = a[1] = 1;
        out.push_back(monomialSymbol(n, a, 1.0));
    }
    return out;
}

PointConfiguration randomConfig(Rng& rng, int n, int maxPoints, double separation) {
    const int target = 2 + static_cast<int>(rng.below(maxPoints - 1));
    std::vector<BallPoint> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < target && ++guard < 10000) {
        BallPoint cand = randomInterior(rng, n, 0.85);
        bool fits = true;
        for (const BallPoint& p : pts)
            if ((p.coords() - cand.coords()).norm() < separation) fits = false;
        if (fits) pts.push_back(std::move(cand));
    }
    return PointConfiguration(std::move(pts));
}

// ---- criteria -------------------------------------------------------------

CriterionResult criterionKernelOracle(std::uint64_t seed) {
    return timed(1, "szego vs truncated binomial series", 1.0, [&](Checker& c) {
        Rng rng(seed);
        double worst = 0.0;
        for (int n = 1; n <= 3; ++n) {
            for (int trial = 0; trial < 100; ++trial) {
                const BallPoint z = randomInterior(rng, n, 0.83);
                const BallPoint w = randomInterior(rng, n, 0.84);
                const Complex s = hermitianInner(z.coords(), w.coords());
                const Complex direct = szego(z, w).value;
                const Complex series = szegoSeriesOracle(s, n);
                worst = std::max(worst, std::abs(direct - series) / std::abs(series));
            }
        }
        c.note("max relative error " + fmt12(worst));
        c.check(worst <= 1e-10, "relative error " + fmt12(worst) + " > 1e-10");
    });
}

CriterionResult criterionSphereMoments(std::uint64_t seed) {
    return timed(2, "sphere-grid moment oracle", 5.0, [&](Checker& c) {
        const int count = 200000;
        const double tol = 4.0 / std::sqrt(static_cast<double>(count));
        for (int n = 1; n <= 3; ++n) {
            const SphereGrid grid = sphereGrid(n, count, seed + n);
            for (int k = 1; k <= 2; ++k) {
                double mean = 0.0;
                for (int i = 0; i < grid.size(); ++i)
                    mean += grid.weights[i] * std::pow(std::norm(grid.nodes[i].coords()[0]), k);
                MultiIndex alpha(n, 0);
                alpha[0] = k;
                const double expected = monomialNormSq(alpha, n);
                c.note("n=" + std::to_string(n) + " k=" + std::to_string(k) + " mean " +
                       fmt12(mean) + " expected " + fmt12(expected));
                c.check(std::abs(mean - expected) <= tol,
                        "moment n=" + std::to_string(n) + " k=" + std::to_string(k) +
                            " off by " + fmt12(std::abs(mean - expected)));
            }
        }
    });
}

CriterionResult criterionGramPsdReproducing(std::uint64_t seed) {
    return timed(3, "Gram PSD and reproducing identity", 30.0, [&](Checker& c) {
        Rng rng(seed);
        double worstEig = 0.0, worstResidual = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(2));
            const PointConfiguration config = randomConfig(rng, n, 12, 0.05);
            for (const Symbol& b : schurCatalog(n)) {
                const GramSection gram = gramMatrix(b, config);
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram.matrix,
                                                                   Eigen::EigenvaluesOnly);
                const double lmin = es.eigenvalues().minCoeff();
                const double lmax = es.eigenvalues().maxCoeff();
                worstEig = std::max(worstEig, -lmin / std::max(lmax, 1e-300));

                Eigen::VectorXcd coeffs(config.size());
                for (int i = 0; i < config.size(); ++i)
                    coeffs[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
                BallPoint z = randomInterior(rng, n, 0.8);
                Complex fz = 0.0;
                for (int i = 0; i < config.size(); ++i)
                    fz += coeffs[i] * hbKernel(b, z, config.points()[i]).value;
                const double residual =
                    reproducingCheck(b, config, coeffs, z) / (1.0 + std::abs(fz));
                worstResidual = std::max(worstResidual, residual);
            }
        }
        c.note("worst -lmin/lmax " + fmt12(worstEig));
        c.note("worst reproducing residual " + fmt12(worstResidual));
        c.check(worstEig <= 1e-8, "PSD violation " + fmt12(worstEig));
        c.check(worstResidual <= 1e-8, "reproducing residual " + fmt12(worstResidual));
    });
}

CriterionResult criterionNestedMonotonicity(std::uint64_t seed) {
    return timed(4, "minimal-norm monotonicity along nested ladders", 10.0, [&](Checker& c) {
        Rng rng(seed);
        double worstDrop = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(2));
            const std::vector<Symbol> catalog = schurCatalog(n);
            const Symbol& b = catalog[rng.below(catalog.size())];
            CVec dir(n);
            for (int j = 0; j < n; ++j) dir[j] = rng.complexGaussian();
            const SpherePoint xi(dir);
            const auto configs = nestedRadialConfigs(xi, 5, 1, 5, rng.raw());

            // Feasible data: a combination of kernel sections at auxiliary points.
            std::vector<BallPoint> anchors;
            std::vector<Complex> amps;
            for (int i = 0; i < 3; ++i) {
                anchors.push_back(randomInterior(rng, n, 0.7));
                amps.push_back(Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
            }
            auto f = [&](const BallPoint& z) {
                Complex v = 0.0;
                for (std::size_t i = 0; i < anchors.size(); ++i)
                    v += amps[i] * hbKernel(b, z, anchors[i]).value;
                return v;
            };

            double previous = -kInf;
            for (const PointConfiguration& config : configs) {
                const GramSection gram = gramMatrix(b, config);
                Eigen::VectorXcd v(config.size());
                for (int i = 0; i < config.size(); ++i) v[i] = f(config.points()[i]);
                const NormEstimate est = minNormInterpolantNorm(gram, v);
                c.check(est.feasible, "kernel-span data judged infeasible");
                if (previous > -kInf) worstDrop = std::max(worstDrop, previous - est.value);
                previous = est.value;
            }
        }
        c.note("worst monotonicity drop " + fmt12(worstDrop));
        c.check(worstDrop <= 1e-10, "monotonicity drop " + fmt12(worstDrop) + " > 1e-10");
    });
}

CriterionResult criterionModelSpace(std::uint64_t seed) {
    return timed(5, "n=1 model space of b(z)=z", 10.0, [&](Checker& c) {
        const Symbol b = coordinateSlice(SpherePoint::axis(1, 0));
        Rng rng(seed);
        std::vector<BallPoint> pts;
        pts.push_back(BallPoint::origin(1));
        for (int i = 0; i < 5; ++i) pts.push_back(randomInterior(rng, 1, 0.8));
        const PointConfiguration config(pts);
        const GramSection gram = gramMatrix(b, config);
        double offOnes = 0.0;
        for (int i = 0; i < config.size(); ++i)
            for (int j = 0; j < config.size(); ++j)
                offOnes = std::max(offOnes, std::abs(gram.matrix(i, j) - Complex(1.0)));
        c.note("max |G - 1| " + fmt12(offOnes));
        c.check(offOnes <= 1e-12, "Gram deviates from all-ones by " + fmt12(offOnes));

        const SpherePoint one = SpherePoint::axis(1, 0);
        const auto configs = nestedRadialConfigs(one, 6, 1, 4, seed);
        const MembershipReport constant =
            membershipEstimate(b, constantCandidate(1.0), configs);
        c.note("membership(1): " + verdictName(constant.verdict) + " bound " +
               fmt12(constant.boundValue));
        c.check(constant.verdict == MembershipVerdict::Bounded, "membership(1) not bounded");
        c.check(std::abs(constant.boundValue - 1.0) <= 1e-6,
                "membership(1) bound " + fmt12(constant.boundValue));

        const MembershipReport coordinate =
            membershipEstimate(b, coordinateCandidate(0), configs);
        c.note("membership(z): " + verdictName(coordinate.verdict));
        c.check(coordinate.verdict == MembershipVerdict::Diverging, "membership(z) not diverging");

        for (int degree = 0; degree <= 12; ++degree) {
            const SupDefResult r =
                supDefNormEstimate(b, MultiIndexPoly::constant(1, 1.0), degree);
            c.check(r.bounded && std::abs(r.value - 1.0) <= 1e-10,
                    "supDef(1) at degree " + std::to_string(degree) + " = " + fmt12(r.value));
        }
        const SupDefResult unbounded = supDefNormEstimate(
            b, MultiIndexPoly::monomialTerm(MultiIndex{1}, 1.0), 12);
        c.check(!unbounded.bounded, "supDef(z) not flagged unbounded");
    });
}

ClarkSolveReport solveCatalogClark(const Symbol& b, std::uint64_t seed, int gridCount) {
    const int n = b.dimension();
    const SpherePoint xi = SpherePoint::axis(n, 0);
    ClarkProblem problem{b,
                         ClarkParameter(Complex(1.0)),
                         {},
                         sphereGrid(n, gridCount, seed),
                         {xi},
                         true,
                         {xi},
                         {0.1, 0.3},
                         NnlsOptions{}};
    problem.interiorSamples = clarkInteriorSamples(problem.grid, problem.atomCandidates);
    return solveClark(problem);
}

CriterionResult criterionClarkPointMass(std::uint64_t seed) {
    return timed(6, "Clark recovery of a boundary point mass (n=1, b=z)", 10.0, [&](Checker& c) {
        const Symbol b = coordinateSlice(SpherePoint::axis(1, 0));
        const ClarkSolveReport report = solveCatalogClark(b, seed, 400);
        const double atom = report.measure.designatedAtoms.front().second;
        c.note("atom " + fmt12(atom) + " totalMass " + fmt12(report.totalMass) + " residual " +
               fmt12(report.residualL2));
        c.check(atom >= 0.95 * report.totalMass, "atom fraction " + fmt12(atom / report.totalMass));
        c.check(std::abs(report.totalMass - 1.0) <= 1e-2, "total mass " + fmt12(report.totalMass));
        c.check(report.residualL2 <= 1e-3, "NNLS residual " + fmt12(report.residualL2));
    });
}

CriterionResult criterionClarkAtomPlusDensity(std::uint64_t seed) {
    return timed(7, "Clark recovery of atom plus density (n=1, b=(1+z)/2)", 10.0, [&](Checker& c) {
        const Symbol b = affineHalf(SpherePoint::axis(1, 0));
        const ClarkSolveReport report = solveCatalogClark(b, seed, 400);
        const double atom = report.measure.designatedAtoms.front().second;
        const double rest = report.totalMass - atom;
        c.note("atom " + fmt12(atom) + " remainder " + fmt12(rest) + " totalMass " +
               fmt12(report.totalMass) + " residual " + fmt12(report.residualL2));
        c.check(std::abs(report.totalMass - 3.0) <= 1e-2, "total mass " + fmt12(report.totalMass));
        c.check(std::abs(atom - 2.0) <= 0.1, "atom mass " + fmt12(atom));
        c.check(std::abs(rest - 1.0) <= 0.1, "absolutely continuous remainder " + fmt12(rest));

        const double bound =
            atomMassUpperBound(b, ClarkParameter(Complex(1.0)), SpherePoint::axis(1, 0), 0.999);
        c.note("atomMassUpperBound(0.999) " + fmt12(bound));
        c.check(std::abs(bound - 2.0005) <= 1e-3, "atom bound " + fmt12(bound));
    });
}

CriterionResult criterionLemmaAndVb(std::uint64_t seed) {
    return timed(8, "measure-space kernel identity and V_b checks", 30.0, [&](Checker& c) {
        const std::vector<Symbol> symbols{coordinateSlice(SpherePoint::axis(1, 0)),
                                          affineHalf(SpherePoint::axis(1, 0))};
        for (const Symbol& b : symbols) {
            const ClarkSolveReport solved = solveCatalogClark(b, seed, 400);
            const DiscreteMeasure& mu = solved.measure;
            Rng rng(seed + 9);

            double worstLemma = 0.0;
            for (int pair = 0; pair < 20; ++pair) {
                const BallPoint z = randomInterior(rng, 1, 0.5);
                const BallPoint w = randomInterior(rng, 1, 0.5);
                worstLemma = std::max(worstLemma, clarkInnerIdentityCheck(b, mu, z, w));
            }
            c.note(b.label() + ": worst Lemma residual " + fmt12(worstLemma));
            c.check(worstLemma <= 5e-2, b.label() + " Lemma residual " + fmt12(worstLemma));

            // Span of 5 Cauchy kernels: image identity and the isometry.
            std::vector<BallPoint> anchors;
            Eigen::VectorXcd amps(5);
            for (int i = 0; i < 5; ++i) {
                anchors.push_back(randomInterior(rng, 1, 0.5));
                amps[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
            }
            auto cauchyOnMeasure = [&](const BallPoint& w) {
                std::vector<Complex> g;
                for (const SpherePoint& xi : mu.support) g.push_back(szegoBoundary(xi, w).value);
                for (const auto& [p, wt] : mu.designatedAtoms)
                    g.push_back(szegoBoundary(p, w).value);
                return g;
            };

            double worstImage = 0.0;
            for (int i = 0; i < 5; ++i) {
                const BallPoint z = randomInterior(rng, 1, 0.5);
                const Complex image = vbTransform(b, mu, cauchyOnMeasure(anchors[i]), z);
                const Complex expected =
                    hbKernel(b, z, anchors[i]).value / (1.0 - std::conj(b.eval(anchors[i])));
                worstImage =
                    std::max(worstImage, std::abs(image - expected) / (1.0 + std::abs(expected)));
            }
            c.note(b.label() + ": worst V_b kernel-image residual " + fmt12(worstImage));
            c.check(worstImage <= 5e-2, b.label() + " V_b image residual " + fmt12(worstImage));

            // ||g||_{L^2(mu)} vs the Gram-section norm of V_b g.
            std::vector<Complex> g(mu.support.size() + mu.designatedAtoms.size(), Complex(0.0));
            for (int i = 0; i < 5; ++i) {
                const auto gi = cauchyOnMeasure(anchors[i]);
                for (std::size_t j = 0; j < g.size(); ++j) g[j] += amps[i] * gi[j];
            }
            double l2mu = 0.0;
            for (std::size_t j = 0; j < mu.support.size(); ++j)
                l2mu += mu.weights[j] * std::norm(g[j]);
            for (std::size_t a = 0; a < mu.designatedAtoms.size(); ++a)
                l2mu += mu.designatedAtoms[a].second * std::norm(g[mu.support.size() + a]);

            const PointConfiguration anchorConfig(anchors);
            const GramSection gram = gramMatrix(b, anchorConfig);
            Eigen::VectorXcd coeffs(5);
            for (int i = 0; i < 5; ++i)
                coeffs[i] = amps[i] / (1.0 - std::conj(b.eval(anchors[i])));
            const double hbNorm2 = hbInnerProduct(gram, coeffs, coeffs).real();
            const double isoResidual = std::abs(l2mu - hbNorm2) / (1.0 + std::abs(hbNorm2));
            c.note(b.label() + ": isometry |L2(mu) - H(b)| residual " + fmt12(isoResidual));
            c.check(isoResidual <= 5e-2, b.label() + " isometry residual " + fmt12(isoResidual));
        }
    });
}

CriterionResult criterionAngularSuite(std::uint64_t seed) {
    return timed(9, "angular-derivative estimators and Julia inequality", 30.0, [&](Checker& c) {
        const SpherePoint e1n2 = SpherePoint::axis(2, 0);
        const ADReport slice2 = angularDerivativeEstimate(coordinateSlice(e1n2), e1n2);
        c.note("slice n=2: c " + fmt12(slice2.cEstimate) + " q2Limit " + fmt12(slice2.q2Limit));
        c.check(std::abs(slice2.cEstimate - 1.0) <= 1e-3, "slice c " + fmt12(slice2.cEstimate));

        for (int n = 1; n <= 2; ++n) {
            const SpherePoint xi = SpherePoint::axis(n, 0);
            const ADReport affine = angularDerivativeEstimate(affineHalf(xi), xi);
            c.check(std::abs(affine.cEstimate - 0.5) <= 1e-3,
                    "affineHalf n=" + std::to_string(n) + " c " + fmt12(affine.cEstimate));
            double worstAd = 0.0;
            for (double r : {0.5, 0.9, 0.99}) {
                const auto q =
                    boundaryQuotients(affineHalf(xi), radialPoint(xi, r), xi, Complex(1.0));
                worstAd = std::max(worstAd, std::abs(*q.adQuotient - Complex(-0.5)));
            }
            c.note("affineHalf n=" + std::to_string(n) + " adQuotient deviation " + fmt12(worstAd));
            c.check(worstAd <= 1e-12, "adQuotient deviation " + fmt12(worstAd));
        }

        MultiIndex mixed{1, 1};
        const ADReport mono = angularDerivativeEstimate(monomialSymbol(2, mixed, 1.0), e1n2);
        c.check(std::isinf(mono.cEstimate), "z1z2 c not infinite: " + fmt12(mono.cEstimate));

        Rng rng(seed + 3);
        std::vector<BallPoint> samples;
        for (int i = 0; i < 10000; ++i) samples.push_back(randomInterior(rng, 1, 0.995));
        const SpherePoint one = SpherePoint::axis(1, 0);
        for (const Symbol& b : schurCatalog(1)) {
            const ADReport ad = angularDerivativeEstimate(b, one);
            if (!std::isfinite(ad.cEstimate) || !ad.etaEstimate) continue;
            const JuliaCheck pos =
                juliaInequalityCheck(b, one, *ad.etaEstimate, ad.cEstimate, samples);
            c.note(b.label() + ": violations " + std::to_string(pos.violations) + " worst slack " +
                   fmt12(pos.worstSlack));
            c.check(pos.violations == 0,
                    b.label() + " Julia violations " + std::to_string(pos.violations));
            const JuliaCheck neg =
                juliaInequalityCheck(b, one, *ad.etaEstimate, 0.5 * ad.cEstimate, samples);
            c.check(neg.violations > 0, b.label() + " halved-alpha control found no violations");
        }
    });
}

CriterionResult criterionEquivalenceN1(std::uint64_t seed) {
    return timed(10, "n=1 equivalence suite", 120.0, [&](Checker& c) {
        const SpherePoint one = SpherePoint::axis(1, 0);
        const std::vector<Symbol> suite{coordinateSlice(one), monomialSymbol(1, MultiIndex{2}, 1.0),
                                        affineHalf(one), discLift(one, {0.0, 0.5})};
        EquivalenceSettings settings;
        settings.seed = seed;
        int agreed = 0;
        for (const Symbol& b : suite) {
            const EquivalenceRecord record =
                equivalenceHarness(b, one, ClarkParameter(Complex(1.0)), settings);
            c.note(b.label() + ": c " + fmt12(record.cEstimate) + " verdict " +
                   verdictName(record.membershipVerdict) + " atom " + fmt12(record.atomMass) +
                   " consistent " + (record.consistent_n1 ? "1" : "0"));
            c.check(record.consistent_n1, b.label() + " indicators disagree");
            if (record.consistent_n1) ++agreed;
        }
        c.note("agreement " + std::to_string(agreed) + "/4");
    });
}

CriterionResult criterionDimensionGap(std::uint64_t seed) {
    return timed(11, "n=2 dimension-gap experiment at e1", 120.0, [&](Checker& c) {
        const SpherePoint e1 = SpherePoint::axis(2, 0);
        MultiIndex mixed{1, 1};
        const std::vector<Symbol> suite{coordinateSlice(e1), affineHalf(e1),
                                        monomialSymbol(2, mixed, 1.0)};
        EquivalenceSettings settings;
        settings.seed = seed;
        for (const Symbol& b : suite) {
            const EquivalenceRecord record =
                equivalenceHarness(b, e1, ClarkParameter(Complex(1.0)), settings);
            c.note(b.label() + ": c " + fmt12(record.cEstimate) + " q2 " + fmt12(record.q2Limit) +
                   " verdict " + verdictName(record.membershipVerdict) + " atom " +
                   fmt12(record.atomMass));
            c.check(record.membershipVerdict == MembershipVerdict::Diverging,
                    b.label() + " membership not diverging");
            c.check(record.atomMass <= 1e-2, b.label() + " atom mass " + fmt12(record.atomMass));

            // log-log slope of the atom bound vs (1-r) over r in [0.9, 0.999].
            std::vector<double> xs, ys;
            for (int i = 0; i <= 20; ++i) {
                const double oneMinusR = 0.1 * std::pow(0.01, i / 20.0);
                const double bound = atomMassUpperBound(b, ClarkParameter(Complex(1.0)), e1,
                                                        1.0 - oneMinusR);
                xs.push_back(std::log(oneMinusR));
                ys.push_back(std::log(bound));
            }
            double mx = 0, my = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                mx += xs[i];
                my += ys[i];
            }
            mx /= xs.size();
            my /= ys.size();
            double num = 0, den = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                num += (xs[i] - mx) * (ys[i] - my);
                den += (xs[i] - mx) * (xs[i] - mx);
            }
            const double slope = num / den;
            c.note(b.label() + ": atom-bound slope " + fmt12(slope));
            c.check(slope >= 0.9, b.label() + " atom-bound slope " + fmt12(slope));

            const bool expectFiniteC = b.kind() != SymbolKind::Monomial;
            c.check(record.cFinite == expectFiniteC,
                    b.label() + " q1 finiteness unexpected: " + fmt12(record.cEstimate));
        }
    });
}

// Deterministic report pipeline used by the byte-stability criterion: a
// seeded grid CSV, an equivalence record, a Clark solve and a membership
// report, concatenated.
std::string determinismProbe(std::uint64_t seed) {
    std::ostringstream out;
    const SphereGrid grid = sphereGrid(2, 300, seed);
    writeSphereGridCsv(grid, out);

    const SpherePoint one = SpherePoint::axis(1, 0);
    EquivalenceSettings settings;
    settings.seed = seed;
    settings.gridCount = 200;
    const EquivalenceRecord record =
        equivalenceHarness(discLift(one, {0.0, 0.5}), one, ClarkParameter(Complex(1.0)), settings);
    out << toJson(record) << "\n";

    const Symbol b = coordinateSlice(one);
    out << toJson(solveCatalogClark(b, seed, 200)) << "\n";

    const auto configs = nestedRadialConfigs(one, 5, 1, 4, seed);
    out << toJson(membershipEstimate(b, constantCandidate(1.0), configs)) << "\n";
    return out.str();
}

CriterionResult criterionDeterminism(std::uint64_t seed) {
    return timed(12, "byte-identical reports under a fixed seed", 60.0, [&](Checker& c) {
        const std::string first = determinismProbe(seed);
        const std::string second = determinismProbe(seed);
        c.note("report bytes " + std::to_string(first.size()));
        c.check(first == second, "reports differ between runs under one seed");
    });
}

}  // namespace

std::vector<CriterionResult> runAcceptanceSuite(const AcceptanceOptions& opt) {
    std::vector<CriterionResult> results;
    results.push_back(criterionKernelOracle(opt.seed));
    results.push_back(criterionSphereMoments(opt.seed));
    results.push_back(criterionGramPsdReproducing(opt.seed));
    results.push_back(criterionNestedMonotonicity(opt.seed));
    results.push_back(criterionModelSpace(opt.seed));
    results.push_back(criterionClarkPointMass(opt.seed));
    results.push_back(criterionClarkAtomPlusDensity(opt.seed));
    results.push_back(criterionLemmaAndVb(opt.seed));
    results.push_back(criterionAngularSuite(opt.seed));
    results.push_back(criterionEquivalenceN1(opt.seed));
    results.push_back(criterionDimensionGap(opt.seed));
    results.push_back(criterionDeterminism(opt.seed));
    return results;
}

bool allPassed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.passed) return false;
    return true;
}

void printAcceptanceResults(const std::vector<CriterionResult>& results, std::ostream& out) {
    for (const CriterionResult& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
            << fmt12(r.seconds) << " s)\n";
        if (!r.passed)
            for (const std::string& d : r.details) out << "       " << d << "\n";
    }
}

std::string acceptanceReportJson(const std::vector<CriterionResult>& results, std::uint64_t seed) {
    nlohmann::json doc;
    doc["seed"] = seed;
    doc["passed"] = allPassed(results);
    nlohmann::json list = nlohmann::json::array();
    for (const CriterionResult& r : results)
        list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", r.details}});
    doc["criteria"] = list;
    return doc.dump(2);
}

}  // namespace hball
