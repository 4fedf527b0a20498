// Batch driver for the H(b) numerics library: every command takes a single
// JSON config (seed mandatory) so published numbers are reproducible from a
// checked-in file.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hball/acceptance.hpp"
#include "hball/angular.hpp"
#include "hball/clark.hpp"
#include "hball/hbspace.hpp"
#include "hball/kernels.hpp"
#include "hball/reports.hpp"
#include "hball/rng.hpp"
#include "hball/symbols.hpp"

namespace {

using hball::Complex;
using hball::ConfigurationError;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;
constexpr int kExitUsage = 64;

json loadConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open config file '" + path + "'");
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw ConfigurationError("config parse failure: " + std::string(e.what()));
    }
    return cfg;
}

std::uint64_t requiredSeed(const json& cfg) {
    if (!cfg.contains("seed")) throw ConfigurationError("config must carry a seed");
    return cfg["seed"].get<std::uint64_t>();
}

Complex complexFrom(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
    throw ConfigurationError("expected a number or [re, im] pair");
}

hball::CVec vectorFrom(const json& j) {
    if (!j.is_array() || j.empty()) throw ConfigurationError("expected a coordinate array");
    hball::CVec c(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) c[k] = complexFrom(j[k]);
    return c;
}

hball::Symbol symbolFrom(const json& cfg) {
    if (!cfg.contains("symbol")) throw ConfigurationError("config must carry a symbol block");
    return hball::symbolFromJson(cfg["symbol"].dump());
}

hball::SpherePoint boundaryPointFrom(const json& cfg, const char* key, int n) {
    if (!cfg.contains(key)) return hball::SpherePoint::axis(n, 0);
    const hball::SpherePoint p{vectorFrom(cfg[key])};
    if (p.dim() != n) throw ConfigurationError(std::string(key) + ": dimension mismatch");
    return p;
}

void writeTextFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output path '" + path + "'");
    out << content;
    if (!out) throw std::ios_base::failure("write failure on '" + path + "'");
}

void emit(const json& cfg, const std::string& content) {
    if (cfg.contains("output"))
        writeTextFile(cfg["output"].get<std::string>(), content);
    else
        std::cout << content << "\n";
}

hball::EquivalenceSettings settingsFrom(const json& cfg, std::uint64_t seed) {
    hball::EquivalenceSettings s;
    s.seed = seed;
    if (cfg.contains("ladderDepth")) s.adLadderDepth = cfg["ladderDepth"].get<int>();
    if (cfg.contains("membership")) {
        const json& m = cfg["membership"];
        if (m.contains("levels")) s.membershipLevels = m["levels"].get<int>();
        if (m.contains("rungsPerLevel")) s.membershipRungsPerLevel = m["rungsPerLevel"].get<int>();
        if (m.contains("scaffold")) s.scaffoldCount = m["scaffold"].get<int>();
        if (m.contains("plateauTol")) s.membership.plateauTol = m["plateauTol"].get<double>();
        if (m.contains("slopeTol")) s.membership.slopeTol = m["slopeTol"].get<double>();
    }
    if (cfg.contains("clark")) {
        const json& cl = cfg["clark"];
        if (cl.contains("gridCount")) s.gridCount = cl["gridCount"].get<int>();
        if (cl.contains("shells")) s.shells = cl["shells"].get<std::vector<double>>();
        if (cl.contains("stride")) s.sampleStride = cl["stride"].get<int>();
        if (cl.contains("ladderDepth")) s.clarkLadderDepth = cl["ladderDepth"].get<int>();
    }
    if (cfg.contains("atomThreshold")) s.atomThreshold = cfg["atomThreshold"].get<double>();
    return s;
}

hball::ClarkProblem clarkProblemFrom(const json& cfg) {
    const hball::Symbol b = symbolFrom(cfg);
    const int n = b.dimension();
    const std::uint64_t seed = requiredSeed(cfg);
    const Complex alpha = cfg.contains("alpha") ? complexFrom(cfg["alpha"]) : Complex(1.0);
    const int gridCount = cfg.contains("grid") && cfg["grid"].contains("count")
                              ? cfg["grid"]["count"].get<int>()
                              : 400;

    hball::ClarkProblem problem{b,
                                hball::ClarkParameter(alpha),
                                {},
                                hball::sphereGrid(n, gridCount, seed),
                                {},
                                true,
                                {},
                                {},
                                hball::NnlsOptions{}};
    if (cfg.contains("atomCandidates"))
        for (const json& p : cfg["atomCandidates"])
            problem.atomCandidates.emplace_back(vectorFrom(p));
    else
        problem.atomCandidates.push_back(hball::SpherePoint::axis(n, 0));
    if (cfg.contains("massConstraint")) problem.massConstraint = cfg["massConstraint"].get<bool>();
    if (cfg.contains("capPoints"))
        for (const json& p : cfg["capPoints"]) problem.capPoints.emplace_back(vectorFrom(p));
    else
        problem.capPoints = problem.atomCandidates;
    problem.capRadii = cfg.contains("capRadii") ? cfg["capRadii"].get<std::vector<double>>()
                                                : std::vector<double>{0.1, 0.2, 0.3};

    std::vector<double> shells{0.3, 0.6, 0.85};
    int stride = 4, ladderDepth = 10;
    if (cfg.contains("samples")) {
        const json& s = cfg["samples"];
        if (s.contains("shells")) shells = s["shells"].get<std::vector<double>>();
        if (s.contains("stride")) stride = s["stride"].get<int>();
        if (s.contains("ladderDepth")) ladderDepth = s["ladderDepth"].get<int>();
    }
    problem.interiorSamples =
        hball::clarkInteriorSamples(problem.grid, problem.atomCandidates, shells, stride, ladderDepth);
    return problem;
}

int runKernel(const json& cfg) {
    const hball::Symbol b = symbolFrom(cfg);
    const int n = b.dimension();
    requiredSeed(cfg);  // demanded for config uniformity even where unused
    const hball::SpherePoint xi = boundaryPointFrom(cfg, "xi", n);
    const int depth = cfg.contains("ladderDepth") ? cfg["ladderDepth"].get<int>() : 20;
    const bool haveEta = cfg.contains("eta");
    const Complex eta = haveEta ? complexFrom(cfg["eta"]) : Complex(1.0);

    std::ostringstream out;
    std::vector<std::string> header{"k", "r",  "re_b", "im_b", "K_diag",
                                    "P", "Kb_diag", "q1",   "q2"};
    if (haveEta) {
        header.push_back("re_ad");
        header.push_back("im_ad");
    }
    out << hball::csvRow(header);
    for (int k = 1; k <= depth; ++k) {
        const double r = 1.0 - std::ldexp(1.0, -k);
        const hball::BallPoint z = hball::radialPoint(xi, r);
        const Complex bv = b.eval(z);
        const auto q = hball::boundaryQuotients(b, z, xi,
                                                haveEta ? std::optional<Complex>(eta) : std::nullopt);
        const double kDiag = hball::szego(z, z).value.real();
        const double poisson = hball::invariantPoisson(z, xi);
        std::vector<std::string> row{std::to_string(k),        hball::fmt12(r),
                                     hball::fmt12(bv.real()),  hball::fmt12(bv.imag()),
                                     hball::fmt12(kDiag),      hball::fmt12(poisson),
                                     hball::fmt12(q.q2),       hball::fmt12(q.q1),
                                     hball::fmt12(q.q2)};
        if (haveEta) {
            row.push_back(hball::fmt12(q.adQuotient->real()));
            row.push_back(hball::fmt12(q.adQuotient->imag()));
        }
        out << hball::csvRow(row);
    }
    emit(cfg, out.str());
    return kExitOk;
}

int runGram(const json& cfg) {
    const hball::Symbol b = symbolFrom(cfg);
    const int n = b.dimension();
    hball::Rng rng(requiredSeed(cfg));
    const int numConfigs = cfg.contains("numConfigs") ? cfg["numConfigs"].get<int>() : 10;
    const int maxPoints = cfg.contains("maxPoints") ? cfg["maxPoints"].get<int>() : 10;
    const double separation = cfg.contains("separation") ? cfg["separation"].get<double>() : 0.05;

    json rows = json::array();
    for (int t = 0; t < numConfigs; ++t) {
        std::vector<hball::BallPoint> pts;
        const int target = 2 + static_cast<int>(rng.below(std::max(1, maxPoints - 1)));
        int guard = 0;
        while (static_cast<int>(pts.size()) < target && ++guard < 10000) {
            hball::CVec g(n);
            for (int j = 0; j < n; ++j) g[j] = rng.complexGaussian();
            if (g.norm() < 1e-12) continue;
            g *= 0.85 * std::sqrt(rng.uniform01()) / g.norm();
            hball::BallPoint cand(std::move(g));
            bool fits = true;
            for (const auto& p : pts)
                if ((p.coords() - cand.coords()).norm() < separation) fits = false;
            if (fits) pts.push_back(std::move(cand));
        }
        const hball::PointConfiguration config(pts);
        const hball::GramSection gram = hball::gramMatrix(b, config);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram.matrix, Eigen::EigenvaluesOnly);
        double herm = 0.0;
        for (int i = 0; i < config.size(); ++i)
            for (int j = 0; j < config.size(); ++j)
                herm = std::max(herm, std::abs(gram.matrix(i, j) - std::conj(gram.matrix(j, i))));

        Eigen::VectorXcd coeffs(config.size());
        for (int i = 0; i < config.size(); ++i)
            coeffs[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        hball::BallPoint z = hball::BallPoint::origin(n);
        while (true) {
            hball::CVec g(n);
            for (int j = 0; j < n; ++j) g[j] = rng.complexGaussian();
            if (g.norm() < 1e-12) continue;
            g *= 0.8 * std::sqrt(rng.uniform01()) / g.norm();
            bool distinct = true;
            for (const auto& p : pts)
                if ((p.coords() - g).norm() < 1e-6) distinct = false;
            if (distinct) {
                z = hball::BallPoint(std::move(g));
                break;
            }
        }
        const double residual = hball::reproducingCheck(b, config, coeffs, z);
        rows.push_back({{"size", config.size()},
                        {"separation", hball::round12(config.separation())},
                        {"lambdaMin", hball::round12(es.eigenvalues().minCoeff())},
                        {"lambdaMax", hball::round12(es.eigenvalues().maxCoeff())},
                        {"hermitianError", hball::round12(herm)},
                        {"reproducingResidual", hball::round12(residual)}});
    }
    json doc;
    doc["symbol"] = b.label();
    doc["configs"] = rows;
    emit(cfg, doc.dump(2));
    return kExitOk;
}

int runMember(const json& cfg) {
    const hball::Symbol b = symbolFrom(cfg);
    const int n = b.dimension();
    const std::uint64_t seed = requiredSeed(cfg);
    const hball::SpherePoint xi = boundaryPointFrom(cfg, "xi", n);
    const hball::EquivalenceSettings s = settingsFrom(cfg, seed);

    hball::CandidateFunction candidate = hball::constantCandidate(1.0);
    if (cfg.contains("candidate")) {
        const json& c = cfg["candidate"];
        const std::string type = c.at("type").get<std::string>();
        if (type == "constant") {
            candidate = hball::constantCandidate(complexFrom(c.at("value")));
        } else if (type == "coordinate") {
            candidate = hball::coordinateCandidate(c.at("index").get<int>());
        } else if (type == "boundaryKernel") {
            const Complex eta = c.contains("eta") ? complexFrom(c["eta"]) : Complex(1.0);
            candidate = hball::boundaryKernelCandidate(b, xi, eta);
        } else if (type == "szego") {
            candidate = hball::szegoCandidate(xi);
        } else {
            throw ConfigurationError("unknown candidate type '" + type + "'");
        }
    }
    const auto configs = hball::nestedRadialConfigs(xi, s.membershipLevels,
                                                    s.membershipRungsPerLevel, s.scaffoldCount, seed);
    const hball::MembershipReport report =
        hball::membershipEstimate(b, candidate, configs, s.membership);
    emit(cfg, hball::toJson(report));
    return kExitOk;
}

int runClarkSolve(const json& cfg) {
    const hball::ClarkProblem problem = clarkProblemFrom(cfg);
    const hball::ClarkSolveReport report = hball::solveClark(problem);
    json doc = json::parse(hball::toJson(report));
    doc["alpha"] = json::array({hball::round12(problem.alpha.value().real()),
                                hball::round12(problem.alpha.value().imag())});
    doc["symbol"] = problem.b.label();
    emit(cfg, doc.dump(2));
    if (cfg.contains("measureOutput")) {
        std::ostringstream ms;
        hball::writeMeasureCsv(report.measure, ms);
        writeTextFile(cfg["measureOutput"].get<std::string>(), ms.str());
    }
    return kExitOk;
}

int runClarkVerify(const json& cfg) {
    const hball::ClarkProblem problem = clarkProblemFrom(cfg);
    const hball::ClarkSolveReport solved = hball::solveClark(problem);
    const hball::DiscreteMeasure& mu = solved.measure;
    const hball::Symbol& b = problem.b;
    hball::Rng rng(requiredSeed(cfg) + 9);
    const int pairs = cfg.contains("pairs") ? cfg["pairs"].get<int>() : 20;
    const int n = b.dimension();

    auto interior = [&](double radius) {
        while (true) {
            hball::CVec g(n);
            for (int j = 0; j < n; ++j) g[j] = rng.complexGaussian();
            if (g.norm() >= 1e-12) return hball::BallPoint(g * (radius * std::sqrt(rng.uniform01()) / g.norm()));
        }
    };

    double worstLemma = 0.0;
    for (int t = 0; t < pairs; ++t)
        worstLemma = std::max(worstLemma,
                              hball::clarkInnerIdentityCheck(b, mu, interior(0.5), interior(0.5)));

    double worstImage = 0.0;
    std::vector<hball::BallPoint> anchors;
    for (int i = 0; i < 5; ++i) anchors.push_back(interior(0.5));
    for (const hball::BallPoint& w : anchors) {
        std::vector<Complex> g;
        for (const auto& xi : mu.support) g.push_back(hball::szegoBoundary(xi, w).value);
        for (const auto& [p, wt] : mu.designatedAtoms) g.push_back(hball::szegoBoundary(p, w).value);
        const hball::BallPoint z = interior(0.5);
        const Complex image = hball::vbTransform(b, mu, g, z);
        const Complex expected =
            hball::hbKernel(b, z, w).value / (1.0 - std::conj(b.eval(w)));
        worstImage = std::max(worstImage, std::abs(image - expected) / (1.0 + std::abs(expected)));
    }

    json doc;
    doc["symbol"] = b.label();
    doc["lemmaWorstResidual"] = hball::round12(worstLemma);
    doc["vbImageWorstResidual"] = hball::round12(worstImage);
    doc["solveResidualL2"] = hball::round12(solved.residualL2);
    doc["totalMass"] = hball::round12(solved.totalMass);
    emit(cfg, doc.dump(2));
    return kExitOk;
}

int runAngularScan(const json& cfg) {
    const hball::Symbol b = symbolFrom(cfg);
    const int n = b.dimension();
    requiredSeed(cfg);
    const int depth = cfg.contains("ladderDepth") ? cfg["ladderDepth"].get<int>() : 20;

    std::vector<hball::SpherePoint> points;
    if (cfg.contains("points"))
        for (const json& p : cfg["points"]) points.emplace_back(vectorFrom(p));
    else
        points.push_back(hball::SpherePoint::axis(n, 0));

    json rows = json::array();
    std::ostringstream csv;
    csv << hball::csvRow({"symbol", "xi", "cEstimate", "q2Limit", "caratheodory",
                          "derivativeModulus"});
    for (const hball::SpherePoint& xi : points) {
        const hball::ADReport report = hball::angularDerivativeEstimate(b, xi, depth);
        rows.push_back(json::parse(hball::toJson(report)));
        std::string xiText;
        for (int j = 0; j < xi.dim(); ++j) {
            if (j) xiText += ';';
            xiText += hball::fmt12(xi.coords()[j].real()) + "+" +
                      hball::fmt12(xi.coords()[j].imag()) + "i";
        }
        csv << hball::csvRow({b.label(), xiText, hball::fmt12(report.cEstimate),
                              hball::fmt12(report.q2Limit), report.caratheodory ? "1" : "0",
                              report.derivativeModulus ? hball::fmt12(*report.derivativeModulus)
                                                       : ""});
    }
    json doc;
    doc["symbol"] = b.label();
    doc["reports"] = rows;
    emit(cfg, doc.dump(2));
    if (cfg.contains("csvOutput")) writeTextFile(cfg["csvOutput"].get<std::string>(), csv.str());
    return kExitOk;
}

int runEquiv(const json& cfg) {
    const hball::Symbol b = symbolFrom(cfg);
    const int n = b.dimension();
    const std::uint64_t seed = requiredSeed(cfg);
    const hball::SpherePoint xi = boundaryPointFrom(cfg, "xi", n);
    const Complex alpha = cfg.contains("alpha") ? complexFrom(cfg["alpha"]) : Complex(1.0);
    const hball::EquivalenceSettings settings = settingsFrom(cfg, seed);

    const hball::EquivalenceRecord record =
        hball::equivalenceHarness(b, xi, hball::ClarkParameter(alpha), settings);
    emit(cfg, hball::toJson(record));
    if (cfg.contains("csvOutput"))
        writeTextFile(cfg["csvOutput"].get<std::string>(),
                      hball::equivalenceCsvHeader() + hball::equivalenceCsvRow(record));
    return kExitOk;
}

int runSelftest(const json& cfg) {
    hball::AcceptanceOptions opt;
    if (cfg.contains("seed")) opt.seed = cfg["seed"].get<std::uint64_t>();
    const auto results = hball::runAcceptanceSuite(opt);
    hball::printAcceptanceResults(results, std::cout);
    const std::string report = hball::acceptanceReportJson(results, opt.seed);
    if (cfg.contains("output")) writeTextFile(cfg["output"].get<std::string>(), report);
    return hball::allPassed(results) ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"H(b)-space numerics on the unit ball of C^n"};
    app.require_subcommand(1);

    std::string configPath;
    auto* kernelCmd = app.add_subcommand("kernel", "tabulate kernels and boundary quotients");
    auto* gramCmd = app.add_subcommand("gram", "Gram-section PSD and reproducing diagnostics");
    auto* memberCmd = app.add_subcommand("member", "membership pipeline for a candidate function");
    auto* clarkCmd = app.add_subcommand("clark", "Clark measure pipelines");
    auto* clarkSolveCmd = clarkCmd->add_subcommand("solve", "recover a Clark measure");
    auto* clarkVerifyCmd = clarkCmd->add_subcommand("verify", "kernel-identity and V_b checks");
    auto* angularCmd = app.add_subcommand("angular", "boundary behavior pipelines");
    auto* angularScanCmd = angularCmd->add_subcommand("scan", "angular-derivative reports");
    auto* equivCmd = app.add_subcommand("equiv", "full equivalence harness");
    auto* selftestCmd = app.add_subcommand("selftest", "run the acceptance suite");
    clarkCmd->require_subcommand(1);
    angularCmd->require_subcommand(1);

    for (CLI::App* cmd : {kernelCmd, gramCmd, memberCmd, clarkSolveCmd, clarkVerifyCmd,
                          angularScanCmd, equivCmd})
        cmd->add_option("--config", configPath, "JSON experiment config")->required();
    selftestCmd->add_option("--config", configPath, "JSON config with seed/output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return kExitUsage;
    }

    try {
        if (kernelCmd->parsed()) return runKernel(loadConfig(configPath));
        if (gramCmd->parsed()) return runGram(loadConfig(configPath));
        if (memberCmd->parsed()) return runMember(loadConfig(configPath));
        if (clarkCmd->parsed() && clarkSolveCmd->parsed())
            return runClarkSolve(loadConfig(configPath));
        if (clarkCmd->parsed() && clarkVerifyCmd->parsed())
            return runClarkVerify(loadConfig(configPath));
        if (angularCmd->parsed() && angularScanCmd->parsed())
            return runAngularScan(loadConfig(configPath));
        if (equivCmd->parsed()) return runEquiv(loadConfig(configPath));
        if (selftestCmd->parsed())
            return runSelftest(configPath.empty() ? json::object() : loadConfig(configPath));
    } catch (const hball::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    std::cerr << app.help() << "\n";
    return kExitUsage;
}
