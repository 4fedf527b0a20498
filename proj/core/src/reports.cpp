#include "hball/reports.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace hball {

std::string fmt12(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double round12(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(fmt12(x).c_str(), nullptr);
}

std::string csvField(const std::string& raw) {
    if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string csvRow(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) row += ',';
        row += csvField(fields[i]);
    }
    row += "\r\n";
    return row;
}

namespace {

using nlohmann::json;

json numberOrString(double x) {
    if (std::isfinite(x)) return round12(x);
    return fmt12(x);  // "inf"/"-inf"/"nan" as strings, JSON has no literals for them
}

json complexJson(const Complex& c) { return json::array({round12(c.real()), round12(c.imag())}); }

json pointJson(const SpherePoint& p) {
    json arr = json::array();
    for (int j = 0; j < p.dim(); ++j) arr.push_back(complexJson(p.coords()[j]));
    return arr;
}

}  // namespace

std::string toJson(const MembershipReport& report) {
    json doc;
    doc["label"] = report.label;
    doc["configSizes"] = report.configSizes;
    json estimates = json::array();
    for (double e : report.normEstimates) estimates.push_back(numberOrString(e));
    doc["normEstimates"] = estimates;
    doc["verdict"] = verdictName(report.verdict);
    doc["boundValue"] = numberOrString(report.boundValue);
    return doc.dump(2);
}

std::string toJson(const ClarkSolveReport& report) {
    json doc;
    doc["totalMass"] = numberOrString(report.totalMass);
    doc["residualL2"] = numberOrString(report.residualL2);
    doc["iterations"] = report.iterations;
    json atoms = json::array();
    for (const auto& [p, w] : report.measure.designatedAtoms)
        atoms.push_back({{"point", pointJson(p)}, {"mass", numberOrString(w)}});
    doc["atoms"] = atoms;
    json caps = json::array();
    for (const CapMassRow& row : report.capMasses) {
        json masses = json::object();
        for (std::size_t i = 0; i < row.radii.size(); ++i)
            masses[fmt12(row.radii[i])] = numberOrString(row.masses[i]);
        caps.push_back({{"point", pointJson(row.point)}, {"masses", masses}});
    }
    doc["capMasses"] = caps;
    return doc.dump(2);
}

std::string toJson(const ADReport& report) {
    json doc;
    doc["xi"] = pointJson(report.xi);
    doc["cEstimate"] = numberOrString(report.cEstimate);
    doc["q2Limit"] = numberOrString(report.q2Limit);
    doc["caratheodory"] = report.caratheodory;
    if (report.etaEstimate) doc["etaEstimate"] = complexJson(*report.etaEstimate);
    if (report.derivativeModulus) doc["derivativeModulus"] = numberOrString(*report.derivativeModulus);
    return doc.dump(2);
}

std::string toJson(const EquivalenceRecord& record) {
    json doc;
    doc["symbol"] = record.symbolLabel;
    doc["xi"] = pointJson(record.xi);
    doc["alpha"] = complexJson(record.alpha);
    doc["dimension"] = record.dimension;
    doc["cFinite"] = record.cFinite;
    doc["cEstimate"] = numberOrString(record.cEstimate);
    doc["q2Finite"] = record.q2Finite;
    doc["q2Limit"] = numberOrString(record.q2Limit);
    doc["caratheodory"] = record.caratheodory;
    if (record.eta) doc["eta"] = complexJson(*record.eta);
    doc["membershipVerdict"] = verdictName(record.membershipVerdict);
    doc["membershipBound"] = numberOrString(record.membershipBound);
    doc["atomMass"] = numberOrString(record.atomMass);
    doc["clarkResidual"] = numberOrString(record.clarkResidual);
    doc["consistent_n1"] = record.consistent_n1;
    return doc.dump(2);
}

std::string equivalenceCsvHeader() {
    return csvRow({"symbol", "dimension", "xi", "alpha", "cFinite", "cEstimate", "q2Finite",
                   "q2Limit", "caratheodory", "membershipVerdict", "membershipBound", "atomMass",
                   "clarkResidual", "consistent_n1"});
}

std::string equivalenceCsvRow(const EquivalenceRecord& record) {
    std::string xi;
    for (int j = 0; j < record.xi.dim(); ++j) {
        if (j) xi += ';';
        xi += fmt12(record.xi.coords()[j].real()) + "+" + fmt12(record.xi.coords()[j].imag()) + "i";
    }
    const std::string alpha = fmt12(record.alpha.real()) + "+" + fmt12(record.alpha.imag()) + "i";
    return csvRow({record.symbolLabel, std::to_string(record.dimension), xi, alpha,
                   record.cFinite ? "1" : "0", fmt12(record.cEstimate),
                   record.q2Finite ? "1" : "0", fmt12(record.q2Limit),
                   record.caratheodory ? "1" : "0", verdictName(record.membershipVerdict),
                   fmt12(record.membershipBound), fmt12(record.atomMass),
                   fmt12(record.clarkResidual), record.consistent_n1 ? "1" : "0"});
}

}  // namespace hball
