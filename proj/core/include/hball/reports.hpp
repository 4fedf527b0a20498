#pragma once

#include <string>
#include <vector>

#include "hball/angular.hpp"
#include "hball/clark.hpp"
#include "hball/hbspace.hpp"

namespace hball {

// Fixed 12-significant-digit formatting used by every report writer; output
// must be byte-stable for fixed inputs.
std::string fmt12(double x);
// The double nearest the 12-digit decimal rendering of x; reports round
// through this so that serialized values reparse exactly.
double round12(double x);

// RFC-4180 field quoting.
std::string csvField(const std::string& raw);
std::string csvRow(const std::vector<std::string>& fields);

std::string toJson(const MembershipReport& report);
std::string toJson(const ClarkSolveReport& report);
std::string toJson(const ADReport& report);
std::string toJson(const EquivalenceRecord& record);

// CSV matrix row (symbol x boundary point x indicator) for an equivalence
// record; pairs with equivalenceCsvHeader().
std::string equivalenceCsvHeader();
std::string equivalenceCsvRow(const EquivalenceRecord& record);

}  // namespace hball
