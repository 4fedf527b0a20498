// Acceptance gate: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status 0 only when all pass.

#include <cstdlib>
#include <iostream>

#include "hball/acceptance.hpp"

int main(int argc, char** argv) {
    hball::AcceptanceOptions opt;
    if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
    const auto results = hball::runAcceptanceSuite(opt);
    hball::printAcceptanceResults(results, std::cout);
    return hball::allPassed(results) ? 0 : 1;
}
