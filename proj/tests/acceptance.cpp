// Acceptance battery: one verdict line per criterion, nonzero exit on any
// failure.  The same checks back the `gsym suite` subcommand.
#include <iostream>

#include <gsym/suite.hpp>

int main() {
    auto results = gsym::runAcceptanceSuite(0, &std::cout);
    bool ok = gsym::allCriteriaPass(results);
    std::cout << (ok ? "all criteria pass" : "FAILURES present") << "\n";
    return ok ? 0 : 1;
}
