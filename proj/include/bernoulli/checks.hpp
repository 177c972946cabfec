#ifndef BERNOULLI_CHECKS_HPP
#define BERNOULLI_CHECKS_HPP

#include <string>
#include <vector>

namespace bernoulli::checks {

struct CheckResult {
    std::string name;
    double residual;   // measured, in the tolerance's own normalization
    double tolerance;  // pinned bound
    bool pass;
};

// Suites: "routes", "tables", "identities", "asymptotics".
const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace bernoulli::checks

#endif
