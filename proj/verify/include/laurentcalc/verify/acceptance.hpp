#ifndef LAURENTCALC_VERIFY_ACCEPTANCE_HPP
#define LAURENTCALC_VERIFY_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lc::verify
{

struct SuiteOptions {
    std::uint64_t seed = 20240611;
    unsigned sample_height = 6;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

constexpr int criterion_count = 10;

std::string criterion_name(int id);
CriterionResult run_criterion(int id, const SuiteOptions &opts = {});
// All criteria in order; the last one also checks the total runtime.
std::vector<CriterionResult> run_all(const SuiteOptions &opts = {});
std::string format_line(const CriterionResult &r);

} // namespace lc::verify

#endif
