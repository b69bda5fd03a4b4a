#include <cstdlib>
#include <iostream>

#include <laurentcalc/verify/acceptance.hpp>

int main(int argc, char **argv)
{
    lc::verify::SuiteOptions opts;
    if (argc > 1) {
        opts.seed = std::strtoull(argv[1], nullptr, 10);
    }
    bool ok = true;
    for (const auto &r : lc::verify::run_all(opts)) {
        std::cout << lc::verify::format_line(r) << std::endl;
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
