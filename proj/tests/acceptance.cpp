// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  CSV artifacts land in the directory given as argv[1] (default .).
#include "sptfn/check.hpp"

#include <cstdio>

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : ".";
    auto results = sptfn::check::run_full(dir);
    for (const auto& r : results) {
        std::printf("[%s] criterion %s: %s (%s) [%.1fs]\n", r.passed ? "PASS" : "FAIL",
                    r.id.c_str(), r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    }
    return sptfn::check::all_passed(results) ? 0 : 1;
}
