#ifndef SPTFN_CHECK_HPP
#define SPTFN_CHECK_HPP

#include <string>
#include <vector>

namespace sptfn::check {

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Fast cross-validation subset (< 2 minutes).
std::vector<CheckResult> run_quick();

// The full acceptance suite; summatory CSV artifacts are written under
// artifact_dir.
std::vector<CheckResult> run_full(const std::string& artifact_dir = ".");

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace sptfn::check

#endif
