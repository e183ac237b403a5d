#ifndef SUBDIREKT_VERIFY_HPP_
#define SUBDIREKT_VERIFY_HPP_

#include <string>
#include <vector>

namespace subdirekt::verify {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// The acceptance battery; each criterion is self-contained and pins its
// own bounds and tolerances.
CheckResult criterion(int number);
std::vector<CheckResult> run_all();

// Named verification suites exposed by the CLI.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace subdirekt::verify

#endif  // SUBDIREKT_VERIFY_HPP_
