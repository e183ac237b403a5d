#include <cstdio>

#include "subdirekt/verify.hpp"

int main() {
  bool all = true;
  for (int i = 1; i <= 11; ++i) {
    subdirekt::verify::CheckResult r = subdirekt::verify::criterion(i);
    all = all && r.pass;
    std::printf("%s %s — %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
