#include <cstdio>

#include "cmlab/acceptance.hpp"

int main() {
  int failed = 0;
  cmlab::run_acceptance({}, [&](const cmlab::CriterionResult& r) {
    std::printf("%s\n", cmlab::summary_line(r).c_str());
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  std::printf("%d of %d criteria passed\n", cmlab::criterion_count() - failed,
              cmlab::criterion_count());
  return failed == 0 ? 0 : 1;
}
