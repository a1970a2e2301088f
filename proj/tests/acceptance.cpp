// Runs every acceptance criterion and prints one line per criterion.
// Optional arguments restrict the run to the listed criterion numbers.
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "rootline/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= rootline::kCriterionCount; ++i) ids.push_back(i);
  int failed = 0;
  for (int id : ids) {
    auto r = rootline::run_criterion(id);
    std::printf("%s [%.1fs]\n", rootline::format_line(r).c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
  return failed == 0 ? 0 : 1;
}
