#include "criteria.hpp"

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

// Usage: msf-acceptance [criterion ids...]
int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    try {
      only.insert(std::stoi(argv[i]));
    } catch (const std::exception&) {
      std::cerr << "not a criterion number: " << argv[i] << "\n";
      return 2;
    }
  }
  int failed = 0;
  msf::acceptance::run(only, [&](const msf::acceptance::CriterionResult& r) {
    std::cout << msf::acceptance::format_line(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
