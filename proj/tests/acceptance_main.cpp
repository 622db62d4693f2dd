#include <iostream>

#include "acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : hb::acceptance::run_all()) {
    std::cout << hb::acceptance::format(r, true) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria PASS" : std::to_string(failed) + " criteria FAIL") << std::endl;
  return failed == 0 ? 0 : 1;
}
