#include <iostream>

#include "acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& r : acceptance::run_all()) {
    std::cout << acceptance::format(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
