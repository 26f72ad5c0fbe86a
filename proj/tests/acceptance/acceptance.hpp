#pragma once

#include <string>
#include <vector>

namespace acceptance {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> run_all();

// "PASS [n] title (detail; 0.123 s)"
std::string format(const CriterionResult& r);

}  // namespace acceptance
