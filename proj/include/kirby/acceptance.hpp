#pragma once

// The acceptance criteria as runnable checks.

#include <string>
#include <vector>

#include "kirby/intmat.hpp"

namespace kirby {

struct D22Finding {
  IntegerMatrix word_product;  // W21^-1 W31^-1 W24 W34 W43^-1 W13^-1 W42 W12
  bool word_matches_d22 = false;
  bool word_in_opq = false;
  IntegerMatrix variant;       // variant with entry (1,1) = -1, not in O(2,2;Z)
  bool variant_in_opq = false;
  IntegerMatrix variant_form;  // variant * I_{2,2} * variant^t
};

D22Finding verify_d22();

struct CriterionResult {
  int id = 0;
  std::string title;
  bool check_passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> details;

  bool passed() const { return check_passed && seconds <= limit_seconds; }
};

struct AcceptanceOptions {
  std::string data_dir;
  unsigned jobs = 1;
};

inline constexpr int kCriterionCount = 14;

CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
/// Results in criterion order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// One line per criterion: `PASS|FAIL <id> <title> (<s>s, limit <s>s): <first detail>`.
std::string format_result_line(const CriterionResult& r);

/// Data directory baked in at build time.
std::string default_data_dir();

}  // namespace kirby
