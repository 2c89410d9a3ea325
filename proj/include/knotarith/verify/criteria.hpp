#pragma once

#include "knotarith/knots/table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knotarith::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no time limit
};

struct Settings {
  std::uint32_t seed = 2024;
  std::size_t random_words = 1000;
  const knots::KnotTable* table = nullptr;  // null: the built-in table
};

inline constexpr int kCriteriaCount = 9;

/// Runs one acceptance criterion (1..9), timing it against its limit.
CriterionResult run_criterion(int id, const Settings& settings = {});

/// Criteria grouped by suite: "fox", "zeta", "covers", "arith", "all".
/// Throws ValidationError for an unknown suite name.
std::vector<int> suite_criteria(const std::string& suite);

/// Criteria of the suite in order; "covers" and "all" append the trefoil
/// golden-value item (id 0).
std::vector<CriterionResult> run_suite(const std::string& suite, const Settings& settings = {});

/// "PASS [3] title (0.012 s < 5 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace knotarith::verify
