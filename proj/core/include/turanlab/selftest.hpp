#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace turanlab {

struct SelftestOptions {
  int threads = 1;
  std::uint64_t seed = 20240601;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Number of acceptance criteria; ids run from 1.
inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const SelftestOptions& options = {});
std::vector<CriterionResult> run_acceptance(const SelftestOptions& options = {});

// e_r by explicit subset enumeration; independent of elem_sym.
std::int64_t elem_sym_by_subsets(const std::vector<std::int64_t>& values, int r);

}  // namespace turanlab
