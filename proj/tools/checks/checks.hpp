#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dlab::checks {

struct Result {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  double budget_seconds = 0;
  std::function<Result(std::uint64_t seed)> run;
};

// The eleven acceptance criteria, in order, with their time budgets.
const std::vector<Criterion>& criteria();

Result spongy_measure_check(std::uint64_t seed);
Result spongy_chain_check(std::uint64_t seed);
Result fat_cantor_check(std::uint64_t seed);
Result halfdensity_check(std::uint64_t seed);
Result allocation_check(std::uint64_t seed);
Result embedding_check(std::uint64_t seed);
Result sharp_rho_check(std::uint64_t seed);
Result sharp_trajectory_check(std::uint64_t seed);
Result compact_reduction_check(std::uint64_t seed);
Result thick_cothick_check(std::uint64_t seed);
Result property_suite_check(std::uint64_t seed);

}  // namespace dlab::checks
