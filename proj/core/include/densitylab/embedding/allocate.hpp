#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "densitylab/core/rational.hpp"

namespace dlab {

// Pours amphorae a_i into barrels b_k: returns disjoint index sets I_k
// covering every i with sum over I_k of a_i < b_k. Barrel k greedily takes,
// in input order, every unplaced amphora that still fits. Needs
// sum a < sum b and max a_i <= (sum b - sum a) / (number of barrels).
std::vector<std::vector<std::size_t>> allocate_amphorae(const std::vector<Rational>& b,
                                                        const std::vector<Rational>& a);

// The same greedy without the size bound; nullopt if something is left over.
std::optional<std::vector<std::vector<std::size_t>>> greedy_amphorae(const std::vector<Rational>& b,
                                                                     const std::vector<Rational>& a);

// Splits barrels B_1..B_M into consecutive blocks J_k = [first, last) with
// A_k < sum over J_k of B_j. Each block is the least sufficient one except
// the last, which takes the rest. Needs sum A < sum B and, for N >= 2,
// max B_j <= (sum B - sum A) / (N - 1).
std::vector<std::pair<std::size_t, std::size_t>> allocate_barrels(const std::vector<Rational>& A,
                                                                  const std::vector<Rational>& B);

}  // namespace dlab
