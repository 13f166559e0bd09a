#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "densitylab/core/word.hpp"
#include "densitylab/realline/interval.hpp"

namespace dlab {

// The union over n < N of (-2^-(2n+1), -2^-(2n+2)) and (2^-(2n+1), 2^-2n).
// With close_core the omitted levels are replaced by (-4^-N / 3, 0) and
// (0, 2 * 4^-N / 3), which carry exactly their left and right mass, so every
// window ratio at a scale >= 4^-N equals that of the infinite set.
IntervalSet example_halfdensity(std::size_t n, bool close_core = true);

// Annuli B(x; delta_n) \ B(x; eps_{n+1}) for n < N with delta_n the midpoint
// of eps_n and eps_{n+1}. With close_core the ball B(x; eps_N) is
// half-filled by (x, x + eps_N), which makes the ratio 1/2 at every eps_n
// and (eps_{n+1}/eps_n + 1)^-1 at every delta_n exact for n < N.
IntervalSet basis_counterexample(const Rational& x, const std::vector<Rational>& eps, std::size_t n,
                                 bool close_core = true);

// delta_n used by basis_counterexample.
Rational basis_midpoint(const std::vector<Rational>& eps, std::size_t n);

enum class Variant { Open, Closed };

// Annuli B(x; eps_2n) \ B(x; eps_{2n+1}) for n < N; the closed variant uses
// closed annuli and adds the point x. Needs eps_{k+1} / eps_k <= 1/4.
IntervalSet oscillation_example(const Rational& x, const std::vector<Rational>& eps, std::size_t n,
                                Variant variant);

// Removal lengths eps_n = eps0 * rho^n with 2 rho < 1.
struct FatCantorSchedule {
  Rational eps0{1, 2};
  Rational rho{1, 4};

  Rational eps(std::size_t n) const;
  // sum over m >= n of 2^m eps_m.
  Rational tail(std::size_t n) const;
};

struct FatCantor {
  FatCantorSchedule schedule;
  std::size_t depth = 0;
  // The closed intervals [a_s, b_s] with |s| = depth.
  IntervalSet stage;
  // U_s = (a_s, b_s) for every |s| <= depth.
  std::map<Word, Interval> nodes;
};

// Starts from U_empty = (0, 2) and removes from each U_s the closed centered
// interval of length eps_|s|. Rejects schedules with sum 2^n eps_n != 1,
// 2 rho >= 1, or eps_n >= |U_s| at some level.
FatCantor fat_cantor(const FatCantorSchedule& schedule, std::size_t depth);

// The open interval U_s, computed directly from s.
Interval fat_cantor_node(const FatCantorSchedule& schedule, const Word& s);

// lambda(K in U_s) = |U_s| - 2^-|s| * tail(|s|) for the limit set K.
Rational fat_cantor_measure_in(const FatCantorSchedule& schedule, const Word& s);

}  // namespace dlab
