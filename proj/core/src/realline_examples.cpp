#include "densitylab/realline/examples.hpp"

#include "densitylab/core/errors.hpp"

namespace dlab {

IntervalSet example_halfdensity(std::size_t n, bool close_core) {
  if (n < 1) throw PreconditionError("example_halfdensity needs N >= 1");
  std::vector<Interval> parts;
  for (std::size_t k = 0; k < n; ++k) {
    long e = 2 * static_cast<long>(k);
    parts.push_back(Interval::open(-Rational::pow2(-e - 1), -Rational::pow2(-e - 2)));
    parts.push_back(Interval::open(Rational::pow2(-e - 1), Rational::pow2(-e)));
  }
  if (close_core) {
    Rational core = Rational::pow2(-2 * static_cast<long>(n));
    parts.push_back(Interval::open(-core / Rational(3), Rational(0)));
    parts.push_back(Interval::open(Rational(0), Rational(2) * core / Rational(3)));
  }
  return IntervalSet(std::move(parts));
}

namespace {

void check_decreasing(const std::vector<Rational>& eps, std::size_t needed) {
  if (eps.size() < needed) throw PreconditionError("radius sequence too short for the requested truncation");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i].sign() <= 0) throw PreconditionError("radii must be positive");
    if (i && !(eps[i] < eps[i - 1])) throw PreconditionError("radii must be strictly decreasing");
  }
}

}  // namespace

Rational basis_midpoint(const std::vector<Rational>& eps, std::size_t n) {
  if (n + 1 >= eps.size()) throw PreconditionError("basis_midpoint index out of range");
  return (eps[n] + eps[n + 1]) / Rational(2);
}

IntervalSet basis_counterexample(const Rational& x, const std::vector<Rational>& eps, std::size_t n,
                                 bool close_core) {
  check_decreasing(eps, n + 1);
  std::vector<Interval> parts;
  for (std::size_t k = 0; k < n; ++k) {
    Rational d = basis_midpoint(eps, k);
    // B(x; d) \ B(x; eps_{k+1}) with open balls keeps the inner radius.
    parts.push_back({x - d, x - eps[k + 1], false, true});
    parts.push_back({x + eps[k + 1], x + d, true, false});
  }
  if (close_core) parts.push_back(Interval::open(x, x + eps[n]));
  return IntervalSet(std::move(parts));
}

IntervalSet oscillation_example(const Rational& x, const std::vector<Rational>& eps, std::size_t n,
                                Variant variant) {
  check_decreasing(eps, 2 * n);
  for (std::size_t i = 1; i < eps.size(); ++i)
    if (eps[i] * Rational(4) > eps[i - 1]) throw PreconditionError("oscillation example needs eps_{k+1}/eps_k <= 1/4");
  bool closed = variant == Variant::Closed;
  std::vector<Interval> parts;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& outer = eps[2 * k];
    const Rational& inner = eps[2 * k + 1];
    parts.push_back({x - outer, x - inner, closed, true});
    parts.push_back({x + inner, x + outer, true, closed});
  }
  if (closed) parts.push_back(Interval::point(x));
  return IntervalSet(std::move(parts));
}

Rational FatCantorSchedule::eps(std::size_t n) const { return eps0 * pow(rho, static_cast<unsigned>(n)); }

Rational FatCantorSchedule::tail(std::size_t n) const {
  Rational two_rho = Rational(2) * rho;
  return eps0 * pow(two_rho, static_cast<unsigned>(n)) / (Rational(1) - two_rho);
}

namespace {

void check_schedule(const FatCantorSchedule& sc, std::size_t depth) {
  if (sc.eps0.sign() <= 0 || sc.rho.sign() <= 0) throw PreconditionError("fat Cantor weights must be positive");
  if (!(Rational(2) * sc.rho < Rational(1))) throw PreconditionError("fat Cantor needs 2 rho < 1");
  if (sc.tail(0) != Rational(1))
    throw PreconditionError("fat Cantor needs sum 2^n eps_n = 1, got " + sc.tail(0).str());
  Rational len(2);
  for (std::size_t n = 0; n <= depth; ++n) {
    if (!(sc.eps(n) < len)) throw PreconditionError("fat Cantor removal at level " + std::to_string(n) + " too long");
    len = (len - sc.eps(n)) / Rational(2);
  }
}

}  // namespace

Interval fat_cantor_node(const FatCantorSchedule& schedule, const Word& s) {
  Rational a(0), b(2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational e = schedule.eps(i);
    if (s[i] == 0)
      b = (a + b - e) / Rational(2);
    else
      a = (a + b + e) / Rational(2);
  }
  return Interval::open(a, b);
}

Rational fat_cantor_measure_in(const FatCantorSchedule& schedule, const Word& s) {
  return fat_cantor_node(schedule, s).length() - Rational::pow2(-static_cast<long>(s.size())) * schedule.tail(s.size());
}

FatCantor fat_cantor(const FatCantorSchedule& schedule, std::size_t depth) {
  check_schedule(schedule, depth);
  FatCantor out;
  out.schedule = schedule;
  out.depth = depth;
  out.nodes.emplace(Word(), Interval::open(Rational(0), Rational(2)));
  std::vector<Word> level{Word()};
  for (std::size_t n = 0; n < depth; ++n) {
    Rational e = schedule.eps(n);
    std::vector<Word> next;
    for (const Word& s : level) {
      const Interval& u = out.nodes.at(s);
      Word s0 = s.child(0), s1 = s.child(1);
      out.nodes.emplace(s0, Interval::open(u.lo, (u.lo + u.hi - e) / Rational(2)));
      out.nodes.emplace(s1, Interval::open((u.lo + u.hi + e) / Rational(2), u.hi));
      next.push_back(std::move(s0));
      next.push_back(std::move(s1));
    }
    level = std::move(next);
  }
  std::vector<Interval> parts;
  for (const Word& s : level) {
    const Interval& u = out.nodes.at(s);
    parts.push_back(Interval::closed(u.lo, u.hi));
  }
  out.stage = IntervalSet(std::move(parts));
  return out;
}

}  // namespace dlab
