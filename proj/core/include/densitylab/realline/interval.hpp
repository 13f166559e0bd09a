#pragma once

#include <string>
#include <vector>

#include "densitylab/core/rational.hpp"

namespace dlab {

// An interval of the real line with independent open/closed endpoints.
// lo = hi is allowed only for a closed point.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval point(const Rational& x) { return {x, x, true, true}; }

  bool empty() const { return hi < lo || (lo == hi && !(lo_closed && hi_closed)); }
  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const;
  std::string str() const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite union of intervals, stored sorted with overlapping parts, and
// parts touching at an included point, merged. Empty parts are dropped.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  static IntervalSet of(Interval i) { return IntervalSet(std::vector<Interval>{std::move(i)}); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool contains(const Rational& x) const;

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet intersect(const Interval& i) const;
  // [lo, hi] minus the set.
  IntervalSet complement_within(const Rational& lo, const Rational& hi) const;

  std::string str() const;
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

// Exact Lebesgue measure; endpoint flags do not matter.
Rational lebesgue(const IntervalSet& a);

enum class Side { Left, Right };

// lambda(A in (x - eps, x + eps)) / (2 eps); rejects eps <= 0.
Rational window_ratio(const IntervalSet& a, const Rational& x, const Rational& eps);

// lambda(A in (x, x + eps)) / eps or lambda(A in (x - eps, x)) / eps.
Rational one_sided_ratio(const IntervalSet& a, const Rational& x, const Rational& eps, Side side);

struct EndpointDensity {
  Rational point;
  Rational density;
};

// Every endpoint of every part with its two-sided density, which is constant
// for all small windows: 1/2 at an isolated endpoint, 0 at an isolated point
// and 1 where two open parts touch.
std::vector<EndpointDensity> endpoint_density_check(const IntervalSet& a);

}  // namespace dlab
