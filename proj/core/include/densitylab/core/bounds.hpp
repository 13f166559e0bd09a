#pragma once

#include <string>

#include "densitylab/core/rational.hpp"

namespace dlab {

// Closed rational interval [lo, hi] known to contain a quantity that finite
// depth cannot pin exactly. Every operation here is outward-conservative.
class MeasureBounds {
 public:
  MeasureBounds() = default;
  explicit MeasureBounds(Rational exact) : lo_(exact), hi_(std::move(exact)) {}
  MeasureBounds(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational center() const { return (lo_ + hi_) / Rational(2); }
  bool exact() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const MeasureBounds& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  // Interval sum.
  MeasureBounds operator+(const MeasureBounds& o) const { return {lo_ + o.lo_, hi_ + o.hi_}; }
  MeasureBounds operator+(const Rational& c) const { return {lo_ + c, hi_ + c}; }
  // Multiplication by a constant of either sign.
  MeasureBounds scale(const Rational& c) const;
  // Widen by `below` on the left and `above` on the right.
  MeasureBounds widen(const Rational& below, const Rational& above) const { return {lo_ - below, hi_ + above}; }
  // Intersection with [floor, ceil]; the true value is known to lie there.
  MeasureBounds clamp(const Rational& floor, const Rational& ceil) const;
  MeasureBounds hull(const MeasureBounds& o) const;

  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

  friend bool operator==(const MeasureBounds&, const MeasureBounds&) = default;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

}  // namespace dlab
