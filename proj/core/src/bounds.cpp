#include "densitylab/core/bounds.hpp"

#include "densitylab/core/errors.hpp"

namespace dlab {

MeasureBounds::MeasureBounds(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw PreconditionError("bounds with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
}

MeasureBounds MeasureBounds::scale(const Rational& c) const {
  if (c.sign() >= 0) return {lo_ * c, hi_ * c};
  return {hi_ * c, lo_ * c};
}

MeasureBounds MeasureBounds::clamp(const Rational& floor, const Rational& ceil) const {
  Rational lo = max(lo_, floor);
  Rational hi = min(hi_, ceil);
  // A clamp can only cross over when the enclosure was already inconsistent
  // with the constraint; collapse onto the nearer edge instead of throwing.
  if (hi < lo) {
    if (lo_ > ceil) return MeasureBounds(ceil);
    return MeasureBounds(floor);
  }
  return {std::move(lo), std::move(hi)};
}

MeasureBounds MeasureBounds::hull(const MeasureBounds& o) const {
  return {min(lo_, o.lo_), max(hi_, o.hi_)};
}

}  // namespace dlab
