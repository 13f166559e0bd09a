#pragma once

#include "densitylab/core/rational.hpp"
#include "densitylab/core/word.hpp"

namespace dlab {

struct ClosedInterval {
  Rational lo;
  Rational hi;
  Rational length() const { return hi - lo; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

// Dyadic interval coding of finite sequences of naturals. I(empty) = [0, 1];
// children of an even-length node fill [a, b] from the left endpoint towards
// the right, children of an odd-length node from the right endpoint towards
// the left, the k-th child taking a 2^-(k+1) share.
ClosedInterval baire_interval(const Word& s);

}  // namespace dlab
