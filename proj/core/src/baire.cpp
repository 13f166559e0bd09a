#include "densitylab/core/baire.hpp"

#include "densitylab/core/errors.hpp"

namespace dlab {

ClosedInterval baire_interval(const Word& s) {
  Rational a(0), b(1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    int k = s[i];
    if (k < 0) throw PreconditionError("baire_interval needs a sequence of naturals");
    Rational len = b - a;
    Rational far = len * Rational::pow2(-k);
    Rational near = len * Rational::pow2(-k - 1);
    if (i % 2 == 0) {
      Rational lo = a + near;
      Rational hi = a + far;
      a = std::move(lo);
      b = std::move(hi);
    } else {
      Rational lo = b - far;
      Rational hi = b - near;
      a = std::move(lo);
      b = std::move(hi);
    }
  }
  return {a, b};
}

}  // namespace dlab
