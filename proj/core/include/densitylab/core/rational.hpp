#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dlab {

// Exact rational backed by GMP. Always kept in lowest terms with a positive
// denominator; there is no floating point anywhere in the arithmetic.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(mpq_class q);

  // Accepts "p/q", "p" or "-p/q". Throws ParseError on malformed input and
  // PreconditionError on a zero denominator.
  static Rational parse(std::string_view text);
  // 2^e for any integer e.
  static Rational pow2(long e);

  // Canonical "p/q" form, e.g. "0/1" or "-5/18".
  std::string str() const;
  // Approximate decimal with the given number of significant digits.
  std::string decimal(int digits = 20) const;

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  std::string numerator() const;
  std::string denominator() const;
  // Exponent e if the value is exactly 2^e, otherwise false.
  bool is_pow2(long* exponent) const;
  // floor(log2(x)) for x > 0.
  long floor_log2() const;

  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Rational abs(const Rational& x);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);
// x^e for e >= 0.
Rational pow(const Rational& x, unsigned e);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace dlab
