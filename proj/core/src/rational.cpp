#include "densitylab/core/rational.hpp"

#include <cctype>
#include <ostream>
#include <vector>

#include "densitylab/core/errors.hpp"

namespace dlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_power_of_two(const mpz_class& z) {
  return z > 0 && mpz_popcount(z.get_mpz_t()) == 1;
}

}  // namespace

Rational::Rational(long n, long d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  q_ = mpq_class(n, 1);
  q_ /= d;
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw PreconditionError("rational with zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(mpq_class(p));
  return Rational(mpq_class(mpz_class(1), p));
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (is_zero()) return "0";
  mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(digits) * 4 + 64;
  mpf_class f(q_, bits);
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  int n = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<size_t>(n) + 1);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  }
  return std::string(buf.data());
}

bool Rational::is_integer() const { return q_.get_den() == 1; }

std::string Rational::numerator() const { return q_.get_num().get_str(); }
std::string Rational::denominator() const { return q_.get_den().get_str(); }

bool Rational::is_pow2(long* exponent) const {
  const mpz_class& n = q_.get_num();
  const mpz_class& d = q_.get_den();
  if (n == 1 && is_power_of_two(d)) {
    if (exponent) *exponent = -static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2) - 1);
    return true;
  }
  if (d == 1 && is_power_of_two(n)) {
    if (exponent) *exponent = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2) - 1);
    return true;
  }
  return false;
}

long Rational::floor_log2() const {
  if (sign() <= 0) throw PreconditionError("floor_log2 of a non-positive rational");
  long e = static_cast<long>(mpz_sizeinbase(q_.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q_.get_den().get_mpz_t(), 2));
  // The true value lies in [e-1, e+1).
  if (*this >= pow2(e + 1)) return e + 1;
  if (*this >= pow2(e)) return e;
  return e - 1;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow(const Rational& x, unsigned e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), x.raw().get_den_mpz_t(), e);
  return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace dlab
