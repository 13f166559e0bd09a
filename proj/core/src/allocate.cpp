#include "densitylab/embedding/allocate.hpp"

#include "densitylab/core/errors.hpp"

namespace dlab {

namespace {

Rational sum(const std::vector<Rational>& v) {
  Rational s(0);
  for (const Rational& x : v) s += x;
  return s;
}

void check_positive(const std::vector<Rational>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].sign() <= 0) throw PreconditionError(std::string(what) + "[" + std::to_string(i) + "] must be positive");
}

}  // namespace

std::vector<std::vector<std::size_t>> allocate_amphorae(const std::vector<Rational>& b,
                                                        const std::vector<Rational>& a) {
  if (b.empty()) throw PreconditionError("amphorae need at least one barrel");
  check_positive(b, "b");
  check_positive(a, "a");
  Rational sb = sum(b), sa = sum(a);
  if (!(sa < sb)) throw PreconditionError("amphorae need sum a < sum b; got " + sa.str() + " >= " + sb.str());
  Rational r = (sb - sa) / Rational(static_cast<long>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > r) throw PreconditionError("amphora " + std::to_string(i) + " = " + a[i].str() + " exceeds r = " + r.str());

  auto out = greedy_amphorae(b, a);
  if (!out) throw CertificationError("amphorae allocation left items unplaced");
  return *out;
}

std::optional<std::vector<std::vector<std::size_t>>> greedy_amphorae(const std::vector<Rational>& b,
                                                                     const std::vector<Rational>& a) {
  Rational smallest = a.empty() ? Rational(0) : a[0];
  for (const Rational& x : a) smallest = min(smallest, x);
  std::vector<std::vector<std::size_t>> out(b.size());
  std::vector<std::size_t> pending(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) pending[i] = i;
  for (std::size_t k = 0; k < b.size() && !pending.empty(); ++k) {
    Rational room = b[k];
    std::vector<std::size_t> rest;
    for (std::size_t idx = 0; idx < pending.size(); ++idx) {
      std::size_t i = pending[idx];
      // Once no amphora can fit, the barrel is maximal.
      if (room <= smallest) {
        rest.insert(rest.end(), pending.begin() + static_cast<std::ptrdiff_t>(idx), pending.end());
        break;
      }
      if (a[i] < room) {
        room -= a[i];
        out[k].push_back(i);
      } else {
        rest.push_back(i);
      }
    }
    pending = std::move(rest);
  }
  if (!pending.empty()) return std::nullopt;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> allocate_barrels(const std::vector<Rational>& A,
                                                                  const std::vector<Rational>& B) {
  if (A.empty()) throw PreconditionError("barrels need N >= 1");
  check_positive(A, "A");
  check_positive(B, "B");
  Rational sA = sum(A), sB = sum(B);
  if (!(sA < sB)) throw PreconditionError("barrels need sum A < sum B; got " + sA.str() + " >= " + sB.str());
  std::size_t n = A.size();
  if (n == 1) return {{0, B.size()}};
  Rational R = (sB - sA) / Rational(static_cast<long>(n - 1));
  for (std::size_t j = 0; j < B.size(); ++j)
    if (B[j] > R) throw PreconditionError("barrel " + std::to_string(j) + " = " + B[j].str() + " exceeds R = " + R.str());

  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t j = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t first = j;
    Rational s(0);
    while (j < B.size() && !(s > A[k])) s += B[j++];
    if (!(s > A[k])) throw CertificationError("barrel scan broke down at block " + std::to_string(k));
    out.emplace_back(first, j);
  }
  Rational s(0);
  for (std::size_t i = j; i < B.size(); ++i) s += B[i];
  if (!(s > A[n - 1])) throw CertificationError("last barrel block is insufficient");
  out.emplace_back(j, B.size());
  return out;
}

}  // namespace dlab
