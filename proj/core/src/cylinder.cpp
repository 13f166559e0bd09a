#include "densitylab/cantor/cylinder.hpp"

#include <algorithm>
#include <iterator>

#include "densitylab/core/errors.hpp"

namespace dlab {

namespace {

bool siblings(const Word& a, const Word& b) {
  std::size_t n = a.size();
  if (n == 0 || b.size() != n || a[n - 1] != 0 || b[n - 1] != 1) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

void complement_range(const std::vector<Word>& g, std::size_t lo, std::size_t hi, Word& p, std::vector<Word>& out) {
  if (lo == hi) {
    out.push_back(p);
    return;
  }
  if (g[lo].size() == p.size()) return;  // g[lo] == p covers the whole cylinder
  std::size_t depth = p.size();
  auto first = g.begin() + static_cast<std::ptrdiff_t>(lo);
  auto last = g.begin() + static_cast<std::ptrdiff_t>(hi);
  std::size_t mid = static_cast<std::size_t>(
      std::partition_point(first, last, [depth](const Word& w) { return w[depth] == 0; }) - g.begin());
  p.push_back(0);
  complement_range(g, lo, mid, p, out);
  p.pop_back();
  p.push_back(1);
  complement_range(g, mid, hi, p, out);
  p.pop_back();
}

// Exact sum of root * 2^-|g| over the given words, via a common denominator.
Rational uniform_sum(const std::vector<Word>& gens, std::size_t lo, std::size_t hi, const Rational& root) {
  if (lo >= hi) return Rational(0);
  std::size_t maxlen = 0;
  for (std::size_t i = lo; i < hi; ++i) maxlen = std::max(maxlen, gens[i].size());
  mpz_class num(0), term;
  for (std::size_t i = lo; i < hi; ++i) {
    mpz_ui_pow_ui(term.get_mpz_t(), 2, maxlen - gens[i].size());
    num += term;
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, maxlen);
  return Rational(mpq_class(num, den)) * root;
}

}  // namespace

CylinderSet::CylinderSet(std::vector<Word> generators) : gens_(canonicalize(std::move(generators))) {}

CylinderSet CylinderSet::full() { return CylinderSet(Sorted{}, {Word(Alphabet::Binary)}); }

CylinderSet CylinderSet::cylinder(const Word& s) {
  if (s.alphabet() != Alphabet::Binary) throw PreconditionError("cylinder sets live on binary words");
  return CylinderSet(Sorted{}, {s});
}

std::vector<Word> CylinderSet::canonicalize(std::vector<Word> gens) {
  for (const Word& g : gens)
    if (g.alphabet() != Alphabet::Binary) throw PreconditionError("cylinder sets live on binary words");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Word> out;
  out.reserve(gens.size());
  for (Word& g : gens) {
    // Sorted order puts a word right before its extensions, so only the last
    // kept generator can be a prefix of g.
    if (!out.empty() && out.back().is_prefix_of(g)) continue;
    out.push_back(std::move(g));
    while (out.size() >= 2 && siblings(out[out.size() - 2], out.back())) {
      Word parent = out.back().prefix(out.back().size() - 1);
      out.pop_back();
      out.back() = std::move(parent);
    }
  }
  return out;
}

std::size_t CylinderSet::max_length() const {
  std::size_t m = 0;
  for (const Word& g : gens_) m = std::max(m, g.size());
  return m;
}

CylinderSet CylinderSet::unite(const CylinderSet& o) const {
  std::vector<Word> all;
  all.reserve(gens_.size() + o.gens_.size());
  std::merge(gens_.begin(), gens_.end(), o.gens_.begin(), o.gens_.end(), std::back_inserter(all));
  return CylinderSet(std::move(all));
}

CylinderSet CylinderSet::intersect(const CylinderSet& o) const {
  std::vector<Word> out;
  for (const Word& a : gens_) {
    if (o.prefix_generator(a) != npos) {
      out.push_back(a);
      continue;
    }
    auto [first, last] = o.extensions(a);
    for (std::size_t i = first; i < last; ++i) out.push_back(o.gens_[i]);
  }
  return CylinderSet(std::move(out));
}

CylinderSet CylinderSet::complement() const {
  std::vector<Word> out;
  Word p(Alphabet::Binary);
  complement_range(gens_, 0, gens_.size(), p, out);
  return CylinderSet(Sorted{}, std::move(out));
}

CylinderSet CylinderSet::minus(const CylinderSet& o) const { return intersect(o.complement()); }

std::pair<std::size_t, std::size_t> CylinderSet::extensions(const Word& v) const {
  auto first = std::lower_bound(gens_.begin(), gens_.end(), v);
  auto last = std::partition_point(first, gens_.end(), [&v](const Word& g) { return v.is_prefix_of(g); });
  return {static_cast<std::size_t>(first - gens_.begin()), static_cast<std::size_t>(last - gens_.begin())};
}

std::size_t CylinderSet::prefix_generator(const Word& v) const {
  auto it = std::upper_bound(gens_.begin(), gens_.end(), v);
  if (it == gens_.begin()) return npos;
  --it;
  return it->is_prefix_of(v) ? static_cast<std::size_t>(it - gens_.begin()) : npos;
}

bool CylinderSet::covers(const Word& v) const { return prefix_generator(v) != npos; }

bool CylinderSet::meets(const Word& v) const {
  if (covers(v)) return true;
  auto [first, last] = extensions(v);
  return first < last;
}

CylinderSet CylinderSet::restrict_to(const Word& v) const {
  if (covers(v)) return cylinder(v);
  auto [first, last] = extensions(v);
  return CylinderSet(Sorted{}, std::vector<Word>(gens_.begin() + static_cast<std::ptrdiff_t>(first),
                                                 gens_.begin() + static_cast<std::ptrdiff_t>(last)));
}

CylinderSet CylinderSet::localize(const Word& v) const {
  if (covers(v)) return full();
  auto [first, last] = extensions(v);
  std::vector<Word> out;
  out.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) out.push_back(gens_[i].suffix(v.size()));
  return CylinderSet(Sorted{}, std::move(out));
}

Rational CylinderSet::measure(const TreeMeasure& w) const {
  if (w.uniform()) return uniform_sum(gens_, 0, gens_.size(), w.root());
  Rational sum(0);
  for (const Word& g : gens_) sum += w.weight(g);
  return sum;
}

Rational CylinderSet::measure_in(const Word& v, const TreeMeasure& w) const {
  if (covers(v)) return w.weight(v);
  auto [first, last] = extensions(v);
  if (w.uniform()) return uniform_sum(gens_, first, last, w.root());
  Rational sum(0);
  for (std::size_t i = first; i < last; ++i) sum += w.weight(gens_[i]);
  return sum;
}

std::string CylinderSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].empty() ? std::string("<root>") : gens_[i].str();
  }
  return out + "}";
}

MeasuredSet::MeasuredSet(CylinderSet set, const TreeMeasure& w) : set_(std::move(set)), w_(w) {
  const auto& g = set_.generators();
  prefix_.reserve(g.size() + 1);
  prefix_.emplace_back(0);
  if (w_.uniform() && !g.empty()) {
    // Accumulate on a common dyadic denominator to keep the sums cheap.
    std::size_t maxlen = set_.max_length();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, maxlen);
    mpz_class acc(0), term;
    for (const Word& x : g) {
      mpz_ui_pow_ui(term.get_mpz_t(), 2, maxlen - x.size());
      acc += term;
      prefix_.push_back(Rational(mpq_class(acc, den)) * w_.root());
    }
    return;
  }
  for (const Word& x : g) prefix_.push_back(prefix_.back() + w_.weight(x));
}

Rational MeasuredSet::measure_in(const Word& v) const {
  if (set_.covers(v)) return w_.weight(v);
  auto [first, last] = set_.extensions(v);
  return prefix_[last] - prefix_[first];
}

}  // namespace dlab
