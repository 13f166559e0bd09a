#include "densitylab/cantor/thin.hpp"

#include <algorithm>

#include "densitylab/core/errors.hpp"

namespace dlab {

namespace {

constexpr std::size_t kMaxRemovalZeros = 4096;

class ThinView : public StageView {
 public:
  ThinView(CylinderSet set, std::shared_ptr<const ThinCompact> owner, std::size_t d)
      : set_(std::move(set)), owner_(std::move(owner)), d_(d) {}
  const CylinderSet& set() const override { return set_; }
  LocalError local_error(const Word& v) const override { return {owner_->excess(v, d_), Rational(0)}; }

 private:
  CylinderSet set_;
  std::shared_ptr<const ThinCompact> owner_;
  std::size_t d_;
};

bool zeros_between(const Word& v, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to && i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

}  // namespace

ThinCompact::ThinCompact(Word home, Rational eps, TreeMeasure w)
    : home_(std::move(home)), eps_(std::move(eps)), w_(std::move(w)) {
  if (w_.alphabet() != Alphabet::Binary) throw PreconditionError("thin compacts live in 2^omega");
  Rational wt = w_.weight(home_);
  if (eps_.sign() <= 0 || eps_ >= wt)
    throw PreconditionError("compact_thin needs 0 < eps < w(t); got eps = " + eps_.str() + ", w(t) = " + wt.str());
}

Rational ThinCompact::removal_bound(std::size_t len) const {
  long e = 2 * static_cast<long>(len) - static_cast<long>(home_.size()) + 2;
  return eps_ * Rational::pow2(-e);
}

std::size_t ThinCompact::removal_zeros(const Word& x) const {
  Rational bound = removal_bound(x.size());
  if (w_.uniform()) {
    long f = (bound / w_.root()).floor_log2();
    long m = -f - static_cast<long>(x.size()) - 1;
    return static_cast<std::size_t>(m < 0 ? 0 : m);
  }
  Word c = x.child(1);
  for (std::size_t m = 0; m <= kMaxRemovalZeros; ++m) {
    if (w_.weight(c) <= bound) return m;
    c.push_back(0);
  }
  throw CertificationError("removal cylinder search exceeded its cap; is the measure non-singular?");
}

Word ThinCompact::removal(const Word& x) const {
  if (!home_.is_prefix_of(x)) throw PreconditionError("removal requested outside the home cylinder");
  Word c = x.child(1);
  std::size_t m = removal_zeros(x);
  for (std::size_t i = 0; i < m; ++i) c.push_back(0);
  return c;
}

bool ThinCompact::voided(const Word& x) const {
  if (!home_.is_prefix_of(x)) return false;
  for (std::size_t p = home_.size(); p < x.size(); ++p) {
    if (x[p] != 1) continue;
    std::size_t m = removal_zeros(x.prefix(p));
    if (x.size() >= p + 1 + m && zeros_between(x, p + 1, p + 1 + m)) return true;
  }
  return false;
}

namespace {

void collect_removals(const ThinCompact& k, Word& x, const std::vector<Word>& active, std::size_t d,
                      std::vector<std::pair<Word, Word>>& out) {
  for (const Word& c : active)
    if (c.size() == x.size()) return;  // x == c: inside an earlier removal
  Word cx = k.removal(x);
  out.emplace_back(x, cx);
  if (x.size() >= d) return;
  std::size_t n = x.size();
  for (int b = 0; b < 2; ++b) {
    std::vector<Word> next;
    for (const Word& c : active)
      if (c[n] == b) next.push_back(c);
    if (cx[n] == b) next.push_back(cx);
    x.push_back(b);
    collect_removals(k, x, next, d, out);
    x.pop_back();
  }
}

}  // namespace

std::vector<Word> ThinCompact::removals(std::size_t d) const {
  std::vector<std::pair<Word, Word>> found;
  if (home_.size() <= d) {
    Word x = home_;
    collect_removals(*this, x, {}, d, found);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return length_lex_less(a.first, b.first); });
  std::vector<Word> out;
  out.reserve(found.size());
  for (auto& [x, c] : found) out.push_back(std::move(c));
  return out;
}

std::shared_ptr<const StageView> ThinCompact::view(std::size_t d) const {
  CylinderSet home = CylinderSet::cylinder(home_);
  std::vector<Word> rem = removals(d);
  CylinderSet stage = rem.empty() ? home : home.minus(CylinderSet(std::move(rem)));
  return std::make_shared<ThinView>(std::move(stage), shared_from_this(), d);
}

Rational ThinCompact::tail(std::size_t d) const { return eps_ * Rational::pow2(-static_cast<long>(d)); }

bool ThinCompact::certified_disjoint(const Word& v) const { return !v.comparable(home_) || voided(v); }

Rational ThinCompact::excess(const Word& v, std::size_t d) const {
  if (!v.comparable(home_)) return Rational(0);
  std::size_t t = home_.size();
  std::size_t mx = std::max(v.size(), t);
  std::size_t l0 = std::max({d + 1, t, v.size()});
  // Removals made at levels >= l0 below N_v.
  Rational e = eps_ * Rational::pow2(static_cast<long>(t) - static_cast<long>(mx) - static_cast<long>(l0) - 1);
  // Removals from proper prefixes of v beyond depth d that reach into N_v.
  for (std::size_t p = std::max(t, d + 1); p < v.size(); ++p) {
    if (v[p] != 1) continue;
    std::size_t m = removal_zeros(v.prefix(p));
    if (!zeros_between(v, p + 1, p + 1 + m)) continue;
    if (v.size() >= p + 1 + m) return w_.weight(v);
    e += removal_bound(p);
  }
  return e;
}

ApproxSet compact_thin(const Word& t, const Rational& eps, const TreeMeasure& w) {
  return ApproxSet(std::make_shared<ThinCompact>(t, eps, w));
}

ThickCothick thick_cothick_sigma(const TreeMeasure& w, std::size_t stages) {
  if (stages < 1) throw PreconditionError("thick_cothick_sigma needs stages >= 1");
  std::vector<SigmaPiece> pieces;
  std::vector<ApproxSet> parts;
  Rational smallest;
  bool first = true;
  std::vector<Word> basis = binary_words_upto(stages);
  for (std::size_t n = 0; n < basis.size(); ++n) {
    const Word& u = basis[n];
    auto disjoint = [&pieces](const Word& v) {
      for (const auto& p : pieces)
        if (!p.compact->certified_disjoint(v)) return false;
      return true;
    };
    Word tilde;
    bool found = false;
    for (std::size_t extra = 0; extra <= 64 && !found; ++extra) {
      for (const Word& s : binary_level(extra)) {
        Word cand = u.concat(s);
        if (disjoint(cand)) {
          tilde = std::move(cand);
          found = true;
          break;
        }
      }
      if (extra >= 16 && !found) break;
    }
    if (!found) throw CertificationError("no extension of " + u.str() + " avoids the earlier pieces");
    Rational wt = w.weight(tilde);
    smallest = first ? wt : min(smallest, wt);
    first = false;
    Rational target = Rational::pow2(-static_cast<long>(n) - 2) * smallest;
    Word home = tilde;
    while (w.weight(home) > target) home.push_back(0);
    Rational eps = w.weight(home) / Rational(2);
    auto compact = std::make_shared<const ThinCompact>(home, eps, w);
    parts.emplace_back(compact);
    pieces.push_back({u, tilde, home, eps, compact});
  }
  return {ApproxSet::unite(std::move(parts)), std::move(pieces)};
}

}  // namespace dlab
