#include "densitylab/cantor/density.hpp"

#include <algorithm>

#include "densitylab/core/errors.hpp"

namespace dlab {

std::vector<Rational> density_profile(const CylinderSet& a, const Word& z, const TreeMeasure& w) {
  std::vector<Rational> out;
  out.reserve(z.size() + 1);
  for (std::size_t n = 0; n <= z.size(); ++n) {
    Word v = z.prefix(n);
    out.push_back(a.measure_in(v, w) / w.weight(v));
  }
  return out;
}

DensityBounds density_bounds(const ApproxSet& a, const Word& z, std::size_t depth) {
  Snapshot snap = a.snapshot(depth);
  const TreeMeasure& w = a.measure();
  std::size_t last = std::min(depth, z.size());
  std::size_t first = std::min((depth + 1) / 2, last);
  DensityBounds out;
  out.first = first;
  for (std::size_t n = first; n <= last; ++n) {
    Word v = z.prefix(n);
    Rational wv = w.weight(v);
    Rational inv = Rational(1) / wv;
    if (snap.raw_width(v) * inv > Rational(1)) out.inconclusive = true;
    out.ratios.push_back(snap.enclosure(v).scale(inv).clamp(Rational(0), Rational(1)));
  }
  Rational inf_lo = out.ratios.front().lo(), inf_hi = out.ratios.front().hi();
  Rational sup_lo = inf_lo, sup_hi = inf_hi;
  for (const auto& r : out.ratios) {
    inf_lo = min(inf_lo, r.lo());
    inf_hi = min(inf_hi, r.hi());
    sup_lo = max(sup_lo, r.lo());
    sup_hi = max(sup_hi, r.hi());
  }
  out.liminf = MeasureBounds(inf_lo, inf_hi);
  out.limsup = MeasureBounds(sup_lo, sup_hi);
  return out;
}

std::string to_string(NodeFlag f) {
  switch (f) {
    case NodeFlag::Positive: return "positive";
    case NodeFlag::Zero: return "zero";
    case NodeFlag::Unknown: return "unknown";
  }
  return "?";
}

NodeFlag DensityTree::at(const Word& t) const {
  auto it = flags.find(t);
  if (it == flags.end()) throw PreconditionError("word " + t.str() + " is outside the density tree's depth");
  return it->second;
}

std::vector<Word> DensityTree::positive() const {
  std::vector<Word> out;
  for (const auto& [w, f] : flags)
    if (f == NodeFlag::Positive) out.push_back(w);
  return out;
}

DensityTree density_tree(const ApproxSet& a, std::size_t depth) {
  Snapshot snap = a.snapshot(depth);
  DensityTree out;
  out.depth = depth;
  std::vector<Word> words = binary_words_upto(depth);
  for (const Word& t : words) {
    MeasureBounds e = snap.enclosure(t);
    NodeFlag f = NodeFlag::Unknown;
    if (e.lo().sign() > 0)
      f = NodeFlag::Positive;
    else if (e.hi().is_zero())
      f = NodeFlag::Zero;
    out.flags.emplace(t, f);
  }
  // Words are visited in length-lex order, so parents are final before
  // children and children before parents when walking backwards.
  for (const Word& t : words) {
    if (t.empty()) continue;
    if (out.flags[t.prefix(t.size() - 1)] == NodeFlag::Zero) out.flags[t] = NodeFlag::Zero;
  }
  for (auto it = words.rbegin(); it != words.rend(); ++it) {
    if (it->empty()) continue;
    if (out.flags[*it] == NodeFlag::Positive) out.flags[it->prefix(it->size() - 1)] = NodeFlag::Positive;
  }
  return out;
}

CylinderSet density_tree_body(const DensityTree& t) {
  std::vector<Word> leaves;
  for (const auto& [w, f] : t.flags)
    if (f == NodeFlag::Positive && w.size() == t.depth) leaves.push_back(w);
  return CylinderSet(std::move(leaves));
}

namespace {

void split(const Snapshot& snap, const TreeMeasure& w, Word& v, std::size_t depth, std::vector<Word>& in,
           std::vector<Word>& out, std::vector<Word>& fr, MeasureBounds& fr_mass) {
  MeasureBounds e = snap.enclosure(v);
  if (e.lo() == w.weight(v)) {
    in.push_back(v);
    return;
  }
  if (e.hi().is_zero()) {
    out.push_back(v);
    return;
  }
  if (v.size() >= depth) {
    fr.push_back(v);
    fr_mass = fr_mass + e;
    return;
  }
  for (int b = 0; b < 2; ++b) {
    v.push_back(b);
    split(snap, w, v, depth, in, out, fr, fr_mass);
    v.pop_back();
  }
}

}  // namespace

MuOperators mu_operators(const ApproxSet& a, std::size_t depth) {
  Snapshot snap = a.snapshot(depth);
  std::vector<Word> in, out, fr;
  MeasureBounds fr_mass;
  Word v(Alphabet::Binary);
  split(snap, a.measure(), v, depth, in, out, fr, fr_mass);
  return {CylinderSet(std::move(in)), CylinderSet(std::move(out)), CylinderSet(std::move(fr)), fr_mass};
}

std::string to_string(Verdict v) { return v == Verdict::Yes ? "yes" : "unknown"; }

namespace {

void thickness_walk(const Snapshot& snap, const TreeMeasure& w, Word& v, std::size_t limit,
                    ThicknessCertificate& cert) {
  MeasureBounds e = snap.enclosure(v);
  ++cert.checked;
  if (!(e.lo().sign() > 0)) cert.thick_failures.push_back(v);
  if (!(e.hi() < w.weight(v))) cert.cothick_failures.push_back(v);
  if (v.size() >= limit) return;
  for (int b = 0; b < 2; ++b) {
    v.push_back(b);
    thickness_walk(snap, w, v, limit, cert);
    v.pop_back();
  }
}

}  // namespace

ThicknessCertificate thickness_certificate(const ApproxSet& a, const CylinderSet& u, std::size_t depth,
                                           std::size_t stage) {
  if (u.is_empty()) throw PreconditionError("thickness certificate needs a nonempty open set");
  ThicknessCertificate cert;
  cert.stage = std::max(stage, depth);
  Snapshot snap = a.snapshot(cert.stage);
  for (const Word& g : u.generators()) {
    Word v = g;
    thickness_walk(snap, a.measure(), v, std::max(depth, g.size()), cert);
  }
  cert.thick = cert.thick_failures.empty() ? Verdict::Yes : Verdict::Unknown;
  cert.cothick = cert.cothick_failures.empty() ? Verdict::Yes : Verdict::Unknown;
  return cert;
}

namespace {

class AnnuliView : public StageView {
 public:
  AnnuliView(CylinderSet set, std::size_t open_level) : set_(std::move(set)), open_level_(open_level) {}
  const CylinderSet& set() const override { return set_; }
  LocalError local_error(const Word& v) const override {
    // Everything not yet listed lives inside N_{0^open_level}.
    LocalError e;
    Word z = Word::zeros(open_level_);
    if (v.is_prefix_of(z))
      e.deficit = Rational::pow2(-static_cast<long>(open_level_));
    else if (z.is_prefix_of(v))
      e.deficit = Rational::pow2(-static_cast<long>(v.size()));
    return e;
  }

 private:
  CylinderSet set_;
  std::size_t open_level_;
};

class AnnuliModel : public ApproxModel {
 public:
  explicit AnnuliModel(std::function<std::size_t(std::size_t)> level) : level_(std::move(level)) {}

  std::shared_ptr<const StageView> view(std::size_t d) const override {
    std::size_t cap = 4 * d + 4;
    std::vector<Word> gens;
    std::size_t k = 0;
    std::size_t open_level = cap;
    for (;; ++k) {
      std::size_t start = level_(2 * k);
      if (start > d) {
        open_level = std::min(start, cap);
        break;
      }
      std::size_t end = level_(2 * k + 1);
      if (end <= start) throw PreconditionError("annulus levels must increase strictly");
      std::size_t stop = std::min(end, cap);
      for (std::size_t i = start; i < stop; ++i) gens.push_back(Word::zeros(i).child(1));
      if (end > cap) break;
    }
    return std::make_shared<AnnuliView>(CylinderSet(std::move(gens)), open_level);
  }
  Rational tail(std::size_t d) const override {
    std::size_t cap = 4 * d + 4;
    for (std::size_t k = 0;; ++k) {
      std::size_t start = level_(2 * k);
      if (start > d) return Rational::pow2(-static_cast<long>(std::min(start, cap)));
      if (level_(2 * k + 1) > cap) return Rational::pow2(-static_cast<long>(cap));
    }
  }
  Mode mode() const override { return Mode::Increasing; }
  const TreeMeasure& measure() const override { return w_; }
  bool certified_disjoint(const Word& v) const override {
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0) ++i;
    if (i == v.size()) return false;
    for (std::size_t k = 0;; ++k) {
      std::size_t start = level_(2 * k);
      if (start > i) return true;
      if (i < level_(2 * k + 1)) return false;
    }
  }

 private:
  std::function<std::size_t(std::size_t)> level_;
  TreeMeasure w_ = cantor_measure();
};

}  // namespace

ApproxSet alternating_annuli(std::function<std::size_t(std::size_t)> level) {
  return ApproxSet(std::make_shared<AnnuliModel>(std::move(level)));
}

}  // namespace dlab
