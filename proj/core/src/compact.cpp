#include "densitylab/reductions/compact.hpp"

#include <map>
#include <mutex>

#include "densitylab/core/errors.hpp"

namespace dlab {

std::size_t compact_steps(std::size_t d) {
  if (d >= 62) throw PreconditionError("stage too deep for the compact reduction");
  return std::size_t{1} << (d + 1);
}

namespace {

// Grows the piece list one column at a time; pieces never change once made.
class PieceSource {
 public:
  explicit PieceSource(MatrixCode z) : z_(std::move(z)) {}

  std::vector<CompactPiece> upto(std::size_t steps) {
    std::lock_guard lock(mu_);
    while (done_ < steps) step(done_++);
    std::vector<CompactPiece> out;
    for (const auto& p : pieces_)
      if (p.step < steps) out.push_back(p);
    return out;
  }

 private:
  void step(std::size_t n) {
    std::size_t j = 0;
    while (j <= n && z_.at(j, n) == 0) ++j;
    if (j > n) return;
    Word base = Word::zeros(j).child(1);
    Word& cur = cursor_[j];
    auto& mine = by_row_[j];
    for (;; cur = length_lex_next(cur)) {
      Word cand = base.concat(cur);
      bool clear = true;
      for (std::size_t idx : mine)
        if (!pieces_[idx].compact->certified_disjoint(cand)) {
          clear = false;
          break;
        }
      if (!clear) continue;
      Word home = cand;
      for (std::size_t i = 0; i < n + 2; ++i) home.push_back(0);
      Rational eps = Rational::pow2(-static_cast<long>(home.size()) - 1);
      auto compact = std::make_shared<const ThinCompact>(home, eps);
      mine.push_back(pieces_.size());
      pieces_.push_back({n, j, std::move(cand), std::move(home), std::move(eps), std::move(compact)});
      return;
    }
  }

  MatrixCode z_;
  std::mutex mu_;
  std::size_t done_ = 0;
  std::vector<CompactPiece> pieces_;
  std::map<std::size_t, Word> cursor_;
  std::map<std::size_t, std::vector<std::size_t>> by_row_;
};

class ReductionView : public StageView {
 public:
  ReductionView(std::size_t d, std::size_t steps, std::vector<std::shared_ptr<const StageView>> parts)
      : d_(d), steps_(steps), parts_(std::move(parts)) {
    std::vector<Word> gens{Word::zeros(d)};
    for (const auto& p : parts_)
      for (const Word& g : p->set().generators()) gens.push_back(g);
    set_ = CylinderSet(std::move(gens));
  }
  const CylinderSet& set() const override { return set_; }
  LocalError local_error(const Word& v) const override {
    LocalError e;
    Word z = Word::zeros(d_);
    // The point 0^omega is null, so all of N_{0^d} in N_v is excess.
    if (v.is_prefix_of(z))
      e.excess = Rational::pow2(-static_cast<long>(d_));
    else if (z.is_prefix_of(v))
      e.excess = Rational::pow2(-static_cast<long>(v.size()));
    for (const auto& p : parts_) {
      LocalError pe = p->local_error(v);
      e.excess += pe.excess;
      e.deficit += pe.deficit;
    }
    // Pieces from later columns weigh at most 2^-(m+2) each.
    e.deficit += Rational::pow2(-static_cast<long>(steps_) - 1);
    return e;
  }

 private:
  std::size_t d_;
  std::size_t steps_;
  std::vector<std::shared_ptr<const StageView>> parts_;
  CylinderSet set_;
};

class ReductionModel : public ApproxModel {
 public:
  ReductionModel(MatrixCode z, std::size_t max_steps)
      : source_(std::make_shared<PieceSource>(std::move(z))), max_steps_(max_steps) {}

  std::vector<CompactPiece> pieces(std::size_t d) const { return source_->upto(checked_steps(d)); }

  std::shared_ptr<const StageView> view(std::size_t d) const override {
    std::vector<std::shared_ptr<const StageView>> parts;
    for (const auto& p : pieces(d)) parts.push_back(p.compact->view(d));
    return std::make_shared<ReductionView>(d, checked_steps(d), std::move(parts));
  }
  Rational tail(std::size_t d) const override {
    Rational t = Rational::pow2(-static_cast<long>(d)) + Rational::pow2(-static_cast<long>(checked_steps(d)) - 1);
    for (const auto& p : pieces(d)) t += p.compact->tail(d);
    return t;
  }
  Mode mode() const override { return Mode::General; }
  const TreeMeasure& measure() const override { return w_; }

 private:
  std::size_t checked_steps(std::size_t d) const {
    std::size_t s = compact_steps(d);
    if (s > max_steps_)
      throw PreconditionError("stage " + std::to_string(d) + " needs " + std::to_string(s) +
                              " columns, above the cap of " + std::to_string(max_steps_));
    return s;
  }

  std::shared_ptr<PieceSource> source_;
  std::size_t max_steps_;
  TreeMeasure w_ = cantor_measure();
};

}  // namespace

CylinderSet compact_phi_stage(const CompactReduction& red, std::size_t steps, std::size_t d) {
  if (steps > red.steps) throw PreconditionError("compact_phi_stage asked for more columns than were built");
  std::vector<Word> gens{Word::zeros(d)};
  for (const auto& p : red.pieces)
    if (p.step < steps) {
      auto view = p.compact->view(d);
      for (const Word& g : view->set().generators()) gens.push_back(g);
    }
  return CylinderSet(std::move(gens));
}

CompactReduction compactness_reduction(const MatrixCode& z, std::size_t depth, std::size_t max_steps) {
  auto model = std::make_shared<ReductionModel>(z, max_steps);
  CompactReduction out;
  out.set = ApproxSet(model);
  out.depth = depth;
  out.steps = compact_steps(depth);
  out.pieces = model->pieces(depth);
  for (std::size_t d = 0; d <= depth; ++d) out.stage_measures.push_back(out.set.measure_bounds(d));
  TreeMeasure w = cantor_measure();
  CylinderSet prev = compact_phi_stage(out, 0, depth);
  for (std::size_t n = 0; n < depth; ++n) {
    CylinderSet next = compact_phi_stage(out, n + 1, depth);
    out.increments.push_back(next.minus(prev).measure(w));
    prev = std::move(next);
  }
  out.p3 = p3_membership(z);
  if (out.p3) {
    std::size_t rows = z.size();
    for (const auto& [i, p] : z.periodic()) rows = std::max(rows, i + 1);
    for (std::size_t j = 0; j < rows; ++j) {
      RowStabilization r{j, z.row_bound(j), 0};
      for (const auto& p : out.pieces)
        if (p.row == j) ++r.pieces;
      out.stabilization.push_back(r);
    }
  } else {
    std::size_t j = z.least_infinite_row();
    out.witness_row = j;
    out.certificate = thickness_certificate(out.set, CylinderSet::cylinder(Word::zeros(j).child(1)), depth);
  }
  return out;
}

}  // namespace dlab
