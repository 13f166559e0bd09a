#include "densitylab/cantor/approx.hpp"

#include "densitylab/core/errors.hpp"

namespace dlab {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Increasing: return "increasing";
    case Mode::Decreasing: return "decreasing";
    case Mode::General: return "general";
  }
  return "?";
}

LocalError TailView::local_error(const Word&) const {
  LocalError e;
  if (mode_ != Mode::Increasing) e.excess = tail_;
  if (mode_ != Mode::Decreasing) e.deficit = tail_;
  return e;
}

Snapshot::Snapshot(std::size_t depth, std::shared_ptr<const StageView> view, const TreeMeasure& w)
    : depth_(depth), view_(std::move(view)), w_(w), measured_(view_->set(), w) {}

MeasureBounds Snapshot::enclosure(const Word& v) const {
  Rational mass = measured_.measure_in(v);
  Rational wv = w_.weight(v);
  LocalError e = view_->local_error(v);
  Rational lo = mass - min(e.excess, mass);
  Rational hi = mass + min(e.deficit, wv - mass);
  return MeasureBounds(std::move(lo), std::move(hi));
}

Rational Snapshot::raw_width(const Word& v) const {
  LocalError e = view_->local_error(v);
  return e.excess + e.deficit;
}

namespace {

class ClopenModel : public ApproxModel {
 public:
  ClopenModel(CylinderSet c, TreeMeasure w)
      : view_(std::make_shared<TailView>(std::move(c), Rational(0), Mode::Increasing)), w_(std::move(w)) {}
  std::shared_ptr<const StageView> view(std::size_t) const override { return view_; }
  Rational tail(std::size_t) const override { return Rational(0); }
  Mode mode() const override { return Mode::Increasing; }
  const TreeMeasure& measure() const override { return w_; }
  bool certified_disjoint(const Word& v) const override { return !view_->set().meets(v); }

 private:
  std::shared_ptr<const TailView> view_;
  TreeMeasure w_;
};

class OracleModel : public ApproxModel {
 public:
  OracleModel(std::function<CylinderSet(std::size_t)> stage, std::function<Rational(std::size_t)> tail, Mode mode,
              TreeMeasure w)
      : stage_(std::move(stage)), tail_(std::move(tail)), mode_(mode), w_(std::move(w)) {}
  std::shared_ptr<const StageView> view(std::size_t d) const override {
    return std::make_shared<TailView>(stage_(d), tail_(d), mode_);
  }
  Rational tail(std::size_t d) const override { return tail_(d); }
  Mode mode() const override { return mode_; }
  const TreeMeasure& measure() const override { return w_; }

 private:
  std::function<CylinderSet(std::size_t)> stage_;
  std::function<Rational(std::size_t)> tail_;
  Mode mode_;
  TreeMeasure w_;
};

class UnionView : public StageView {
 public:
  explicit UnionView(std::vector<std::shared_ptr<const StageView>> parts) : parts_(std::move(parts)) {
    std::vector<Word> all;
    for (const auto& p : parts_)
      for (const Word& g : p->set().generators()) all.push_back(g);
    set_ = CylinderSet(std::move(all));
  }
  const CylinderSet& set() const override { return set_; }
  LocalError local_error(const Word& v) const override {
    LocalError sum;
    for (const auto& p : parts_) {
      LocalError e = p->local_error(v);
      sum.excess += e.excess;
      sum.deficit += e.deficit;
    }
    return sum;
  }

 private:
  std::vector<std::shared_ptr<const StageView>> parts_;
  CylinderSet set_;
};

class UnionModel : public ApproxModel {
 public:
  explicit UnionModel(std::vector<ApproxSet> parts) : parts_(std::move(parts)), w_(parts_.front().measure()) {
    mode_ = parts_.front().mode();
    for (const auto& p : parts_)
      if (p.mode() != mode_) mode_ = Mode::General;
  }
  std::shared_ptr<const StageView> view(std::size_t d) const override {
    std::vector<std::shared_ptr<const StageView>> views;
    views.reserve(parts_.size());
    for (const auto& p : parts_) views.push_back(p.model().view(d));
    return std::make_shared<UnionView>(std::move(views));
  }
  Rational tail(std::size_t d) const override {
    Rational sum(0);
    for (const auto& p : parts_) sum += p.tail(d);
    return sum;
  }
  Mode mode() const override { return mode_; }
  const TreeMeasure& measure() const override { return w_; }
  bool certified_disjoint(const Word& v) const override {
    for (const auto& p : parts_)
      if (!p.certified_disjoint(v)) return false;
    return true;
  }

 private:
  std::vector<ApproxSet> parts_;
  TreeMeasure w_;
  Mode mode_;
};

}  // namespace

ApproxSet::ApproxSet(std::shared_ptr<const ApproxModel> model) : model_(std::move(model)) {
  if (!model_) throw PreconditionError("approximation without a model");
}

ApproxSet ApproxSet::clopen(CylinderSet c, TreeMeasure w) {
  return ApproxSet(std::make_shared<ClopenModel>(std::move(c), std::move(w)));
}

ApproxSet ApproxSet::from_oracles(std::function<CylinderSet(std::size_t)> stage,
                                  std::function<Rational(std::size_t)> tail, Mode mode, TreeMeasure w) {
  return ApproxSet(std::make_shared<OracleModel>(std::move(stage), std::move(tail), mode, std::move(w)));
}

ApproxSet ApproxSet::unite(std::vector<ApproxSet> parts) {
  if (parts.empty()) return clopen(CylinderSet::empty());
  return ApproxSet(std::make_shared<UnionModel>(std::move(parts)));
}

MeasureBounds ApproxSet::measure_bounds(std::size_t d) const { return snapshot(d).enclosure(Word()); }

}  // namespace dlab
