#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "densitylab/cantor/cylinder.hpp"
#include "densitylab/core/bounds.hpp"
#include "densitylab/core/tree.hpp"

namespace dlab {

enum class Mode { Increasing, Decreasing, General };

std::string to_string(Mode m);

// Localized error of a stage against the represented set A inside N_v:
// excess bounds w((C_d \ A) in N_v), deficit bounds w((A \ C_d) in N_v).
struct LocalError {
  Rational excess{0};
  Rational deficit{0};
};

// One materialized stage of an approximation.
class StageView {
 public:
  virtual ~StageView() = default;
  virtual const CylinderSet& set() const = 0;
  virtual LocalError local_error(const Word& v) const = 0;
};

// A depth-indexed family of clopen sets C_d with w(A symmetric-difference
// C_d) <= tail(d). Implementations may give sharper localized errors.
class ApproxModel {
 public:
  virtual ~ApproxModel() = default;
  virtual std::shared_ptr<const StageView> view(std::size_t d) const = 0;
  virtual Rational tail(std::size_t d) const = 0;
  virtual Mode mode() const = 0;
  virtual const TreeMeasure& measure() const = 0;
  // True only if A and N_v are provably disjoint.
  virtual bool certified_disjoint(const Word& /*v*/) const { return false; }
};

// Stage view whose local error is read off the global tail and the mode.
class TailView : public StageView {
 public:
  TailView(CylinderSet set, Rational tail, Mode mode) : set_(std::move(set)), tail_(std::move(tail)), mode_(mode) {}
  const CylinderSet& set() const override { return set_; }
  LocalError local_error(const Word& v) const override;

 private:
  CylinderSet set_;
  Rational tail_;
  Mode mode_;
};

class ApproxSet;

// Enclosures of w(A in N_v) computed against one stage.
class Snapshot {
 public:
  Snapshot(std::size_t depth, std::shared_ptr<const StageView> view, const TreeMeasure& w);

  std::size_t depth() const { return depth_; }
  const CylinderSet& set() const { return view_->set(); }
  Rational stage_mass(const Word& v) const { return measured_.measure_in(v); }
  MeasureBounds enclosure(const Word& v) const;
  // Width of the enclosure before clamping to [0, w(v)].
  Rational raw_width(const Word& v) const;
  const TreeMeasure& measure() const { return w_; }

 private:
  std::size_t depth_;
  std::shared_ptr<const StageView> view_;
  TreeMeasure w_;
  MeasuredSet measured_;
};

class ApproxSet {
 public:
  explicit ApproxSet(std::shared_ptr<const ApproxModel> model);

  // A clopen set, exact at every depth.
  static ApproxSet clopen(CylinderSet c, TreeMeasure w = cantor_measure());
  static ApproxSet from_oracles(std::function<CylinderSet(std::size_t)> stage,
                                std::function<Rational(std::size_t)> tail, Mode mode,
                                TreeMeasure w = cantor_measure());
  // Union of finitely many sets over the same measure.
  static ApproxSet unite(std::vector<ApproxSet> parts);

  CylinderSet stage(std::size_t d) const { return model_->view(d)->set(); }
  Rational tail(std::size_t d) const { return model_->tail(d); }
  Mode mode() const { return model_->mode(); }
  const TreeMeasure& measure() const { return model_->measure(); }
  bool certified_disjoint(const Word& v) const { return model_->certified_disjoint(v); }
  Snapshot snapshot(std::size_t d) const { return {d, model_->view(d), model_->measure()}; }
  MeasureBounds measure_bounds(std::size_t d) const;

  const ApproxModel& model() const { return *model_; }
  const std::shared_ptr<const ApproxModel>& model_ptr() const { return model_; }

 private:
  std::shared_ptr<const ApproxModel> model_;
};

}  // namespace dlab
