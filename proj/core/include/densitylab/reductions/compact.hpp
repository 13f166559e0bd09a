#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "densitylab/cantor/approx.hpp"
#include "densitylab/cantor/density.hpp"
#include "densitylab/cantor/thin.hpp"
#include "densitylab/reductions/matrix.hpp"

namespace dlab {

// The thin compact added when column n first shows a 1, at least row j.
struct CompactPiece {
  std::size_t step = 0;
  std::size_t row = 0;
  Word basis;  // the chosen extension s of 0^j 1
  Word home;   // s^0^(n+2)
  Rational eps;
  std::shared_ptr<const ThinCompact> compact;
};

struct RowStabilization {
  std::size_t row = 0;
  // Columns >= bound hold no 1 in this row, so f(z) in N_{0^row 1} is fixed
  // from that stage on.
  std::size_t bound = 0;
  std::size_t pieces = 0;
};

struct CompactReduction {
  ApproxSet set = ApproxSet::clopen(CylinderSet::empty());
  std::vector<CompactPiece> pieces;  // steps n < steps(depth)
  std::size_t depth = 0;
  std::size_t steps = 0;
  // Enclosure of the measure of f(z) at stages 0..depth.
  std::vector<MeasureBounds> stage_measures;
  // mu(phi(z|(n+1)) \ phi(z|n)) for n < depth, exact at resolution depth.
  std::vector<Rational> increments;
  bool p3 = false;
  std::vector<RowStabilization> stabilization;
  // When z is not in P3: least row with infinitely many ones, and the
  // thickness certificate in N_{0^row 1}.
  std::optional<std::size_t> witness_row;
  std::optional<ThicknessCertificate> certificate;
};

// Number of columns of z consumed by stage d.
std::size_t compact_steps(std::size_t d);

// f(z) = {0^omega} union the thin compacts of every step, as an
// approximation whose stage d reads 2^(d+1) columns. Rejects stages needing
// more than max_steps columns.
CompactReduction compactness_reduction(const MatrixCode& z, std::size_t depth, std::size_t max_steps = 1 << 14);

// The pieces of phi(z|m) for m <= steps, clopen-approximated at resolution d.
CylinderSet compact_phi_stage(const CompactReduction& red, std::size_t steps, std::size_t d);

}  // namespace dlab
