#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "densitylab/cantor/approx.hpp"
#include "densitylab/cantor/cylinder.hpp"
#include "densitylab/core/bounds.hpp"

namespace dlab {

// w(A in N_{z|n}) / w(z|n) for n = 0..|z|.
std::vector<Rational> density_profile(const CylinderSet& a, const Word& z, const TreeMeasure& w);

struct DensityBounds {
  MeasureBounds liminf;
  MeasureBounds limsup;
  // Per-level ratio enclosures over the window, starting at level `first`.
  std::size_t first = 0;
  std::vector<MeasureBounds> ratios;
  bool inconclusive = false;
};

// Enclosures for the lower and upper density along z, read off the window
// of levels n in [ceil(depth/2), min(depth, |z|)] of the depth-`depth` stage.
DensityBounds density_bounds(const ApproxSet& a, const Word& z, std::size_t depth);

enum class NodeFlag { Positive, Zero, Unknown };

std::string to_string(NodeFlag f);

struct DensityTree {
  std::size_t depth = 0;
  std::map<Word, NodeFlag> flags;

  NodeFlag at(const Word& t) const;
  // Words flagged positive.
  std::vector<Word> positive() const;
};

// Flags every word of length <= depth: positive if w(A in N_t) > 0 is
// certified, zero if w(A in N_t) = 0 is certified. Positive flags propagate
// to prefixes and zero flags to extensions.
DensityTree density_tree(const ApproxSet& a, std::size_t depth);

// The clopen approximation of the body of the tree: the union of N_t over
// positive nodes t of maximal length.
CylinderSet density_tree_body(const DensityTree& t);

struct MuOperators {
  CylinderSet interior;
  CylinderSet closure_complement;
  CylinderSet frontier;
  // Enclosure of w(A in frontier).
  MeasureBounds frontier_mass;
};

// Splits 2^omega at resolution `depth` into cylinders certified almost
// inside A, cylinders certified almost disjoint from A, and the rest.
MuOperators mu_operators(const ApproxSet& a, std::size_t depth);

enum class Verdict { Yes, Unknown };

std::string to_string(Verdict v);

struct ThicknessCertificate {
  Verdict thick = Verdict::Unknown;
  Verdict cothick = Verdict::Unknown;
  std::vector<Word> thick_failures;
  std::vector<Word> cothick_failures;
  std::size_t checked = 0;
  std::size_t stage = 0;
};

// Checks every cylinder V inside U given by a generator g of U or one of its
// extensions of length <= max(depth, |g|): thick needs w(A in V) > 0 and
// co-thick needs w(V \ A) > 0, both certified against stage `stage`
// (defaults to depth). Never answers yes without a certificate.
ThicknessCertificate thickness_certificate(const ApproxSet& a, const CylinderSet& u, std::size_t depth,
                                           std::size_t stage = 0);

// Dyadic alternating annuli around 0^omega: the union over k of
// N_{0^{a(2k)}} \ N_{0^{a(2k+1)}} for a strictly increasing level sequence a.
ApproxSet alternating_annuli(std::function<std::size_t(std::size_t)> level);

}  // namespace dlab
