#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "densitylab/cantor/cylinder.hpp"
#include "densitylab/core/bounds.hpp"
#include "densitylab/core/rational.hpp"
#include "densitylab/core/word.hpp"
#include "densitylab/reductions/matrix.hpp"

namespace dlab {

// u_k = 0^(k+6) when up, v_k = 1^(k+6) otherwise (v_0 does not exist).
struct GoodBlock {
  bool up = true;
  std::size_t index = 0;

  std::size_t length() const { return index + 6; }
  std::string str() const { return (up ? "u" : "v") + std::to_string(index); }
  friend bool operator==(const GoodBlock&, const GoodBlock&) = default;
};

// A node of the good tree: u_n leads to nval n+1, v_n to nval n-1, and a
// node of nval n has children u_n and, when n >= 1, v_n.
struct GoodNode {
  std::vector<GoodBlock> sigma;
  Word tilde;
  std::size_t nval = 0;

  std::vector<GoodNode> children() const;
  GoodNode extend(bool up) const;
  std::string str() const;
};

// All good nodes with |sigma| <= depth, shorter first.
std::vector<GoodNode> good_tree(std::size_t depth);

// Re-parses a binary word as a concatenation of good blocks.
std::optional<GoodNode> parse_good(const Word& tilde);

// The band rho(x) = n with 2^-(n+2) <= |x - r| < 2^-(n+1), read off an
// enclosure of x.
struct Rho {
  enum class Kind { Band, Omega, Straddle, Outside };
  Kind kind = Kind::Straddle;
  std::size_t band = 0;
  // Largest m with the whole enclosure inside |x - r| < 2^-(m+1), or -1.
  long at_least = -1;

  bool certifies_at_least(std::size_t m) const;
  std::string str() const;
};

Rho rho_of(const MeasureBounds& x, const Rational& r);

struct SharpPoint {
  MeasureBounds bounds;
  Rho rho;
  // nval of the good node s with t = s^i^k, and k (0 when t itself is good).
  std::size_t nval = 0;
  std::size_t k = 0;
};

// The compact set K built from a dyadic target r: above every good node s of
// nval n it carries s^E_n, where E_n = union over 0 < i <= n+5 of
// 0^i 1 D_n and 1^i 0 D_n, and D_n is the clopen set of measure r_n read off
// the binary digits of r_n.
class SharpK {
 public:
  explicit SharpK(Rational r = Rational(3, 8));

  const Rational& r() const { return r_; }
  Rational r_n(std::size_t n) const;
  CylinderSet D(std::size_t n) const;
  CylinderSet E(std::size_t n) const;
  // r_n (1 - 2^-(n+5)).
  Rational E_measure(std::size_t n) const;

  // Enclosure of mu(K localized at a good node of nval n), unfolding the
  // child recursion `depth` levels.
  MeasureBounds good_bounds(std::size_t n, std::size_t depth) const;

  // Rejects t outside the tree of prefixes of good tildes.
  SharpPoint measure(const Word& t, std::size_t depth) const;

  std::size_t cache_size() const;

 private:
  struct Cache {
    mutable std::shared_mutex mu;
    std::map<std::pair<std::size_t, std::size_t>, MeasureBounds> bounds;
  };

  Rational r_;
  std::shared_ptr<Cache> cache_;
};

struct SharpStep {
  Word t;
  SharpPoint point;
  // rho(t) must be at least this.
  std::size_t required = 0;
  bool ok = false;
};

struct SharpPath {
  GoodNode node;
  std::size_t gamma = 0;
  // Every node strictly between the previous image and this one.
  std::vector<SharpStep> steps;
  SharpPoint point;
  bool certified = false;
};

// phi(a): climbs from phi(a restricted to (n-1)x(n-1)) by u-blocks to nval n,
// then descends by v-blocks to nval gamma(a). Side conditions on the
// intermediate nodes are certified with enclosures of the given depth.
SharpPath sharp_reduction(const SharpK& k, const BitMatrix& a, std::size_t depth = 2);

struct TrajectoryRow {
  std::size_t stage = 0;
  SharpPath path;
};

// phi(z restricted to n x n) for n < n_max.
std::vector<TrajectoryRow> sharp_trajectory(const SharpK& k, const MatrixCode& z, std::size_t n_max,
                                            std::size_t depth = 2);

}  // namespace dlab
