#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "densitylab/core/rational.hpp"
#include "densitylab/core/tree.hpp"
#include "densitylab/core/word.hpp"

namespace dlab {

// Clopen subset of 2^omega: the union of N_g over a finite antichain of
// binary words. Stored canonically, lexicographically sorted with sibling
// pairs merged into their parent, so equal sets compare equal.
class CylinderSet {
 public:
  CylinderSet() = default;
  explicit CylinderSet(std::vector<Word> generators);

  static CylinderSet empty() { return {}; }
  static CylinderSet full();
  static CylinderSet cylinder(const Word& s);

  const std::vector<Word>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_empty() const { return gens_.empty(); }
  bool is_full() const { return gens_.size() == 1 && gens_[0].empty(); }
  std::size_t max_length() const;

  CylinderSet unite(const CylinderSet& o) const;
  CylinderSet intersect(const CylinderSet& o) const;
  CylinderSet complement() const;
  CylinderSet minus(const CylinderSet& o) const;

  // N_v is contained in the set.
  bool covers(const Word& v) const;
  // N_v meets the set.
  bool meets(const Word& v) const;
  // Membership of an infinite sequence known through a prefix long enough
  // to decide it (length >= max_length()).
  bool contains_point(const Word& prefix) const { return covers(prefix); }

  // A intersected with N_v.
  CylinderSet restrict_to(const Word& v) const;
  // LOC(A, v) = { t : v^t in A }.
  CylinderSet localize(const Word& v) const;
  // Index range [first, last) of the generators extending v.
  std::pair<std::size_t, std::size_t> extensions(const Word& v) const;
  // Index of the generator that is a prefix of v, or npos.
  std::size_t prefix_generator(const Word& v) const;

  Rational measure(const TreeMeasure& w) const;
  // w(A intersected with N_v).
  Rational measure_in(const Word& v, const TreeMeasure& w) const;

  std::string str() const;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  struct Sorted {};
  CylinderSet(Sorted, std::vector<Word> canonical) : gens_(std::move(canonical)) {}
  static std::vector<Word> canonicalize(std::vector<Word> gens);

  std::vector<Word> gens_;
};

// A cylinder set with prefix sums of generator weights, answering
// w(A intersected with N_v) in logarithmic time.
class MeasuredSet {
 public:
  MeasuredSet(CylinderSet set, const TreeMeasure& w);

  const CylinderSet& set() const { return set_; }
  const Rational& total() const { return prefix_.back(); }
  Rational measure_in(const Word& v) const;

 private:
  CylinderSet set_;
  TreeMeasure w_;
  std::vector<Rational> prefix_;
};

}  // namespace dlab
