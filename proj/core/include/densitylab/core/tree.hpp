#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "densitylab/core/rational.hpp"
#include "densitylab/core/word.hpp"

namespace dlab {

// Maps a child index 0, 1, ... to the alphabet symbol it denotes.
int symbol_of(Alphabet a, int index);
int index_of(Alphabet a, int symbol);

// A pruned tree given by its branching oracle. The children of s are the
// first arity(s) symbols of the alphabet; nullopt means every natural.
class PrunedTree {
 public:
  using ArityFn = std::function<std::optional<int>(const Word&)>;

  PrunedTree(Alphabet a, ArityFn arity, bool normal = true);

  static PrunedTree full_binary();
  static PrunedTree full_triadic();
  static PrunedTree full_omega();

  Alphabet alphabet() const { return alphabet_; }
  bool normal() const { return normal_; }
  std::optional<int> arity(const Word& s) const { return arity_(s); }
  bool member(const Word& s) const;
  // Children of s; an infinitely branching node yields its first `window`.
  std::vector<Word> children(const Word& s, int window = 8) const;

 private:
  Alphabet alphabet_;
  ArityFn arity_;
  bool normal_;
};

// A tree measure w: positive weights, additive over children. Optional
// oracles cover infinite branching (exact mass of the children with index
// >= K) and non-singularity (a level N(rho) at which every node weighs less
// than rho).
class TreeMeasure {
 public:
  using WeightFn = std::function<Rational(const Word&)>;
  using TailFn = std::function<Rational(const Word&, int)>;
  using ModulusFn = std::function<std::size_t(const Rational&)>;

  TreeMeasure(Alphabet a, WeightFn weight, std::string name = "custom");

  TreeMeasure& with_tail(TailFn tail);
  TreeMeasure& with_modulus(ModulusFn modulus);
  // Declares w(s) = root * 2^-|s| so callers may take a closed-form path.
  TreeMeasure& mark_uniform();

  Alphabet alphabet() const { return alphabet_; }
  const std::string& name() const { return name_; }
  Rational weight(const Word& s) const;
  const Rational& root() const { return root_; }
  bool uniform() const { return uniform_; }

  bool has_tail() const { return static_cast<bool>(tail_); }
  Rational child_tail(const Word& s, int k) const;
  bool has_modulus() const { return static_cast<bool>(modulus_); }
  std::size_t modulus(const Rational& rho) const;

 private:
  Alphabet alphabet_;
  WeightFn weight_;
  TailFn tail_;
  ModulusFn modulus_;
  std::string name_;
  Rational root_;
  bool uniform_ = false;
};

// The fair-coin measure on 2^omega: w(s) = 2^-|s|.
TreeMeasure cantor_measure();
// Product measure with P(1) = p, P(0) = 1 - p for 0 < p < 1.
TreeMeasure bernoulli_measure(const Rational& p);
// The measure on omega^omega with w(s) = prod 2^-(s(i)+1).
TreeMeasure baire_measure();

struct MeasureCheck {
  bool ok = true;
  Word at;
  std::string reason;
};

// Checks positivity and additivity at every node of length < depth, visiting
// nodes in length-lexicographic order. Infinitely branching nodes are summed
// over the first `window` children plus the declared tail.
MeasureCheck tree_measure_check(const TreeMeasure& w, const PrunedTree& t, std::size_t depth, int window = 8);

}  // namespace dlab
