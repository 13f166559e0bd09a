#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "densitylab/core/rational.hpp"
#include "densitylab/core/tree.hpp"
#include "densitylab/core/word.hpp"

namespace dlab {

// Stages of a measure-preserving embedding of 2^omega into the body of a
// finitely branching tree T. Stage k maps binary words of length L[k] to
// nodes of T of length M[k].
struct StagePlan {
  std::vector<std::size_t> L;
  std::vector<std::size_t> M;
  std::vector<Rational> delta;
  std::vector<std::map<Word, Word>> phi;
  // blocks[k] holds, for the transition k -> k+1, the set C_{s^i} of level
  // M[k+1] nodes reserved for each s^i with |s| = L[k].
  std::vector<std::map<Word, std::vector<Word>>> blocks;

  std::size_t stages() const { return L.size(); }
  // A_k(t) for every t in the range of stage k.
  std::map<Word, std::vector<Word>> fibers(std::size_t k) const;
};

// Stage 0: phi(empty) = empty, L0 = M0 = 0. delta0 defaults to
// 2 (w(empty) - u(empty)) and must satisfy w(empty) < u(empty) + delta0.
// Rejects u(empty) >= w(empty).
StagePlan embed_init(const TreeMeasure& u, const TreeMeasure& w, std::optional<Rational> delta0 = std::nullopt);

// Extends the plan from its last stage k to k + 1. The target measure w must
// carry a non-singularity modulus; if the modulus level still has a node of
// weight >= R the step fails with a CertificationError. Target levels wider
// than max_nodes and source levels deeper than max_source_level are refused
// the same way.
void embed_stage(const TreeMeasure& u, const PrunedTree& t, const TreeMeasure& w, StagePlan& plan,
                 std::size_t max_nodes = std::size_t{1} << 22, std::size_t max_source_level = 22);

struct InvariantCheck {
  bool ok = true;
  Word at;  // first failing t
};

// sum over A_k(t) of u < w(t) < delta_k + sum over A_k(t) of u, for every t.
InvariantCheck check_invariant(const StagePlan& plan, const TreeMeasure& u, const TreeMeasure& w, std::size_t k);

// phi at stage k+1 extends phi at stage k along every stored word.
bool check_monotone(const StagePlan& plan);

struct Sandwich {
  Rational nu;     // u(s)
  Rational mass;   // sum of w(p) over X(h, s)
  Rational upper;  // nu + 2^(L_h + 1) delta_{h+1}
  bool holds = false;
};

// Measure check at s with |s| = L[k] for some k <= h, against the blocks of
// transition h (so stage h + 1 must exist).
Sandwich embed_verify(const StagePlan& plan, const TreeMeasure& u, const TreeMeasure& w, const Word& s,
                      std::size_t h);

struct RandomTree {
  PrunedTree tree;
  TreeMeasure w;
};

// A finitely branching normal tree on omega. The arity, 2 or 4, is drawn per
// level by hashing (seed, level) and children split their parent's weight
// evenly, so a whole level shares one weight and levels stay as narrow as
// the weights allow. w(empty) is drawn from {3/2, 7/4, 2, 3}.
RandomTree random_target_tree(std::uint64_t seed);

}  // namespace dlab
