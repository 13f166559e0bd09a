#include "densitylab/embedding/embed.hpp"

#include <algorithm>
#include <array>

#include "densitylab/core/errors.hpp"
#include "densitylab/embedding/allocate.hpp"

namespace dlab {

std::map<Word, std::vector<Word>> StagePlan::fibers(std::size_t k) const {
  std::map<Word, std::vector<Word>> out;
  for (const auto& [s, t] : phi.at(k)) out[t].push_back(s);
  return out;
}

StagePlan embed_init(const TreeMeasure& u, const TreeMeasure& w, std::optional<Rational> delta0) {
  if (u.alphabet() != Alphabet::Binary) throw PreconditionError("the source measure lives on binary words");
  Word root_u(Alphabet::Binary), root_w(w.alphabet());
  Rational u0 = u.weight(root_u), w0 = w.weight(root_w);
  if (!(u0 < w0)) throw PreconditionError("embedding needs u(empty) < w(empty); got " + u0.str() + " >= " + w0.str());
  Rational d0 = delta0 ? *delta0 : Rational(2) * (w0 - u0);
  if (!(w0 < u0 + d0)) throw PreconditionError("delta0 must satisfy w(empty) < u(empty) + delta0");
  StagePlan plan;
  plan.L.push_back(0);
  plan.M.push_back(0);
  plan.delta.push_back(d0);
  plan.phi.push_back({{root_u, root_w}});
  return plan;
}

namespace {

// Nodes of length `level` below each t, in lexicographic order.
std::map<Word, std::vector<Word>> descend(const PrunedTree& tree, const std::map<Word, std::vector<Word>>& from,
                                          std::size_t max_nodes) {
  std::map<Word, std::vector<Word>> out;
  std::size_t total = 0;
  for (const auto& [t, nodes] : from) {
    std::vector<Word> next;
    for (const Word& p : nodes) {
      std::optional<int> ar = tree.arity(p);
      if (!ar) throw PreconditionError("embedding needs a finitely branching tree");
      if (*ar <= 0) throw PreconditionError("embedding needs a pruned tree; " + p.str() + " is a leaf");
      for (int i = 0; i < *ar; ++i) next.push_back(p.child(symbol_of(tree.alphabet(), i)));
    }
    total += next.size();
    if (total > max_nodes) throw CertificationError("modulus exhaustion: level exceeds the node budget");
    out.emplace(t, std::move(next));
  }
  return out;
}

}  // namespace

void embed_stage(const TreeMeasure& u, const PrunedTree& tree, const TreeMeasure& w, StagePlan& plan,
                 std::size_t max_nodes, std::size_t max_source_level) {
  if (plan.stages() == 0) throw PreconditionError("embed_stage needs an initialized plan");
  if (!w.has_modulus() || !u.has_modulus()) throw PreconditionError("embedding needs non-singularity moduli");
  std::size_t k = plan.stages() - 1;
  InvariantCheck inv = check_invariant(plan, u, w, k);
  if (!inv.ok) throw PreconditionError("stage invariant fails at " + inv.at.str());

  std::size_t Lk = plan.L[k], Mk = plan.M[k];
  Rational delta_next = Rational::pow2(-2 * static_cast<long>(Lk));
  std::map<Word, std::vector<Word>> fib = plan.fibers(k);

  // R = min(delta_{k+1}, R_t) with R_t = (w(t) - sum u) / (2 |A_k(t)| - 1).
  Rational R = delta_next;
  for (const auto& [t, ss] : fib) {
    Rational a(0);
    for (const Word& s : ss) a += u.weight(s);
    R = min(R, (w.weight(t) - a) / Rational(2 * static_cast<long>(ss.size()) - 1));
  }

  // M_{k+1}: the first level below M_k where every D_t node weighs < R.
  std::size_t cap = std::max(Mk + 1, w.modulus(R));
  std::map<Word, std::vector<Word>> D;
  for (const auto& [t, ss] : fib) D.emplace(t, std::vector<Word>{t});
  std::size_t Mnext = Mk;
  for (;;) {
    D = descend(tree, D, max_nodes);
    ++Mnext;
    bool small = true;
    for (const auto& [t, nodes] : D) {
      for (const Word& p : nodes)
        if (!(w.weight(p) < R)) {
          small = false;
          break;
        }
      if (!small) break;
    }
    if (small) break;
    if (Mnext >= cap) throw CertificationError("modulus exhaustion: level " + std::to_string(Mnext) +
                                               " still has a node of weight >= " + R.str());
  }

  // Barrels: split D_t among the s^i, then keep a minimal prefix C_{s^i}.
  std::map<Word, std::vector<Word>> blocks;
  Rational r(-1);
  for (const auto& [t, ss] : fib) {
    const std::vector<Word>& nodes = D.at(t);
    std::vector<Word> items;
    std::vector<Rational> A, B;
    for (const Word& s : ss)
      for (int i = 0; i < 2; ++i) {
        items.push_back(s.child(i));
        A.push_back(u.weight(items.back()));
      }
    for (const Word& p : nodes) B.push_back(w.weight(p));
    auto J = allocate_barrels(A, B);
    for (std::size_t q = 0; q < items.size(); ++q) {
      // Heaviest first: every prefix that first exceeds A[q] is minimal under
      // inclusion, and this choice keeps the slack r, hence L_{k+1}, small.
      std::vector<std::size_t> order;
      for (std::size_t j = J[q].first; j < J[q].second; ++j) order.push_back(j);
      std::stable_sort(order.begin(), order.end(), [&B](std::size_t x, std::size_t y) { return B[x] > B[y]; });
      std::vector<std::size_t> chosen;
      Rational sum(0);
      for (std::size_t j : order) {
        if (sum > A[q]) break;
        chosen.push_back(j);
        sum += B[j];
      }
      std::sort(chosen.begin(), chosen.end());
      std::vector<Word> C;
      for (std::size_t j : chosen) C.push_back(nodes[j]);
      Rational rq = (sum - A[q]) / Rational(static_cast<long>(C.size()));
      r = r.sign() < 0 ? rq : min(r, rq);
      blocks.emplace(items[q], std::move(C));
    }
  }

  // allocate_amphorae succeeds once every u(s') < r; any
  // shallower level where the greedy already fits keeps the same invariant,
  // so take the least one.
  std::size_t ceiling = std::max(Lk + 1, u.modulus(r));
  std::size_t Lnext = Lk + 1;
  std::map<Word, Word> phi;
  for (;; ++Lnext) {
    phi.clear();
    bool fits = true;
    std::vector<Word> tails = binary_level(Lnext - Lk - 1);
    for (const auto& [si, C] : blocks) {
      std::vector<Rational> b, a;
      std::vector<Word> E;
      for (const Word& p : C) b.push_back(w.weight(p));
      for (const Word& tail : tails) {
        E.push_back(si.concat(tail));
        a.push_back(u.weight(E.back()));
      }
      auto I = Lnext < ceiling ? greedy_amphorae(b, a) : std::optional(allocate_amphorae(b, a));
      if (!I) {
        fits = false;
        break;
      }
      for (std::size_t c = 0; c < C.size(); ++c)
        for (std::size_t idx : (*I)[c]) phi.emplace(E[idx], C[c]);
    }
    if (fits) break;
    if (Lnext >= max_source_level)
      throw CertificationError("no source level up to " + std::to_string(max_source_level) +
                               " admits the allocation; the size bound needs level " + std::to_string(ceiling) +
                               " for slack r = " + r.str());
  }

  plan.L.push_back(Lnext);
  plan.M.push_back(Mnext);
  plan.delta.push_back(delta_next);
  plan.phi.push_back(std::move(phi));
  plan.blocks.push_back(std::move(blocks));
}

InvariantCheck check_invariant(const StagePlan& plan, const TreeMeasure& u, const TreeMeasure& w, std::size_t k) {
  InvariantCheck out;
  for (const auto& [t, ss] : plan.fibers(k)) {
    Rational a(0);
    for (const Word& s : ss) a += u.weight(s);
    Rational wt = w.weight(t);
    if (!(a < wt && wt < plan.delta[k] + a)) {
      out.ok = false;
      out.at = t;
      return out;
    }
  }
  return out;
}

bool check_monotone(const StagePlan& plan) {
  for (std::size_t k = 0; k + 1 < plan.stages(); ++k) {
    for (const auto& [s, t] : plan.phi[k + 1]) {
      auto it = plan.phi[k].find(s.prefix(plan.L[k]));
      if (it == plan.phi[k].end() || !it->second.is_prefix_of(t)) return false;
    }
  }
  return true;
}

Sandwich embed_verify(const StagePlan& plan, const TreeMeasure& u, const TreeMeasure& w, const Word& s,
                      std::size_t h) {
  if (h >= plan.blocks.size()) throw PreconditionError("embed_verify needs transition " + std::to_string(h) + " built");
  bool aligned = false;
  for (std::size_t k = 0; k <= h; ++k)
    if (plan.L[k] == s.size()) aligned = true;
  if (!aligned) throw PreconditionError("embed_verify needs |s| = L_k for some k <= h");
  Sandwich out;
  out.nu = u.weight(s);
  out.mass = Rational(0);
  for (const auto& [si, C] : plan.blocks[h]) {
    if (!s.is_prefix_of(si)) continue;
    for (const Word& p : C) out.mass += w.weight(p);
  }
  out.upper = out.nu + Rational::pow2(static_cast<long>(plan.L[h]) + 1) * plan.delta[h + 1];
  out.holds = out.nu < out.mass && out.mass < out.upper;
  return out;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Arity of every node at a given level, 2 or 4. Dyadic shares keep every
// weight on a lattice, which bounds the slack of minimal blocks from below.
int level_arity(std::uint64_t seed, std::size_t level) {
  return splitmix(splitmix(seed) ^ (level + 1)) % 2 ? 4 : 2;
}

}  // namespace

RandomTree random_target_tree(std::uint64_t seed) {
  static const std::array<Rational, 4> roots = {Rational(3, 2), Rational(7, 4), Rational(2), Rational(3)};
  Rational root = roots[splitmix(seed ^ 0x5eedULL) % roots.size()];
  PrunedTree tree(Alphabet::Natural,
                  [seed](const Word& s) -> std::optional<int> { return level_arity(seed, s.size()); });
  TreeMeasure w(
      Alphabet::Natural,
      [seed, root](const Word& s) {
        Rational x = root;
        for (std::size_t i = 0; i < s.size(); ++i) {
          int ar = level_arity(seed, i);
          if (s[i] < 0 || s[i] >= ar) throw PreconditionError("word " + s.str() + " leaves the random tree");
          x /= Rational(ar);
        }
        return x;
      },
      "random-tree");
  // Every share is at most 1/2, so level n weighs at most root 2^-n.
  w.with_modulus([root](const Rational& rho) {
    std::size_t n = 0;
    while (!(root * Rational::pow2(-static_cast<long>(n)) < rho)) ++n;
    return n;
  });
  return {std::move(tree), std::move(w)};
}

}  // namespace dlab
