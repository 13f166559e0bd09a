#include "checks.hpp"

#include <bitset>
#include <random>
#include <sstream>

#include "densitylab/cantor/density.hpp"
#include "densitylab/cantor/thin.hpp"
#include "densitylab/embedding/allocate.hpp"
#include "densitylab/embedding/embed.hpp"
#include "densitylab/realline/examples.hpp"
#include "densitylab/reductions/compact.hpp"
#include "densitylab/reductions/sharp.hpp"
#include "densitylab/spongy/spongy.hpp"

namespace dlab::checks {

namespace {

using Rng = std::mt19937_64;

Result fail(const std::string& why) { return {false, why}; }
Result ok(const std::string& what) { return {true, what}; }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// p/q with 1 <= q <= 12 and 1 <= p <= 3q.
Rational random_rational(Rng& rng) {
  long q = static_cast<long>(uniform(rng, 1, 12));
  long p = static_cast<long>(uniform(rng, 1, static_cast<std::size_t>(3 * q)));
  return Rational(p, q);
}

Rational total(const std::vector<Rational>& v) {
  Rational s(0);
  for (const auto& x : v) s += x;
  return s;
}

Rational max_of(const std::vector<Rational>& v) {
  Rational m = v.front();
  for (const auto& x : v) m = max(m, x);
  return m;
}

Word triadic_root() { return Word(Alphabet::Triadic); }

}  // namespace

Result spongy_measure_check(std::uint64_t) {
  TriadicConfig cfg{Rational(2), Rational(1, 12)};
  Rational m = spongy_measure(cfg, triadic_root());
  if (m != Rational(5, 9)) return fail("spongy_measure(empty) = " + m.str());
  // Stage d keeps 3^d intervals; what is still to be removed below them is
  // 2 M eps (3 eps)^d / (1 - 3 eps).
  Rational three_eps = Rational(3) * cfg.eps;
  Rational pending = Rational(2) * cfg.M * cfg.eps / (Rational(1) - three_eps);
  for (std::size_t d = 0; d <= 6; ++d) {
    Rational len(0);
    for (const auto& node : build_level(cfg, d)) len += node.length();
    if (len - pending != Rational(5, 9)) return fail("level " + std::to_string(d) + " lengths disagree");
    pending *= three_eps;
  }
  return ok("spongy_measure(empty) = 5/9; level sums 0..6 agree");
}

Result spongy_chain_check(std::uint64_t) {
  TriadicConfig cfg{Rational(2), Rational(1, 12)};
  Rational f = spongy_f(cfg);
  if (f != Rational(5, 18) || !(f > Rational(1, 4))) return fail("f = " + f.str());
  std::size_t nodes = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& node : build_level(cfg, n)) {
      GChain g = g_values(cfg, node.s);
      ++nodes;
      if (g.g_bs != Rational(5, 27) || !(g.g_bs > Rational(1, 6))) return fail("g_bs at " + node.s.str());
      if (g.g_as1_upper != Rational(1, 25) || !(g.g_as1_upper < Rational(1, 23)))
        return fail("g_as1_upper at " + node.s.str());
      if (g.bound != Rational(1, 23) || g.inv_mm1 != Rational(1, 6) || !g.holds)
        return fail("chain at " + node.s.str());
    }
  }
  // g_bs must sit inside the enclosure of its series; g_as1_upper only bounds
  // its series from above.
  for (std::size_t n = 0; n <= 2; ++n)
    for (const auto& node : build_level(cfg, n)) {
      if (!g_bs_series(cfg, node.s, 24).contains(Rational(5, 27))) return fail("g_bs series at " + node.s.str());
      if (!(g_as1_series(cfg, node.s, 24).hi() <= Rational(1, 25)))
        return fail("g_as1 series at " + node.s.str());
    }
  return ok("f = 5/18, g_bs = 5/27, g_as1_upper = 1/25 at " + std::to_string(nodes) + " nodes");
}

Result fat_cantor_check(std::uint64_t) {
  FatCantorSchedule sched;  // eps_n = 2^-(2n+1)
  for (std::size_t n = 0; n <= 10; ++n)
    if (sched.eps(n) != Rational::pow2(-2 * static_cast<long>(n) - 1)) return fail("schedule at " + std::to_string(n));
  for (const Word& s : binary_words_upto(10)) {
    Rational m = fat_cantor_measure_in(sched, s);
    if (m != Rational::pow2(-static_cast<long>(s.size()))) return fail("measure in U_" + s.str() + " = " + m.str());
  }
  // Independent oracle: the depth-D stage inside U_s exceeds the limit by
  // exactly the removals still to come, 2^-|s| tail(D).
  const std::size_t D = 11;
  FatCantor fc = fat_cantor(sched, D);
  for (const Word& s : binary_words_upto(8)) {
    Rational stage = lebesgue(fc.stage.intersect(fc.nodes.at(s)));
    Rational expect = Rational::pow2(-static_cast<long>(s.size())) * (Rational(1) + sched.tail(D));
    if (stage != expect) return fail("stage mass in U_" + s.str() + " = " + stage.str());
  }
  return ok("lambda(K in U_s) = 2^-|s| for |s| <= 10");
}

Result halfdensity_check(std::uint64_t) {
  IntervalSet a = example_halfdensity(10);
  for (std::size_t k = 0; k <= 16; ++k) {
    Rational eps = Rational::pow2(-static_cast<long>(k));
    if (window_ratio(a, Rational(0), eps) != Rational(1, 2)) return fail("window ratio at 2^-" + std::to_string(k));
    Rational right = one_sided_ratio(a, Rational(0), eps, Side::Right);
    Rational left = one_sided_ratio(a, Rational(0), eps, Side::Left);
    Rational r_expect = k % 2 == 0 ? Rational(2, 3) : Rational(1, 3);
    if (right != r_expect || left != Rational(1) - r_expect)
      return fail("one-sided ratios at 2^-" + std::to_string(k) + ": " + left.str() + ", " + right.str());
  }
  return ok("window 1/2 at 2^-k for k <= 16; one-sided ratios alternate 1/3, 2/3");
}

namespace {

bool valid_amphorae(const std::vector<Rational>& b, const std::vector<Rational>& a,
                    const std::vector<std::vector<std::size_t>>& sets) {
  if (sets.size() != b.size()) return false;
  std::vector<int> seen(a.size(), 0);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    Rational s(0);
    for (std::size_t i : sets[k]) {
      if (i >= a.size() || seen[i]++) return false;
      s += a[i];
    }
    if (!(s < b[k])) return false;
  }
  for (int c : seen)
    if (c != 1) return false;
  return true;
}

// Some assignment of items to barrels meets every strict capacity.
bool amphorae_exist(const std::vector<Rational>& b, const std::vector<Rational>& a) {
  std::vector<Rational> load(b.size(), Rational(0));
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == a.size()) return true;
    for (std::size_t k = 0; k < b.size(); ++k) {
      load[k] += a[i];
      bool fits = load[k] < b[k];
      if (fits && go(i + 1)) return true;
      load[k] -= a[i];
    }
    return false;
  };
  return go(0);
}

bool valid_barrels(const std::vector<Rational>& A, const std::vector<Rational>& B,
                   const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
  if (blocks.size() != A.size()) return false;
  std::size_t next = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    auto [first, last] = blocks[k];
    if (first != next || last <= first || last > B.size()) return false;
    Rational s(0);
    for (std::size_t j = first; j < last; ++j) s += B[j];
    if (!(A[k] < s)) return false;
    next = last;
  }
  return next == B.size();
}

// Brute force over all splits of B into N consecutive nonempty blocks: the
// unique split whose every block but the last is the shortest sufficient one.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> least_split(const std::vector<Rational>& A,
                                                                            const std::vector<Rational>& B) {
  std::size_t n = A.size(), m = B.size();
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> found;
  std::vector<std::size_t> cuts;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (cuts.size() + 1 == n) {
      std::vector<std::pair<std::size_t, std::size_t>> blocks;
      std::size_t f = 0;
      for (std::size_t c : cuts) {
        blocks.emplace_back(f, c);
        f = c;
      }
      blocks.emplace_back(f, m);
      if (f >= m || !valid_barrels(A, B, blocks)) return;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        Rational shorter(0);
        for (std::size_t j = blocks[k].first; j + 1 < blocks[k].second; ++j) shorter += B[j];
        if (A[k] < shorter) return;
      }
      if (!found) found = blocks;
      return;
    }
    for (std::size_t c = start + 1; c < m; ++c) {
      cuts.push_back(c);
      go(c);
      cuts.pop_back();
    }
  };
  go(0);
  return found;
}

}  // namespace

Result allocation_check(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t exhaustive = 0;
  for (int it = 0; it < 1000; ++it) {
    std::vector<Rational> b(uniform(rng, 1, 8)), a(uniform(rng, 1, 8));
    for (auto& x : b) x = random_rational(rng);
    for (auto& x : a) x = random_rational(rng);
    // Scale a so that m max(a) + sum(a) <= u sum(b) for a random u in (0, 1].
    Rational u(static_cast<long>(uniform(rng, 1, 16)), 16);
    Rational c = total(b) * u / (Rational(static_cast<long>(b.size())) * max_of(a) + total(a));
    for (auto& x : a) x *= c;
    auto sets = allocate_amphorae(b, a);
    if (!valid_amphorae(b, a, sets)) return fail("amphorae postcondition, instance " + std::to_string(it));
    if (a.size() <= 6 && b.size() <= 6) {
      ++exhaustive;
      if (!amphorae_exist(b, a)) return fail("exhaustive search disagrees, instance " + std::to_string(it));
    }
  }
  for (int it = 0; it < 1000; ++it) {
    std::size_t n = uniform(rng, 1, 8);
    std::vector<Rational> A(n), B;
    for (auto& x : A) x = random_rational(rng);
    // Barrels of comparable size, enough of them that no single one dominates.
    Rational slack;
    do {
      B.assign(uniform(rng, n, 8), Rational(0));
      for (auto& x : B) x = Rational(static_cast<long>(uniform(rng, 4, 8)), static_cast<long>(uniform(rng, 1, 4)));
      slack = total(B) - Rational(static_cast<long>(n - 1)) * max_of(B);
    } while (slack.sign() <= 0);
    Rational grow = Rational(1) + Rational(static_cast<long>(uniform(rng, 1, 8)), 8);
    Rational c = total(A) / slack * grow;
    for (auto& x : B) x *= c;
    auto blocks = allocate_barrels(A, B);
    if (!valid_barrels(A, B, blocks)) return fail("barrels postcondition, instance " + std::to_string(it));
    if (n <= 6 && B.size() <= 6) {
      ++exhaustive;
      auto best = least_split(A, B);
      if (!best || *best != blocks) return fail("least-prefix split disagrees, instance " + std::to_string(it));
    }
  }
  return ok("2000 instances; " + std::to_string(exhaustive) + " cross-checked exhaustively");
}

Result embedding_check(std::uint64_t seed) {
  TreeMeasure u = cantor_measure();
  for (std::uint64_t i = 0; i < 50; ++i) {
    std::uint64_t sd = seed * 1000 + i;
    RandomTree rt = random_target_tree(sd);
    StagePlan plan = embed_init(u, rt.w);
    for (int k = 0; k < 2; ++k) embed_stage(u, rt.tree, rt.w, plan);
    std::string tag = "tree " + std::to_string(sd);
    if (plan.stages() != 3) return fail(tag + ": expected three stages");
    for (std::size_t k = 0; k < 3; ++k) {
      InvariantCheck inv = check_invariant(plan, u, rt.w, k);
      if (!inv.ok) return fail(tag + ": invariant fails at stage " + std::to_string(k) + " node " + inv.at.str());
    }
    if (!check_monotone(plan)) return fail(tag + ": stages are not monotone");
    for (std::size_t h = 0; h < 2; ++h) {
      Rational width = Rational::pow2(static_cast<long>(plan.L[h]) + 1 - 2 * static_cast<long>(plan.L[h]));
      for (const Word& s : binary_level(plan.L[h])) {
        Sandwich sw = embed_verify(plan, u, rt.w, s, h);
        if (!sw.holds) return fail(tag + ": sandwich fails at " + s.str());
        if (sw.upper - sw.nu != width) return fail(tag + ": sandwich width " + (sw.upper - sw.nu).str());
      }
    }
  }
  return ok("50 trees, three stages each; invariant, monotonicity and sandwich hold");
}

Result sharp_rho_check(std::uint64_t) {
  SharpK k(Rational(3, 8));
  TreeMeasure w = cantor_measure();
  for (std::size_t n = 0; n <= 8; ++n) {
    Rational gap = k.r_n(n) - k.r();
    gap = gap.sign() < 0 ? -gap : gap;
    Rational unit = Rational::pow2(-static_cast<long>(n) - 4);
    if (gap < Rational(5) * unit || !(gap < Rational(7) * unit)) return fail("r_n band at " + std::to_string(n));
    if (k.D(n).measure(w) != k.r_n(n)) return fail("mu(D_n) at " + std::to_string(n));
    if (k.E(n).measure(w) != k.E_measure(n)) return fail("mu(E_n) at " + std::to_string(n));
    if (k.E(n).meets(Word::zeros(n + 6)) || (n >= 1 && k.E(n).meets(Word::ones(n + 6))))
      return fail("E_n meets a child block at " + std::to_string(n));
  }
  std::size_t count = 0;
  for (const GoodNode& g : good_tree(5)) {
    SharpPoint p = k.measure(g.tilde, 4);
    ++count;
    if (p.rho.kind != Rho::Kind::Band || p.rho.band != g.nval)
      return fail("rho at " + g.str() + " is " + p.rho.str());
    Rational off = p.bounds.center() - k.r_n(g.nval);
    if (off.sign() < 0) off = -off;
    if (off > Rational::pow2(-static_cast<long>(g.nval) - 4)) return fail("center far from r_n at " + g.str());
    if (!k.measure(g.tilde, 1).bounds.contains(p.bounds)) return fail("enclosures not nested at " + g.str());
  }
  MeasureBounds root = k.measure(Word(), 6).bounds;
  Rational lo = root.lo() - k.r(), hi = root.hi() - k.r();
  if (lo < Rational(1, 4) || !(hi < Rational(1, 2))) return fail("root enclosure " + root.str());
  return ok(std::to_string(count) + " good nodes certified with rho = nval");
}

Result sharp_trajectory_check(std::uint64_t) {
  SharpK k(Rational(3, 8));
  auto up = sharp_trajectory(k, MatrixCode::all_zero(5), 5);
  for (const auto& row : up) {
    if (!row.path.certified || row.path.point.rho.kind != Rho::Kind::Band || row.path.point.rho.band != row.stage)
      return fail("all-zero stage " + std::to_string(row.stage) + " rho " + row.path.point.rho.str());
  }
  auto osc = sharp_trajectory(k, MatrixCode::row_ones(0, 5), 6);
  for (const auto& row : osc) {
    if (!row.path.certified || row.path.point.rho.band != 0)
      return fail("row-0 stage " + std::to_string(row.stage) + " rho " + row.path.point.rho.str());
    if (row.stage == 0) continue;
    std::size_t peak = 0;
    for (const auto& s : row.path.steps)
      if (s.point.rho.kind == Rho::Kind::Band) peak = std::max(peak, s.point.rho.band);
    if (peak < row.stage) return fail("row-0 stage " + std::to_string(row.stage) + " never climbs");
  }
  return ok("all-zero rho 0..4; row-0 returns to rho 0 after climbing at every stage");
}

Result compact_reduction_check(std::uint64_t) {
  CompactReduction zero = compactness_reduction(MatrixCode::all_zero(9), 9);
  for (std::size_t n = 0; n < zero.increments.size(); ++n)
    if (zero.increments[n] > Rational::pow2(-static_cast<long>(n) - 2)) return fail("all-zero increment " + std::to_string(n));
  for (std::size_t d = 1; d < zero.stage_measures.size(); ++d)
    if (zero.stage_measures[d].hi() > zero.stage_measures[d - 1].hi()) return fail("all-zero measures increase");
  if (zero.stage_measures.back().hi() > Rational::pow2(-8)) return fail("all-zero measures do not shrink");
  if (!zero.p3 || !zero.pieces.empty()) return fail("all-zero code produced pieces");
  // Row j all ones puts f(z) thick and co-thick in N_{0^j 1}.
  for (std::size_t row : {1, 2}) {
    CompactReduction r = compactness_reduction(MatrixCode::row_ones(row, 8), 6);
    for (std::size_t n = 0; n < r.increments.size(); ++n)
      if (r.increments[n] > Rational::pow2(-static_cast<long>(n) - 2))
        return fail("row-" + std::to_string(row) + " increment " + std::to_string(n));
    if (r.p3 || !r.certificate || r.witness_row != row) return fail("row-" + std::to_string(row) + " witness");
    if (r.certificate->thick != Verdict::Yes || r.certificate->cothick != Verdict::Yes)
      return fail("row-" + std::to_string(row) + " certificate is not yes/yes");
  }
  return ok("all-zero increments and measures; rows 1 and 2 thick and co-thick in N_01 and N_001");
}

Result thick_cothick_check(std::uint64_t) {
  ThickCothick tc = thick_cothick_sigma(cantor_measure(), 6);
  ThicknessCertificate cert = thickness_certificate(tc.set, CylinderSet::full(), 6);
  if (cert.thick != Verdict::Yes || cert.cothick != Verdict::Yes) return fail("certificate is not yes/yes");
  MeasureBounds m = tc.set.measure_bounds(6);
  if (m.hi() > Rational(1, 2)) return fail("measure bound " + m.str());
  Rational pieces(0);
  for (const auto& p : tc.pieces) pieces += Rational::pow2(-static_cast<long>(p.home.size()));
  if (pieces > Rational(1, 2)) return fail("piece homes weigh " + pieces.str());
  return ok(std::to_string(cert.checked) + " cylinders; measure <= " + m.hi().str());
}

namespace {

constexpr std::size_t kBits = 12;
using Bits = std::bitset<std::size_t{1} << kBits>;

std::size_t index_of(const Word& w) {
  std::size_t v = 0;
  for (std::size_t i = 0; i < w.size(); ++i) v = v * 2 + static_cast<std::size_t>(w[i]);
  return v;
}

Bits range_bits(const Word& g) {
  Bits b;
  std::size_t span = std::size_t{1} << (kBits - g.size());
  std::size_t start = index_of(g) * span;
  for (std::size_t i = 0; i < span; ++i) b.set(start + i);
  return b;
}

Bits to_bits(const CylinderSet& c) {
  Bits b;
  for (const Word& g : c.generators()) b |= range_bits(g);
  return b;
}

Word random_word(Rng& rng, std::size_t max_len) {
  std::size_t len = uniform(rng, 0, max_len);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<int>(uniform(rng, 0, 1)));
  return w;
}

CylinderSet random_set(Rng& rng, std::size_t max_len) {
  std::vector<Word> gens(uniform(rng, 0, 6));
  for (auto& g : gens) {
    g = random_word(rng, max_len);
    if (g.empty() && uniform(rng, 0, 3) != 0) g.push_back(1);  // keep the full set rare
  }
  return CylinderSet(std::move(gens));
}

}  // namespace

Result property_suite_check(std::uint64_t seed) {
  Rng rng(seed);
  TreeMeasure cantor = cantor_measure();
  const Rational full_count(static_cast<long>(std::size_t{1} << kBits), 1);
  for (int it = 0; it < 200; ++it) {
    CylinderSet a = random_set(rng, kBits), b = random_set(rng, kBits);
    Bits x = to_bits(a), y = to_bits(b);
    std::string tag = " (instance " + std::to_string(it) + ")";
    if (to_bits(a.unite(b)) != (x | y)) return fail("union" + tag);
    if (to_bits(a.intersect(b)) != (x & y)) return fail("intersection" + tag);
    if (to_bits(a.complement()) != ~x) return fail("complement" + tag);
    if (to_bits(a.minus(b)) != (x & ~y)) return fail("difference" + tag);
    if (a.measure(cantor) != Rational(static_cast<long>(x.count()), 1) / full_count) return fail("cantor measure" + tag);
    Word v = random_word(rng, kBits);
    Bits r = range_bits(v);
    if (a.covers(v) != ((x & r) == r) || a.meets(v) != (x & r).any()) return fail("covers/meets" + tag);

    // Additivity, and a Bernoulli oracle summed point by point at depth 12.
    Rational p(static_cast<long>(uniform(rng, 1, 7)), 8);
    TreeMeasure bern = bernoulli_measure(p);
    for (const TreeMeasure* w : {&cantor, &bern})
      if (a.measure(*w) + b.measure(*w) != a.unite(b).measure(*w) + a.intersect(b).measure(*w))
        return fail("additivity" + tag);
    if (it % 10 == 0) {
      std::vector<Rational> pw(kBits + 1, Rational(1));
      for (std::size_t k = 0; k < kBits; ++k) pw[k + 1] = pw[k] * p;
      std::vector<Rational> qw(kBits + 1, Rational(1));
      for (std::size_t k = 0; k < kBits; ++k) qw[k + 1] = qw[k] * (Rational(1) - p);
      Rational sum(0);
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) {
          std::size_t ones = std::bitset<kBits>(i).count();
          sum += pw[ones] * qw[kBits - ones];
        }
      if (sum != a.measure(bern)) return fail("bernoulli oracle" + tag);
    }

    // Density along a point: past the longest generator the profile is the
    // indicator of the point's cylinder.
    for (int s = 0; s < 8; ++s) {
      Word z;
      for (std::size_t i = 0; i < 16; ++i) z.push_back(static_cast<int>(uniform(rng, 0, 1)));
      auto prof = density_profile(a, z, cantor);
      Rational expect(x[index_of(z.prefix(kBits))] ? 1 : 0);
      for (std::size_t n = a.max_length(); n < prof.size(); ++n)
        if (prof[n] != expect) return fail("density of a clopen set" + tag);
    }

    // The density tree of the body of the density tree is the same tree.
    CylinderSet c = random_set(rng, 8);
    DensityTree t = density_tree(ApproxSet::clopen(c), 8);
    CylinderSet body = density_tree_body(t);
    if (to_bits(body) != to_bits(c)) return fail("body of the density tree" + tag);
    DensityTree t2 = density_tree(ApproxSet::clopen(body), 8);
    if (t2.flags != t.flags) return fail("density tree of its body" + tag);
  }
  return ok("200 instances: boolean algebra, additivity, clopen densities, tree bodies");
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "spongy measure", 1, spongy_measure_check},
      {2, "spongy oscillation chain", 10, spongy_chain_check},
      {3, "fat Cantor measure", 1, fat_cantor_check},
      {4, "half-density example", 1, halfdensity_check},
      {5, "allocation lemmas", 30, allocation_check},
      {6, "embedding invariant", 60, embedding_check},
      {7, "sharp-point rho certification", 30, sharp_rho_check},
      {8, "sharp trajectories", 10, sharp_trajectory_check},
      {9, "compactness reduction", 60, compact_reduction_check},
      {10, "thick co-thick union of compacts", 10, thick_cothick_check},
      {11, "property suites", 60, property_suite_check},
  };
  return all;
}

}  // namespace dlab::checks
