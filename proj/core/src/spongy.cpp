#include "densitylab/spongy/spongy.hpp"

#include <algorithm>

#include "densitylab/core/errors.hpp"

namespace dlab {

Rational TriadicConfig::eps0(const Rational& M) {
  return (M - Rational(1)) / (M * (Rational(3) + Rational(2) * M) - Rational(3));
}

void TriadicConfig::validate() const {
  if (!(M > Rational(1))) throw PreconditionError("spongy construction needs M > 1, got " + M.str());
  if (eps.sign() <= 0 || !(eps < eps0(M)))
    throw PreconditionError("spongy construction needs 0 < eps < " + eps0(M).str() + ", got " + eps.str());
}

namespace {

Rational eps_pow(const TriadicConfig& cfg, std::size_t n) { return pow(cfg.eps, static_cast<unsigned>(n)); }

void child_bounds(const TriadicConfig& cfg, std::size_t level, int sym, Rational& a, Rational& b) {
  Rational e = eps_pow(cfg, level + 1);
  if (sym == -1) {
    b = a + e;
  } else if (sym == 1) {
    a = b - e;
  } else {
    Rational gap = (Rational(1) + cfg.M) * e;
    a = a + gap;
    b = b - gap;
  }
}

}  // namespace

TriadicNode triadic_node(const TriadicConfig& cfg, const Word& s) {
  cfg.validate();
  if (s.alphabet() != Alphabet::Triadic && !s.empty()) throw PreconditionError("spongy nodes are triadic words");
  Rational a(0), b(1);
  for (std::size_t i = 0; i < s.size(); ++i) child_bounds(cfg, i, s[i], a, b);
  return {s, a, b};
}

std::vector<TriadicNode> build_level(const TriadicConfig& cfg, std::size_t n) {
  cfg.validate();
  std::vector<TriadicNode> level{{Word(Alphabet::Triadic), Rational(0), Rational(1)}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<TriadicNode> next;
    next.reserve(level.size() * 3);
    for (const TriadicNode& p : level) {
      for (int sym = -1; sym <= 1; ++sym) {
        TriadicNode c{p.s.child(sym), p.a, p.b};
        child_bounds(cfg, k, sym, c.a, c.b);
        next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  return level;
}

Rational spongy_measure(const TriadicConfig& cfg, const Word& s) {
  TriadicNode node = triadic_node(cfg, s);
  Rational removed = Rational(2) * cfg.M * eps_pow(cfg, s.size() + 1) / (Rational(1) - Rational(3) * cfg.eps);
  return node.length() - removed;
}

Rational stage_measure_in(const TriadicConfig& cfg, const Word& s, std::size_t d) {
  TriadicNode node = triadic_node(cfg, s);
  Rational removed(0);
  Rational copies(1);
  for (std::size_t k = 0; k < d; ++k) {
    removed += copies * Rational(2) * cfg.M * eps_pow(cfg, s.size() + 1 + k);
    copies *= Rational(3);
  }
  return node.length() - removed;
}

Rational spongy_f(const TriadicConfig& cfg) {
  cfg.validate();
  const Rational& e = cfg.eps;
  return (Rational(1) - (Rational(3) + Rational(2) * cfg.M) * e) / (Rational(2) - Rational(6) * e);
}

GChain g_values(const TriadicConfig& cfg, const Word&) {
  cfg.validate();
  const Rational& M = cfg.M;
  const Rational& e = cfg.eps;
  GChain g;
  g.g_bs = (Rational(1) - e * (Rational(3) + Rational(2) * M)) / ((Rational(1) + M) * (Rational(1) - Rational(3) * e));
  g.g_as1_upper = e / (M + e);
  g.bound = (M - Rational(1)) /
            (Rational(2) * pow(M, 3) + Rational(3) * pow(M, 2) - Rational(2) * M - Rational(1));
  g.inv_mm1 = Rational(1) / (M * (M + Rational(1)));
  g.holds = g.g_as1_upper < g.bound && g.bound < g.inv_mm1 && g.inv_mm1 < g.g_bs;
  return g;
}

namespace {

// Partial sum over n in [from, terms) of lambda(K in K_{s^0^n^1}) plus the
// remainder bound sum over n >= terms of eps^(|s|+n+1).
MeasureBounds zero_run_mass(const TriadicConfig& cfg, const Word& s, std::size_t from, std::size_t terms) {
  Rational sum(0);
  Word w = s;
  for (std::size_t n = 0; n < from; ++n) w.push_back(0);
  for (std::size_t n = from; n < terms; ++n) {
    sum += spongy_measure(cfg, w.child(1));
    w.push_back(0);
  }
  std::size_t start = std::max(from, terms);
  Rational rest = eps_pow(cfg, s.size() + start + 1) / (Rational(1) - cfg.eps);
  return MeasureBounds(sum, sum + rest);
}

}  // namespace

MeasureBounds g_bs_series(const TriadicConfig& cfg, const Word& s, std::size_t terms) {
  cfg.validate();
  Rational dist = (Rational(1) + cfg.M) * eps_pow(cfg, s.size() + 1) / (Rational(1) - cfg.eps);
  return zero_run_mass(cfg, s, 0, terms).scale(Rational(1) / dist);
}

MeasureBounds g_as1_series(const TriadicConfig& cfg, const Word& s, std::size_t terms) {
  cfg.validate();
  Rational dist = eps_pow(cfg, s.size() + 1) * (cfg.M + cfg.eps) / (Rational(1) - cfg.eps);
  return zero_run_mass(cfg, s, 1, terms).scale(Rational(1) / dist);
}

namespace {

void window_walk(const TriadicConfig& cfg, const TriadicNode& node, const Rational& lo, const Rational& hi,
                 std::size_t cap, Rational& exact, Rational& slack) {
  if (node.b <= lo || node.a >= hi) return;
  if (lo <= node.a && node.b <= hi) {
    exact += spongy_measure(cfg, node.s);
    return;
  }
  if (node.s.size() >= cap) {
    slack += spongy_measure(cfg, node.s);
    return;
  }
  for (int sym = -1; sym <= 1; ++sym) {
    TriadicNode c{node.s.child(sym), node.a, node.b};
    child_bounds(cfg, node.s.size(), sym, c.a, c.b);
    window_walk(cfg, c, lo, hi, cap, exact, slack);
  }
}

}  // namespace

MeasureBounds spongy_window(const TriadicConfig& cfg, const Rational& lo, const Rational& hi, std::size_t cap) {
  cfg.validate();
  if (!(lo < hi)) throw PreconditionError("window needs lo < hi");
  Rational exact(0), slack(0);
  window_walk(cfg, {Word(Alphabet::Triadic), Rational(0), Rational(1)}, lo, hi, cap, exact, slack);
  return MeasureBounds(exact, exact + slack);
}

std::optional<Word> component_code(const TriadicConfig& cfg, const Rational& x, std::size_t depth) {
  cfg.validate();
  if (x < Rational(0) || x > Rational(1)) return std::nullopt;
  Word s(Alphabet::Triadic);
  Rational a(0), b(1);
  for (std::size_t k = 0; k < depth; ++k) {
    bool found = false;
    for (int sym = -1; sym <= 1 && !found; ++sym) {
      Rational ca = a, cb = b;
      child_bounds(cfg, k, sym, ca, cb);
      if (ca <= x && x <= cb) {
        s.push_back(sym);
        a = std::move(ca);
        b = std::move(cb);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return s;
}

BlurWindows blur_windows(const TriadicConfig& cfg, const Word& s, const Rational& x, std::size_t certify) {
  cfg.validate();
  if (s.empty() || s.back() == 0) throw PreconditionError("blur windows need a word ending in -1 or 1");
  std::optional<Word> code = component_code(cfg, x, s.size() + certify);
  if (!code || !s.is_prefix_of(*code))
    throw PreconditionError("x = " + x.str() + " is not in K_" + s.str() + " to depth " +
                            std::to_string(s.size() + certify));
  Rational r = eps_pow(cfg, s.size());
  Rational wide_r = cfg.M * r;
  BlurWindows out;
  out.wide = spongy_window(cfg, x - wide_r, x + wide_r).scale(Rational(1) / (Rational(2) * wide_r));
  out.narrow = spongy_window(cfg, x - r, x + r).scale(Rational(1) / (Rational(2) * r));
  return out;
}

std::optional<Word> disjointness_failure(const TriadicConfig& cfg, std::size_t depth) {
  cfg.validate();
  for (std::size_t n = 0; n <= depth; ++n) {
    std::vector<TriadicNode> level = build_level(cfg, n);
    Rational flank = cfg.M * eps_pow(cfg, n);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const TriadicNode& v = level[i];
      // Levels are sorted left to right, so only the neighbours can intrude.
      if (i > 0 && level[i - 1].b > v.a - flank) return v.s;
      if (i + 1 < level.size() && level[i + 1].a < v.b + flank) return v.s;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Interval> base_parts(const TriadicConfig& cfg, std::size_t depth, Flavor flavor) {
  std::vector<Interval> out;
  for (const TriadicNode& n : build_level(cfg, depth))
    out.push_back(flavor == Flavor::Closed ? Interval::closed(n.a, n.b) : Interval::open(n.a, n.b));
  return out;
}

void append_scaled(const std::vector<Interval>& base, const Rational& a, const Rational& b,
                   std::vector<Interval>& out) {
  Rational len = b - a;
  for (const Interval& p : base) out.push_back({a + len * p.lo, a + len * p.hi, p.lo_closed, p.hi_closed});
}

// X-(alpha) or X+(alpha) for target measure m, rescaled into [lo, hi].
void append_x(const std::vector<Interval>& base, const Rational& lam_s, const Rational& m, Flavor flavor,
              const Rational& lo, const Rational& hi, SpongyVariant& v, std::vector<Interval>& out) {
  Rational one(1), two(2);
  if (m <= lam_s) {
    v.alpha = m / (two * lam_s);
    v.plus = false;
  } else {
    v.alpha = (one - m) / (two * (one - lam_s));
    v.plus = true;
  }
  Rational len = hi - lo;
  Rational a1 = lo + len * v.alpha, b0 = hi - len * v.alpha;
  append_scaled(base, lo, a1, out);
  append_scaled(base, b0, hi, out);
  if (v.plus) out.push_back(flavor == Flavor::Closed ? Interval::closed(a1, b0) : Interval::open(a1, b0));
}

}  // namespace

SpongyVariant spongy_variant(const Rational& m, Flavor flavor, EndpointOsc osc, std::size_t depth,
                             const TriadicConfig& cfg) {
  cfg.validate();
  if (m.sign() <= 0 || !(m < Rational(1))) throw PreconditionError("spongy variant needs 0 < m < 1, got " + m.str());
  Rational one(1), two(2);
  SpongyVariant v;
  v.m = m;
  v.base_measure = spongy_measure(cfg, Word(Alphabet::Triadic));
  const Rational& lam_s = v.base_measure;
  std::vector<Interval> base = base_parts(cfg, depth, flavor);
  Rational base_excess = stage_measure_in(cfg, Word(Alphabet::Triadic), depth) - lam_s;
  std::vector<Interval> parts;

  if (osc == EndpointOsc::Positive) {
    append_x(base, lam_s, m, flavor, Rational(0), one, v, parts);
    v.stage = IntervalSet(std::move(parts));
    v.stage_measure = lebesgue(v.stage);
    v.tail_bound = abs(v.stage_measure - m);
    return v;
  }

  // eps0 = 2^-k, the largest power of two <= min(m, 1 - m) / 8.
  Rational cap = min(m, one - m) / Rational(8);
  v.eps0 = Rational::pow2(cap.floor_log2());
  auto eps_n = [&](std::size_t n) { return v.eps0 * Rational::pow2(-2 * static_cast<long>(n)); };
  // Piece n has length l_n = 2^-(n+1) (eps_2n - eps_2n+1), centred in
  // (eps_2n+1, eps_2n), and its mirror image near 1.
  Rational pieces(0), excess(0);
  for (std::size_t n = 0; n < depth; ++n) {
    Rational outer = eps_n(2 * n), inner = eps_n(2 * n + 1);
    Rational len = Rational::pow2(-static_cast<long>(n) - 1) * (outer - inner);
    Rational lo = (outer + inner - len) / two;
    append_scaled(base, lo, lo + len, parts);
    append_scaled(base, one - lo - len, one - lo, parts);
    pieces += two * lam_s * len;
    excess += two * base_excess * len;
    v.zero_window.push_back(lam_s * Rational(6, 31) * Rational::pow2(-static_cast<long>(n)));
  }
  // Total of all pieces: 2 lambda(S) sum_n l_n = (24/31) lambda(S) eps0.
  Rational total = Rational(24, 31) * lam_s * v.eps0;
  Rational missing = total - pieces;
  Rational middle = (m - total) / (one - two * v.eps0);
  SpongyVariant inner;
  append_x(base, lam_s, middle, flavor, v.eps0, one - v.eps0, inner, parts);
  v.alpha = inner.alpha;
  v.plus = inner.plus;
  v.stage = IntervalSet(std::move(parts));
  v.stage_measure = lebesgue(v.stage);
  Rational middle_excess = two * inner.alpha * base_excess * (one - two * v.eps0);
  v.tail_bound = excess + missing + middle_excess;
  return v;
}

}  // namespace dlab
