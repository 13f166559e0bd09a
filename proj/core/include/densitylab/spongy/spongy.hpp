#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "densitylab/core/bounds.hpp"
#include "densitylab/core/rational.hpp"
#include "densitylab/core/word.hpp"
#include "densitylab/realline/interval.hpp"

namespace dlab {

// Parameters of the triadic construction K(M, eps) inside [0, 1].
struct TriadicConfig {
  Rational M{2};
  Rational eps{1, 12};

  // (M - 1) / (M (3 + 2M) - 3).
  static Rational eps0(const Rational& M);
  // Throws unless M > 1 and 0 < eps < eps0(M).
  void validate() const;
};

// K_s = [a, b] for a word s over {-1, 0, 1}.
struct TriadicNode {
  Word s;
  Rational a;
  Rational b;

  Rational length() const { return b - a; }
};

// K_s computed from s. Children of [a, b] at level n = |s|:
// [a, a + eps^(n+1)], [a + (1+M) eps^(n+1), b - (1+M) eps^(n+1)],
// [b - eps^(n+1), b].
TriadicNode triadic_node(const TriadicConfig& cfg, const Word& s);

// The 3^n nodes of level n in left-to-right order.
std::vector<TriadicNode> build_level(const TriadicConfig& cfg, std::size_t n);

// lambda(K in K_s) = |K_s| - 2 M eps^(|s|+1) / (1 - 3 eps).
Rational spongy_measure(const TriadicConfig& cfg, const Word& s);

// lambda(K^(|s|+d) in K_s), the stage d levels below s.
Rational stage_measure_in(const TriadicConfig& cfg, const Word& s, std::size_t d);

// (1 - (3 + 2M) eps) / (2 - 6 eps): density of K at a_s in windows of
// radius eps^|s| for s ending in -1.
Rational spongy_f(const TriadicConfig& cfg);

struct GChain {
  Rational g_bs;         // (1 - eps (3 + 2M)) / ((1 + M)(1 - 3 eps))
  Rational g_as1_upper;  // eps / (M + eps)
  Rational bound;        // (M - 1) / (2M^3 + 3M^2 - 2M - 1)
  Rational inv_mm1;      // 1 / (M (M + 1))
  // g_as1_upper < bound < inv_mm1 < g_bs
  bool holds = false;
};

// Density ratios towards b_z, z = s^0^omega, from b_s and from a_{s^1}.
GChain g_values(const TriadicConfig& cfg, const Word& s);

// The same two ratios by summing lambda(K in K_{s^0^n^1}) for n < terms,
// with the remainder enclosed by its geometric bound.
MeasureBounds g_bs_series(const TriadicConfig& cfg, const Word& s, std::size_t terms);
MeasureBounds g_as1_series(const TriadicConfig& cfg, const Word& s, std::size_t terms);

// lambda(K in (lo, hi)). Nodes inside the window contribute their closed
// form; nodes still cut by a window edge at level cap contribute
// [0, their measure].
MeasureBounds spongy_window(const TriadicConfig& cfg, const Rational& lo, const Rational& hi, std::size_t cap = 48);

// The unique s of length depth with x in K_s, or nullopt if x misses K^(depth).
std::optional<Word> component_code(const TriadicConfig& cfg, const Rational& x, std::size_t depth);

struct BlurWindows {
  // lambda(K in (x - M eps^|s|, x + M eps^|s|)) / (2 M eps^|s|), below 1/(2M).
  MeasureBounds wide;
  // lambda(K in (x - eps^|s|, x + eps^|s|)) / (2 eps^|s|); f at x = a_s.
  MeasureBounds narrow;
};

// Window ratios at x in K_s for s ending in -1 or 1. x must carry code s up
// to depth |s| + certify; otherwise it is rejected as outside K_s.
BlurWindows blur_windows(const TriadicConfig& cfg, const Word& s, const Rational& x, std::size_t certify = 16);

// First node s with |s| <= depth whose flanks (a_s - M eps^|s|, a_s) and
// (b_s, b_s + M eps^|s|) meet K^(|s|), or nullopt when all are clear.
std::optional<Word> disjointness_failure(const TriadicConfig& cfg, std::size_t depth);

enum class Flavor { Open, Closed };
enum class EndpointOsc { Positive, Zero };

struct SpongyVariant {
  Rational m;
  Rational base_measure;  // lambda(S) for the base S = K(M, eps)
  Rational alpha;
  bool plus = false;  // X+ (alpha) rather than X- (alpha)
  // Zero-oscillation variant only: eps_n = eps0 4^-n and the closed-form
  // density of X at 0 in windows of radius eps_2n.
  Rational eps0;
  std::vector<Rational> zero_window;
  IntervalSet stage;
  Rational stage_measure;
  // Bound on |stage_measure - m|.
  Rational tail_bound;
};

// A spongy subset of [0, 1] of measure m with inf 0 and sup 1, built from
// affine copies of K (closed flavor) or its interior (open flavor), given at
// stage depth. Rejects m outside (0, 1).
SpongyVariant spongy_variant(const Rational& m, Flavor flavor, EndpointOsc osc, std::size_t depth,
                             const TriadicConfig& cfg = {});

}  // namespace dlab
