#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "densitylab/cantor/approx.hpp"

namespace dlab {

// A compact subset of N_home with empty interior and measure at least
// w(home) - eps. Every word x extending home that is not already inside a
// removed cylinder gets its own removal c_x = x^1^0^m, with m least such that
// w(c_x) <= eps * 2^-(2|x| - |home| + 2). Level l removes at most
// eps * 2^-(l + 2) in total, so everything removed weighs at most eps / 2.
// Stage d has performed exactly the removals with |x| <= d.
class ThinCompact : public ApproxModel, public std::enable_shared_from_this<ThinCompact> {
 public:
  ThinCompact(Word home, Rational eps, TreeMeasure w = cantor_measure());

  const Word& home() const { return home_; }
  const Rational& eps() const { return eps_; }

  // Weight bound for a single removal made at level len.
  Rational removal_bound(std::size_t len) const;
  // The removal cylinder c_x for x extending home (x need not be active).
  Word removal(const Word& x) const;
  // x lies inside the removal cylinder of one of its proper prefixes.
  bool voided(const Word& x) const;
  // Removal cylinders of all active x with |x| <= d, x in length-lex order.
  std::vector<Word> removals(std::size_t d) const;

  std::shared_ptr<const StageView> view(std::size_t d) const override;
  Rational tail(std::size_t d) const override;
  Mode mode() const override { return Mode::Decreasing; }
  const TreeMeasure& measure() const override { return w_; }
  bool certified_disjoint(const Word& v) const override;

  // Bound on w((C_d \ K) in N_v).
  Rational excess(const Word& v, std::size_t d) const;

 private:
  std::size_t removal_zeros(const Word& x) const;

  Word home_;
  Rational eps_;
  TreeMeasure w_;
};

// Thin compact inside N_t of measure at least w(t) - eps; rejects eps outside
// (0, w(t)).
ApproxSet compact_thin(const Word& t, const Rational& eps, const TreeMeasure& w = cantor_measure());

struct SigmaPiece {
  Word basis;   // U_n
  Word tilde;   // first extension of U_n disjoint from the earlier pieces
  Word home;    // tilde^0^p carrying the thin compact
  Rational eps;
  std::shared_ptr<const ThinCompact> compact;
};

struct ThickCothick {
  ApproxSet set;
  std::vector<SigmaPiece> pieces;
};

// A countable union of thin compacts meeting every basic open set of length
// <= stages in positive measure while leaving positive measure out. Piece n
// sits inside the n-th basic cylinder U_n (length-lex order) and weighs at
// most 2^-(n+2) times the smallest chosen cylinder so far.
ThickCothick thick_cothick_sigma(const TreeMeasure& w, std::size_t stages);

}  // namespace dlab
