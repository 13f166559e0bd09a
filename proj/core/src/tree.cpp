#include "densitylab/core/tree.hpp"

#include <deque>

#include "densitylab/core/errors.hpp"

namespace dlab {

int symbol_of(Alphabet a, int index) { return a == Alphabet::Triadic ? index - 1 : index; }
int index_of(Alphabet a, int symbol) { return a == Alphabet::Triadic ? symbol + 1 : symbol; }

PrunedTree::PrunedTree(Alphabet a, ArityFn arity, bool normal)
    : alphabet_(a), arity_(std::move(arity)), normal_(normal) {}

PrunedTree PrunedTree::full_binary() {
  return PrunedTree(Alphabet::Binary, [](const Word&) { return std::optional<int>(2); });
}

PrunedTree PrunedTree::full_triadic() {
  return PrunedTree(Alphabet::Triadic, [](const Word&) { return std::optional<int>(3); });
}

PrunedTree PrunedTree::full_omega() {
  return PrunedTree(Alphabet::Natural, [](const Word&) { return std::optional<int>(); });
}

bool PrunedTree::member(const Word& s) const {
  Word prefix(alphabet_);
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto n = arity_(prefix);
    int idx = index_of(alphabet_, s[i]);
    if (idx < 0 || (n && idx >= *n)) return false;
    prefix.push_back(s[i]);
  }
  return true;
}

std::vector<Word> PrunedTree::children(const Word& s, int window) const {
  auto n = arity_(s);
  int count = n ? *n : window;
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(s.child(symbol_of(alphabet_, i)));
  return out;
}

TreeMeasure::TreeMeasure(Alphabet a, WeightFn weight, std::string name)
    : alphabet_(a), weight_(std::move(weight)), name_(std::move(name)) {
  root_ = weight_(Word(alphabet_));
}

TreeMeasure& TreeMeasure::with_tail(TailFn tail) {
  tail_ = std::move(tail);
  return *this;
}

TreeMeasure& TreeMeasure::with_modulus(ModulusFn modulus) {
  modulus_ = std::move(modulus);
  return *this;
}

TreeMeasure& TreeMeasure::mark_uniform() {
  uniform_ = true;
  return *this;
}

Rational TreeMeasure::weight(const Word& s) const {
  if (uniform_) return root_ * Rational::pow2(-static_cast<long>(s.size()));
  return weight_(s);
}

Rational TreeMeasure::child_tail(const Word& s, int k) const {
  if (!tail_) throw PreconditionError("measure '" + name_ + "' declares no child tail");
  return tail_(s, k);
}

std::size_t TreeMeasure::modulus(const Rational& rho) const {
  if (!modulus_) throw PreconditionError("measure '" + name_ + "' declares no non-singularity modulus");
  if (rho.sign() <= 0) throw PreconditionError("modulus requested for non-positive threshold");
  return modulus_(rho);
}

namespace {

// Least n with base^n < rho, for 0 < base < 1.
std::size_t geometric_level(const Rational& base, const Rational& rho) {
  std::size_t n = 0;
  Rational x(1);
  while (!(x < rho)) {
    x *= base;
    ++n;
  }
  return n;
}

}  // namespace

TreeMeasure cantor_measure() {
  TreeMeasure m(Alphabet::Binary, [](const Word& s) { return Rational::pow2(-static_cast<long>(s.size())); },
                "cantor");
  m.mark_uniform();
  m.with_modulus([](const Rational& rho) {
    // 2^-n < rho  <=>  n > -log2(rho).
    long e = rho.floor_log2();
    long n = -e;
    if (Rational::pow2(-n) >= rho) ++n;
    return static_cast<std::size_t>(n < 0 ? 0 : n);
  });
  return m;
}

TreeMeasure bernoulli_measure(const Rational& p) {
  if (p.sign() <= 0 || p >= Rational(1)) throw PreconditionError("bernoulli parameter must lie in (0, 1)");
  Rational q = Rational(1) - p;
  TreeMeasure m(
      Alphabet::Binary,
      [p, q](const Word& s) {
        unsigned ones = 0;
        for (int b : s.symbols()) ones += static_cast<unsigned>(b);
        return pow(p, ones) * pow(q, static_cast<unsigned>(s.size()) - ones);
      },
      "bernoulli(" + p.str() + ")");
  Rational base = max(p, q);
  m.with_modulus([base](const Rational& rho) { return geometric_level(base, rho); });
  return m;
}

TreeMeasure baire_measure() {
  TreeMeasure m(
      Alphabet::Natural,
      [](const Word& s) {
        long e = 0;
        for (int k : s.symbols()) e += k + 1;
        return Rational::pow2(-e);
      },
      "baire");
  m.with_tail([w = m](const Word& s, int k) { return w.weight(s) * Rational::pow2(-k); });
  return m;
}

MeasureCheck tree_measure_check(const TreeMeasure& w, const PrunedTree& t, std::size_t depth, int window) {
  MeasureCheck out;
  if (depth == 0) return out;
  std::deque<Word> queue{Word(t.alphabet())};
  while (!queue.empty()) {
    Word s = std::move(queue.front());
    queue.pop_front();
    Rational ws = w.weight(s);
    if (ws.sign() <= 0) return {false, s, "non-positive weight " + ws.str()};
    auto arity = t.arity(s);
    auto kids = t.children(s, window);
    Rational sum(0);
    for (const Word& c : kids) {
      Rational wc = w.weight(c);
      if (wc.sign() <= 0) return {false, s, "child " + c.str() + " has non-positive weight " + wc.str()};
      sum += wc;
    }
    if (!arity) {
      if (!w.has_tail()) return {false, s, "infinitely branching node without a declared tail"};
      sum += w.child_tail(s, window);
    }
    if (sum != ws) return {false, s, "children sum to " + sum.str() + " but node weighs " + ws.str()};
    if (s.size() + 1 < depth)
      for (auto& c : kids) queue.push_back(std::move(c));
  }
  return out;
}

}  // namespace dlab
