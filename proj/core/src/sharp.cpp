#include "densitylab/reductions/sharp.hpp"

#include <mutex>

#include "densitylab/core/errors.hpp"

namespace dlab {

std::vector<GoodNode> GoodNode::children() const {
  std::vector<GoodNode> out{extend(true)};
  if (nval >= 1) out.push_back(extend(false));
  return out;
}

GoodNode GoodNode::extend(bool up) const {
  if (!up && nval == 0) throw PreconditionError("a good node of nval 0 has no descending child");
  GoodNode c = *this;
  GoodBlock b{up, nval};
  c.sigma.push_back(b);
  for (std::size_t i = 0; i < b.length(); ++i) c.tilde.push_back(up ? 0 : 1);
  c.nval = up ? nval + 1 : nval - 1;
  return c;
}

std::string GoodNode::str() const {
  std::string s = "<";
  for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + sigma[i].str();
  return s + ">";
}

std::vector<GoodNode> good_tree(std::size_t depth) {
  std::vector<GoodNode> out{GoodNode{}};
  std::size_t begin = 0;
  for (std::size_t level = 0; level < depth; ++level) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (auto& c : out[i].children()) out.push_back(std::move(c));
    begin = end;
  }
  return out;
}

namespace {

// Walks t block by block. Returns the good node reached by the full blocks
// and the length k of the trailing partial block, whose bit is `bit`.
struct Parsed {
  GoodNode node;
  std::size_t k = 0;
  int bit = 0;
};

std::optional<Parsed> parse_prefix(const Word& t) {
  Parsed p;
  std::size_t pos = 0;
  while (pos < t.size()) {
    int b = t[pos];
    if (b == 1 && p.node.nval == 0) return std::nullopt;
    std::size_t len = p.node.nval + 6;
    std::size_t stop = std::min(pos + len, t.size());
    for (std::size_t i = pos; i < stop; ++i)
      if (t[i] != b) return std::nullopt;
    if (stop - pos < len) {
      p.k = stop - pos;
      p.bit = b;
      return p;
    }
    p.node = p.node.extend(b == 0);
    pos = stop;
  }
  return p;
}

Rational magnitude(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace

std::optional<GoodNode> parse_good(const Word& tilde) {
  auto p = parse_prefix(tilde);
  if (!p || p->k != 0) return std::nullopt;
  return p->node;
}

bool Rho::certifies_at_least(std::size_t m) const {
  if (kind == Kind::Omega) return true;
  return at_least >= 0 && static_cast<std::size_t>(at_least) >= m;
}

std::string Rho::str() const {
  switch (kind) {
    case Kind::Band: return std::to_string(band);
    case Kind::Omega: return "omega";
    case Kind::Straddle: return "straddle";
    case Kind::Outside: return "outside";
  }
  return "?";
}

Rho rho_of(const MeasureBounds& x, const Rational& r) {
  Rho out;
  if (x.lo() == r && x.hi() == r) {
    out.kind = Rho::Kind::Omega;
    return out;
  }
  Rational a = magnitude(x.lo() - r), b = magnitude(x.hi() - r);
  Rational dmax = max(a, b);
  Rational dmin = x.contains(r) ? Rational(0) : min(a, b);
  // dmax < 2^-(m+1) iff m <= -floor_log2(dmax) - 2.
  long m = -dmax.floor_log2() - 2;
  if (m < 0) {
    out.kind = Rho::Kind::Outside;
    return out;
  }
  out.at_least = m;
  if (dmin >= Rational::pow2(-m - 2)) {
    out.kind = Rho::Kind::Band;
    out.band = static_cast<std::size_t>(m);
  }
  return out;
}

SharpK::SharpK(Rational r) : r_(std::move(r)), cache_(std::make_shared<Cache>()) {
  if (r_.sign() <= 0 || r_ >= Rational(1)) throw PreconditionError("r must lie in (0, 1); got " + r_.str());
  long e = 0;
  Rational den(mpq_class(r_.raw().get_den()));
  if (!den.is_pow2(&e)) throw PreconditionError("r must be dyadic; got " + r_.str());
}

Rational SharpK::r_n(std::size_t n) const {
  Rational step = Rational(6) * Rational::pow2(-static_cast<long>(n) - 4);
  Rational up = r_ + step;
  if (up < Rational(1)) return up;
  Rational down = r_ - step;
  if (down.sign() <= 0) throw PreconditionError("no admissible r_n for r = " + r_.str());
  return down;
}

CylinderSet SharpK::D(std::size_t n) const {
  Rational x = r_n(n);
  std::vector<Word> gens;
  Word prefix;
  while (!x.is_zero()) {
    x *= Rational(2);
    if (x >= Rational(1)) {
      gens.push_back(prefix.child(0));
      prefix.push_back(1);
      x -= Rational(1);
    } else {
      prefix.push_back(0);
    }
  }
  return CylinderSet(std::move(gens));
}

CylinderSet SharpK::E(std::size_t n) const {
  CylinderSet d = D(n);
  std::vector<Word> gens;
  for (std::size_t i = 1; i <= n + 5; ++i) {
    Word lo = Word::zeros(i).child(1), hi = Word::ones(i).child(0);
    for (const Word& g : d.generators()) {
      gens.push_back(lo.concat(g));
      gens.push_back(hi.concat(g));
    }
  }
  return CylinderSet(std::move(gens));
}

Rational SharpK::E_measure(std::size_t n) const {
  return r_n(n) * (Rational(1) - Rational::pow2(-static_cast<long>(n) - 5));
}

MeasureBounds SharpK::good_bounds(std::size_t n, std::size_t depth) const {
  auto key = std::make_pair(n, depth);
  {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->bounds.find(key);
    if (it != cache_->bounds.end()) return it->second;
  }
  Rational e = E_measure(n);
  Rational w = Rational::pow2(-static_cast<long>(n) - 6);
  MeasureBounds out;
  if (depth == 0) {
    out = MeasureBounds(e, e + w * Rational(n >= 1 ? 2 : 1));
  } else {
    MeasureBounds kids = good_bounds(n + 1, depth - 1);
    if (n >= 1) kids = kids + good_bounds(n - 1, depth - 1);
    out = kids.scale(w) + e;
  }
  std::unique_lock lock(cache_->mu);
  cache_->bounds.emplace(key, out);
  return out;
}

SharpPoint SharpK::measure(const Word& t, std::size_t depth) const {
  auto p = parse_prefix(t);
  if (!p) throw PreconditionError("word " + t.str() + " is not a prefix of a good node");
  SharpPoint out;
  out.nval = p->node.nval;
  out.k = p->k;
  if (p->k == 0) {
    out.bounds = good_bounds(out.nval, depth);
  } else {
    std::size_t child = p->bit == 0 ? out.nval + 1 : out.nval - 1;
    Rational f = Rational::pow2(static_cast<long>(p->k) - static_cast<long>(out.nval) - 6);
    out.bounds = good_bounds(child, depth).scale(f) + r_n(out.nval) * (Rational(1) - f);
  }
  out.rho = rho_of(out.bounds, r_);
  return out;
}

std::size_t SharpK::cache_size() const {
  std::shared_lock lock(cache_->mu);
  return cache_->bounds.size();
}

namespace {

SharpPath image_of_empty(const SharpK& k, std::size_t depth) {
  SharpPath p;
  p.point = k.measure(Word(), depth);
  p.certified = p.point.rho.kind == Rho::Kind::Band && p.point.rho.band == 0;
  return p;
}

// Appends one block to `node`, recording every word strictly between the old
// and the new tilde.
void walk_block(const SharpK& k, GoodNode& node, bool up, std::size_t required, std::size_t depth,
                std::vector<SharpStep>& steps) {
  GoodNode next = node.extend(up);
  for (std::size_t i = node.tilde.size() + 1; i < next.tilde.size(); ++i) {
    SharpStep s;
    s.t = next.tilde.prefix(i);
    s.point = k.measure(s.t, depth);
    s.required = required;
    s.ok = s.point.rho.certifies_at_least(required);
    steps.push_back(std::move(s));
  }
  node = std::move(next);
}

void record_node(const SharpK& k, const GoodNode& node, std::size_t required, std::size_t depth,
                 std::vector<SharpStep>& steps) {
  SharpStep s;
  s.t = node.tilde;
  s.point = k.measure(s.t, depth);
  s.required = required;
  s.ok = s.point.rho.certifies_at_least(required);
  steps.push_back(std::move(s));
}

// phi(a) from phi(a restricted to (n-1)x(n-1)) for an n x n matrix a.
SharpPath extend_image(const SharpK& k, const SharpPath& prev, const BitMatrix& a, std::size_t depth) {
  std::size_t n = a.size();
  SharpPath out;
  out.gamma = gamma(a);
  GoodNode node = prev.node;
  std::size_t from = prev.gamma;
  while (node.nval < n) {
    if (node.tilde.size() > prev.node.tilde.size()) record_node(k, node, from, depth, out.steps);
    walk_block(k, node, true, from, depth, out.steps);
  }
  while (node.nval > out.gamma) {
    record_node(k, node, out.gamma, depth, out.steps);
    walk_block(k, node, false, out.gamma, depth, out.steps);
  }
  out.node = std::move(node);
  out.point = k.measure(out.node.tilde, depth);
  bool ok = out.point.rho.kind == Rho::Kind::Band && out.point.rho.band == out.gamma;
  for (const auto& s : out.steps) ok = ok && s.ok;
  out.certified = ok;
  return out;
}

}  // namespace

SharpPath sharp_reduction(const SharpK& k, const BitMatrix& a, std::size_t depth) {
  if (!is_square(a)) throw PreconditionError("sharp_reduction needs a square matrix");
  SharpPath p = image_of_empty(k, depth);
  for (std::size_t m = 1; m <= a.size(); ++m) {
    BitMatrix corner(m);
    for (std::size_t i = 0; i < m; ++i) corner[i].assign(a[i].begin(), a[i].begin() + static_cast<long>(m));
    p = extend_image(k, p, corner, depth);
  }
  return p;
}

std::vector<TrajectoryRow> sharp_trajectory(const SharpK& k, const MatrixCode& z, std::size_t n_max,
                                            std::size_t depth) {
  if (n_max < 1) throw PreconditionError("sharp_trajectory needs n_max >= 1");
  std::vector<TrajectoryRow> out;
  SharpPath p = image_of_empty(k, depth);
  out.push_back({0, p});
  for (std::size_t n = 1; n < n_max; ++n) {
    p = extend_image(k, p, z.restrict(n), depth);
    out.push_back({n, p});
  }
  return out;
}

}  // namespace dlab
