#include "densitylab/realline/interval.hpp"

#include <algorithm>
#include <set>

#include "densitylab/core/errors.hpp"

namespace dlab {

bool Interval::contains(const Rational& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

std::string Interval::str() const {
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

namespace {

// a starts before b: smaller lo, or same lo with a closed and b open.
bool starts_before(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.lo_closed && !b.lo_closed;
}

Interval meet(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const Interval& i) { return i.empty(); }), parts.end());
  std::sort(parts.begin(), parts.end(), starts_before);
  for (Interval& p : parts) {
    if (!parts_.empty()) {
      Interval& cur = parts_.back();
      bool joins = p.lo < cur.hi || (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
      if (joins) {
        if (p.hi > cur.hi) {
          cur.hi = p.hi;
          cur.hi_closed = p.hi_closed;
        } else if (p.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    parts_.push_back(std::move(p));
  }
}

bool IntervalSet::contains(const Rational& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < o.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = o.parts_[j];
    Interval m = meet(a, b);
    if (!m.empty()) out.push_back(m);
    // Advance whichever ends first.
    if (a.hi < b.hi || (a.hi == b.hi && !a.hi_closed))
      ++i;
    else
      ++j;
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::intersect(const Interval& iv) const { return intersect(IntervalSet::of(iv)); }

IntervalSet IntervalSet::complement_within(const Rational& lo, const Rational& hi) const {
  if (hi < lo) throw PreconditionError("complement_within needs lo <= hi");
  IntervalSet clipped = intersect(Interval::closed(lo, hi));
  std::vector<Interval> gaps;
  Rational cursor = lo;
  bool cursor_closed = true;
  for (const Interval& p : clipped.parts_) {
    gaps.push_back({cursor, p.lo, cursor_closed, !p.lo_closed});
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  gaps.push_back({cursor, hi, cursor_closed, true});
  return IntervalSet(std::move(gaps));
}

std::string IntervalSet::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " u ";
    out += parts_[i].str();
  }
  return out;
}

Rational lebesgue(const IntervalSet& a) {
  Rational sum(0);
  for (const Interval& p : a.parts()) sum += p.length();
  return sum;
}

Rational window_ratio(const IntervalSet& a, const Rational& x, const Rational& eps) {
  if (eps.sign() <= 0) throw PreconditionError("window radius must be positive, got " + eps.str());
  return lebesgue(a.intersect(Interval::open(x - eps, x + eps))) / (Rational(2) * eps);
}

Rational one_sided_ratio(const IntervalSet& a, const Rational& x, const Rational& eps, Side side) {
  if (eps.sign() <= 0) throw PreconditionError("window radius must be positive, got " + eps.str());
  Interval w = side == Side::Right ? Interval::open(x, x + eps) : Interval::open(x - eps, x);
  return lebesgue(a.intersect(w)) / eps;
}

std::vector<EndpointDensity> endpoint_density_check(const IntervalSet& a) {
  std::set<Rational> points;
  for (const Interval& p : a.parts()) {
    points.insert(p.lo);
    points.insert(p.hi);
  }
  std::vector<EndpointDensity> out;
  for (const Rational& x : points) {
    bool left = false, right = false;
    for (const Interval& p : a.parts()) {
      if (p.lo < x && x <= p.hi) left = true;
      if (p.lo <= x && x < p.hi) right = true;
    }
    out.push_back({x, Rational((left ? 1 : 0) + (right ? 1 : 0), 2)});
  }
  return out;
}

}  // namespace dlab
