#include "cosdyn/borel_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cosdyn {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<HalfOpenInterval> canonical(std::vector<HalfOpenInterval> pieces) {
  std::erase_if(pieces, [](const HalfOpenInterval& p) { return p.empty(); });
  std::sort(pieces.begin(), pieces.end(),
            [](const HalfOpenInterval& a, const HalfOpenInterval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<HalfOpenInterval> out;
  for (const HalfOpenInterval& p : pieces) {
    if (!out.empty() && p.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, p.hi);
    } else {
      out.push_back(p);
    }
  }
  return out;
}

// Complement within (-inf, inf) of a canonical piece list.
std::vector<HalfOpenInterval> complement(const std::vector<HalfOpenInterval>& pieces) {
  std::vector<HalfOpenInterval> out;
  double cursor = -kInf;
  for (const HalfOpenInterval& p : pieces) {
    if (cursor < p.lo) out.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < kInf) out.push_back({cursor, kInf});
  return out;
}

}  // namespace

BorelSet::BorelSet(std::vector<HalfOpenInterval> pieces)
    : pieces_(canonical(std::move(pieces))) {}

BorelSet BorelSet::closed(double lo, double hi) {
  return interval(lo, std::nextafter(hi, kInf));
}

bool BorelSet::contains(double t) const noexcept {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](double x, const HalfOpenInterval& p) { return x < p.lo; });
  if (it == pieces_.begin()) return false;
  return std::prev(it)->contains(t);
}

double BorelSet::last_point(const HalfOpenInterval& piece) noexcept {
  return std::nextafter(piece.hi, -kInf);
}

BorelSet BorelSet::unite(const BorelSet& other) const {
  std::vector<HalfOpenInterval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return BorelSet(std::move(all));
}

BorelSet BorelSet::intersect(const BorelSet& other) const {
  std::vector<HalfOpenInterval> out;
  auto a = pieces_.begin();
  auto b = other.pieces_.begin();
  while (a != pieces_.end() && b != other.pieces_.end()) {
    const double lo = std::max(a->lo, b->lo);
    const double hi = std::min(a->hi, b->hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a->hi < b->hi) {
      ++a;
    } else {
      ++b;
    }
  }
  return BorelSet(std::move(out));
}

BorelSet BorelSet::minus(const BorelSet& other) const {
  return intersect(BorelSet(complement(other.pieces_)));
}

}  // namespace cosdyn
