#include "cosdyn/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cosdyn {

std::vector<Atom> normalize(std::vector<Atom> atoms, NormalizeOptions opts) {
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.position < b.position; });

  std::vector<Atom> out;
  out.reserve(atoms.size());
  // Clusters are anchored at their first (smallest) position so merging is
  // not transitive across long chains of near neighbours.
  double anchor = 0.0;
  for (const Atom& a : atoms) {
    if (!out.empty()) {
      const double gap = a.position - anchor;
      const double scale = std::max(1.0, std::abs(anchor));
      if (gap == 0.0 || gap <= opts.merge_tolerance * scale) {
        out.back().mass += a.mass;
        continue;
      }
    }
    out.push_back(a);
    anchor = a.position;
  }
  std::erase_if(out, [](const Atom& a) { return a.mass == 0.0; });
  return out;
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, NormalizeOptions opts)
    : atoms_(normalize(std::move(atoms), opts)) {}

AtomicMeasure normalize(const AtomicMeasure& m, NormalizeOptions opts) {
  return AtomicMeasure(std::vector<Atom>(m.atoms().begin(), m.atoms().end()), opts);
}

double total_variation(const AtomicMeasure& m) noexcept {
  double sum = 0.0;
  for (const Atom& a : m.atoms()) sum += std::abs(a.mass);
  return sum;
}

AtomicMeasure scale(double factor, const AtomicMeasure& m) {
  std::vector<Atom> atoms(m.atoms().begin(), m.atoms().end());
  for (Atom& a : atoms) a.mass *= factor;
  return AtomicMeasure(std::move(atoms));
}

AtomicMeasure linear_combine(double a, const AtomicMeasure& m1, double b,
                             const AtomicMeasure& m2, NormalizeOptions opts) {
  std::vector<Atom> atoms;
  atoms.reserve(m1.size() + m2.size());
  for (const Atom& x : m1.atoms()) atoms.push_back({x.position, a * x.mass});
  for (const Atom& x : m2.atoms()) atoms.push_back({x.position, b * x.mass});
  return AtomicMeasure(std::move(atoms), opts);
}

double tv_distance(const AtomicMeasure& m1, const AtomicMeasure& m2,
                   NormalizeOptions opts) {
  return total_variation(linear_combine(1.0, m1, -1.0, m2, opts));
}

CompactWindow::CompactWindow(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw std::invalid_argument("CompactWindow requires finite lo <= hi");
  }
}

bool supported_in(const AtomicMeasure& m, const CompactWindow& window) noexcept {
  return std::all_of(m.atoms().begin(), m.atoms().end(),
                     [&](const Atom& a) { return window.contains(a.position); });
}

}  // namespace cosdyn
