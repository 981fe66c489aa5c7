#include "kerncalc/classify.hpp"

#include <algorithm>
#include <cmath>

namespace kerncalc {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Triangle: return "triangle";
    case Condition::Nonnegative: return "nonnegative";
    case Condition::ZeroDiagonal: return "zero_diagonal";
    case Condition::WeakSeparation: return "weak_separation";
    case Condition::Separation: return "separation";
    case Condition::Symmetry: return "symmetry";
  }
  return "unknown";
}

Taxonomy taxonomy_from(const std::array<bool, 6>& c) {
  Taxonomy t;
  t.distance = c[0] && c[1];
  t.weak_metric = t.distance && c[2];
  t.multimetric = t.weak_metric && c[3];
  t.quasi_metric = t.multimetric && c[4];
  t.pseudometric = t.weak_metric && c[5];
  t.metric = t.quasi_metric && c[5];
  return t;
}

std::optional<Witness> triangle_violation(const Kernel& k, double tol) {
  const Matrix& m = k.values();
  const Eigen::Index n = m.rows();
  ViolationTracker tracker;
  // Column-major: columns y and z are contiguous, so x runs innermost.
  for (Eigen::Index z = 0; z < n; ++z) {
    const double* col_z = m.col(z).data();
    for (Eigen::Index y = 0; y < n; ++y) {
      const double* col_y = m.col(y).data();
      const double yz = m(y, z);
      for (Eigen::Index x = 0; x < n; ++x) {
        const double v = col_z[x] - col_y[x] - yz;
        if (v > tol) [[unlikely]]
          tracker.offer(v, {static_cast<std::size_t>(x), static_cast<std::size_t>(y), static_cast<std::size_t>(z)});
      }
    }
  }
  return tracker.best();
}

namespace {

double triangle_defect(const Kernel& k, std::size_t x, std::size_t y, std::size_t z) {
  return k(x, z) - k(x, y) - k(y, z);
}

}  // namespace

ClassificationReport classify(const Kernel& k, double tol) {
  const std::size_t n = k.size();
  ClassificationReport r;
  r.tol = tol;

  r.witnesses[0] = triangle_violation(k, tol);

  ViolationTracker neg, diag, weak, strong, sym;
  for (std::size_t x = 0; x < n; ++x) {
    if (std::abs(k(x, x)) > tol) diag.offer(std::abs(k(x, x)), {x});
    for (std::size_t y = 0; y < n; ++y) {
      if (-k(x, y) > tol) neg.offer(-k(x, y), {x, y});
      if (x == y) continue;
      if (std::abs(k(x, y)) <= tol) strong.offer(tol - std::abs(k(x, y)), {x, y});
      if (x < y) {
        const double worst = std::max(std::abs(k(x, y)), std::abs(k(y, x)));
        if (worst <= tol) weak.offer(tol - worst, {x, y});
        const double asym = std::abs(k(x, y) - k(y, x));
        if (asym > tol) sym.offer(asym, {x, y});
      }
    }
  }
  r.witnesses[1] = neg.best();
  r.witnesses[2] = diag.best();
  r.witnesses[3] = weak.best();
  r.witnesses[4] = strong.best();
  r.witnesses[5] = sym.best();
  for (std::size_t i = 0; i < 6; ++i) r.conditions[i] = !r.witnesses[i].has_value();
  r.taxonomy = taxonomy_from(r.conditions);
  return r;
}

bool witness_reproduces(const Kernel& k, Condition c, const Witness& w, double tol) {
  const auto& p = w.points;
  const std::size_t n = k.size();
  for (auto i : p)
    if (i >= n) return false;
  switch (c) {
    case Condition::Triangle:
      return p.size() == 3 && triangle_defect(k, p[0], p[1], p[2]) > tol;
    case Condition::Nonnegative:
      return p.size() == 2 && -k(p[0], p[1]) > tol;
    case Condition::ZeroDiagonal:
      return p.size() == 1 && std::abs(k(p[0], p[0])) > tol;
    case Condition::WeakSeparation:
      return p.size() == 2 && p[0] != p[1] && std::abs(k(p[0], p[1])) <= tol && std::abs(k(p[1], p[0])) <= tol;
    case Condition::Separation:
      return p.size() == 2 && p[0] != p[1] && std::abs(k(p[0], p[1])) <= tol;
    case Condition::Symmetry:
      return p.size() == 2 && std::abs(k(p[0], p[1]) - k(p[1], p[0])) > tol;
  }
  return false;
}

}  // namespace kerncalc
