#include "kerncalc/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "kerncalc/algebra.hpp"
#include "kerncalc/classify.hpp"
#include "kerncalc/lipschitz.hpp"

namespace kerncalc {

MeasuredSpace::MeasuredSpace(PointSet points, Vector weights) : points_(std::move(points)), weights_(std::move(weights)) {
  if (weights_.size() != static_cast<Eigen::Index>(points_.size()))
    throw Error(ErrorCode::InvalidMeasure, "measure length does not match point count");
  for (Eigen::Index i = 0; i < weights_.size(); ++i)
    if (!(weights_(i) > 0.0) || !std::isfinite(weights_(i)))
      throw Error(ErrorCode::InvalidMeasure, "measure weights must be strictly positive",
                  Witness{{static_cast<std::size_t>(i)}, weights_(i)});
  if (std::abs(weights_.sum() - 1.0) > 1e-12) throw Error(ErrorCode::InvalidMeasure, "measure weights must sum to 1");
}

MeasuredSpace MeasuredSpace::uniform(PointSet points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  return MeasuredSpace(std::move(points), Vector::Constant(n, 1.0 / static_cast<double>(n)));
}

double hs_norm(const Kernel& k, const MeasuredSpace& m) {
  require_same_points(k.points(), m.points(), "hs_norm");
  const Vector& w = m.weights();
  return std::sqrt((w.transpose() * k.values().cwiseAbs2() * w)(0, 0));
}

Kernel star(const Kernel& k, const Kernel& phi, const MeasuredSpace& m) {
  require_same_points(k.points(), phi.points(), "star");
  require_same_points(k.points(), m.points(), "star");
  return Kernel(k.points(), k.values() * m.weights().asDiagonal() * phi.values());
}

RealFunction act(const Kernel& k, const RealFunction& f, const MeasuredSpace& m) {
  require_same_points(k.points(), f.points(), "act");
  require_same_points(k.points(), m.points(), "act");
  return RealFunction(k.points(), k.values() * m.weights().cwiseProduct(f.values()));
}

Matrix operator_matrix(const Kernel& k, const MeasuredSpace& m) {
  require_same_points(k.points(), m.points(), "operator_matrix");
  return k.values() * m.weights().asDiagonal();
}

double l2_norm(const RealFunction& f, const MeasuredSpace& m) {
  require_same_points(f.points(), m.points(), "l2_norm");
  return std::sqrt(f.values().cwiseAbs2().dot(m.weights()));
}

RealFunction canonical_function(const Kernel& k, std::size_t x) {
  return RealFunction(k.points(), k.values().row(static_cast<Eigen::Index>(x)).transpose());
}

std::pair<Embedding, Kernel> canonical_embedding(const Kernel& k, const MeasuredSpace& m) {
  require_same_points(k.points(), m.points(), "canonical_embedding");
  Matrix coords = k.values() * m.weights().cwiseSqrt().asDiagonal();
  const Eigen::Index n = coords.rows();
  Matrix rho(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    rho(x, x) = 0.0;
    for (Eigen::Index y = x + 1; y < n; ++y) rho(x, y) = rho(y, x) = (coords.row(x) - coords.row(y)).norm();
  }
  return {Embedding{m, std::move(coords)}, Kernel(k.points(), std::move(rho))};
}

double verify_z_rho(const Kernel& k, const MeasuredSpace& m, double tol) {
  require_nonnegative(k, "verify_z_rho");
  const auto cls = classify(k, tol);
  if (!cls.holds(Condition::Symmetry))
    throw Error(ErrorCode::PreconditionFailed, "verify_z_rho needs a symmetric kernel", cls.witness(Condition::Symmetry));
  const Kernel zkk = zero_diag_projection(star(k, k, m)).zero_diagonal;
  const Kernel rho = canonical_embedding(k, m).second;
  return (zkk.values() + 0.5 * rho.values().cwiseAbs2()).cwiseAbs().maxCoeff();
}

bool j_norm_check(const Kernel& k, const MeasuredSpace& m, const std::vector<RealFunction>& samples, double tol) {
  const auto cls = classify(k, tol);
  if (!cls.taxonomy.weak_metric)
    throw Error(ErrorCode::PreconditionFailed, "J-norm bound needs a distance with zero diagonal");
  const double factor = std::max(1.0, k.max_value());
  for (const auto& f : samples) {
    const double lhs = lip_norm(act(k, f, m), k).norm;
    if (lhs > factor * l2_norm(f, m) + tol) return false;
  }
  return true;
}

RealFunction mean_dist(const Kernel& d, const MeasuredSpace& m, double tol) {
  require_same_points(d.points(), m.points(), "mean_dist");
  const auto cls = classify(d, tol);
  if (!cls.taxonomy.metric) {
    std::optional<Witness> w;
    for (auto c : kAllConditions)
      if (!cls.holds(c)) {
        w = cls.witness(c);
        break;
      }
    throw Error(ErrorCode::PreconditionFailed, "mean distance needs a metric", w);
  }
  return RealFunction(d.points(), d.values() * m.weights());
}

IsometryCheck check_measure_preserving_isometry(const Kernel& d, const MeasuredSpace& m, const Permutation& perm,
                                                double tol) {
  require_same_points(d.points(), m.points(), "check_measure_preserving_isometry");
  const std::size_t n = d.size();
  if (perm.size() != n) throw Error(ErrorCode::NotBijection, "permutation length does not match point count");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || seen[perm[i]]) throw Error(ErrorCode::NotBijection, "map is not a bijection", Witness{{i}, 0.0});
    seen[perm[i]] = true;
  }
  ViolationTracker weights, dist;
  for (std::size_t x = 0; x < n; ++x) {
    const double dw = std::abs(m.weight(perm[x]) - m.weight(x));
    if (dw > tol) weights.offer(dw, {x});
    for (std::size_t y = 0; y < n; ++y) {
      const double dd = std::abs(d(perm[x], perm[y]) - d(x, y));
      if (dd > tol) dist.offer(dd, {x, y});
    }
  }
  if (dist.best()) return {false, dist.best()};
  if (weights.best()) return {false, weights.best()};
  return {true, std::nullopt};
}

std::vector<std::size_t> orbit(std::size_t n, const std::vector<Permutation>& perms, std::size_t start) {
  for (const auto& p : perms)
    if (p.size() != n) throw Error(ErrorCode::NotBijection, "permutation length does not match point count");
  // The orbit under the generated group equals the closure under the
  // generators alone, since each generator has finite order.
  std::vector<bool> in(n, false);
  std::deque<std::size_t> queue{start};
  in.at(start) = true;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& p : perms)
      if (!in[p[x]]) {
        in[p[x]] = true;
        queue.push_back(p[x]);
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

bool orbit_transitive(std::size_t n, const std::vector<Permutation>& perms) { return orbit(n, perms).size() == n; }

}  // namespace kerncalc
