#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kerncalc/kernel.hpp"

namespace kerncalc {

/// A finite probability space with strictly positive weights summing to 1.
class MeasuredSpace {
 public:
  /// Throws InvalidMeasure on non-positive weights or a total off 1 by > 1e-12.
  MeasuredSpace(PointSet points, Vector weights);
  static MeasuredSpace uniform(PointSet points);

  std::size_t size() const noexcept { return points_.size(); }
  const PointSet& points() const noexcept { return points_; }
  const Vector& weights() const noexcept { return weights_; }
  double weight(std::size_t x) const { return weights_(static_cast<Eigen::Index>(x)); }

 private:
  PointSet points_;
  Vector weights_;
};

/// ι_k: row x holds k(x,z) √μ(z), so plain Euclidean geometry on rows is L²(μ).
struct Embedding {
  MeasuredSpace space;
  Matrix coords;
};

/// sqrt(Σ k(x,y)² μ(x) μ(y)).
double hs_norm(const Kernel& k, const MeasuredSpace& m);

/// (k ∗ φ)(x,y) = Σ_z k(x,z) φ(z,y) μ(z).
Kernel star(const Kernel& k, const Kernel& phi, const MeasuredSpace& m);

/// (k · f)(x) = Σ_z k(x,z) f(z) μ(z).
RealFunction act(const Kernel& k, const RealFunction& f, const MeasuredSpace& m);

/// Matrix of T_k acting on function values: T(x,z) = k(x,z) μ(z).
Matrix operator_matrix(const Kernel& k, const MeasuredSpace& m);

/// ‖f‖₂ in L²(μ).
double l2_norm(const RealFunction& f, const MeasuredSpace& m);

/// The canonical map x ↦ k(x,·) as a function (unweighted values).
RealFunction canonical_function(const Kernel& k, std::size_t x);

/// ι_k and its pullback pseudometric ρ_k(x,y) = ‖ι_k(x) - ι_k(y)‖₂.
std::pair<Embedding, Kernel> canonical_embedding(const Kernel& k, const MeasuredSpace& m);

/// max |Z(k∗k)(x,y) + ρ_k(x,y)²/2|. Requires symmetric (to tol), nonnegative k.
double verify_z_rho(const Kernel& k, const MeasuredSpace& m, double tol = kDefaultTol);

/// For every sample f: ‖k·f‖_Lip ≤ (1 ∨ max k) ‖f‖₂ + tol. Requires a
/// distance with zero diagonal whose Lipschitz denominators never vanish.
bool j_norm_check(const Kernel& k, const MeasuredSpace& m, const std::vector<RealFunction>& samples,
                  double tol = kDefaultTol);

/// φ(x) = Σ_z d(x,z) μ(z). Requires a metric.
RealFunction mean_dist(const Kernel& d, const MeasuredSpace& m, double tol = kDefaultTol);

/// perm[i] is the image of point i.
using Permutation = std::vector<std::size_t>;

struct IsometryCheck {
  bool holds = true;
  /// (x, y) for a distance mismatch, (x) for a weight mismatch.
  std::optional<Witness> witness;
};

/// Throws NotBijection when perm is not a permutation of the points.
IsometryCheck check_measure_preserving_isometry(const Kernel& d, const MeasuredSpace& m, const Permutation& perm,
                                                double tol = kDefaultTol);

/// Orbit of `start` under the group generated by `perms` (ascending).
std::vector<std::size_t> orbit(std::size_t n, const std::vector<Permutation>& perms, std::size_t start = 0);
bool orbit_transitive(std::size_t n, const std::vector<Permutation>& perms);

}  // namespace kerncalc
