#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "kerncalc/kernel.hpp"

namespace kerncalc {

/// F : X × Y -> R with F(x1,y1) - F(x2,y2) <= F(x1,y2) + F(x2,y1) for all
/// quadruples. Only obtainable through validate_bridge().
class Bridge {
 public:
  const PointSet& x_points() const noexcept { return x_points_; }
  const PointSet& y_points() const noexcept { return y_points_; }
  const Matrix& values() const noexcept { return values_; }
  double operator()(std::size_t x, std::size_t y) const {
    return values_(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
  }

 private:
  friend Bridge validate_bridge(Matrix, PointSet, PointSet, double);
  Bridge(PointSet x, PointSet y, Matrix v) : x_points_(std::move(x)), y_points_(std::move(y)), values_(std::move(v)) {}

  PointSet x_points_;
  PointSet y_points_;
  Matrix values_;
};

/// Maximal bridge-inequality violation as (x1, y1, x2, y2), if any exceeds tol.
std::optional<Witness> bridge_violation(const Matrix& values, double tol = kDefaultTol);

/// Throws InvalidInput on shape/finiteness problems, NegativeEntry for an
/// entry below -tol, and BridgeViolation with the maximal quadruple.
Bridge validate_bridge(Matrix values, PointSet x_points, PointSet y_points, double tol = kDefaultTol);

/// k_X(x1,x2) = min_y F(x1,y) + F(x2,y) and k_Y dually.
std::pair<Kernel, Kernel> induced_kernels(const Bridge& f);

enum class LabelPolicy {
  Reject,  // label collisions between X and Y are an error
  Prefix,  // labels become "X:<label>" and "Y:<label>"
};

/// Symmetric distance on X ⊔ Y: [[hat(k_X), F], [ᵗF, hat(k_Y)]], X first.
Kernel glue(const Bridge& f, LabelPolicy labels = LabelPolicy::Reject);

struct NormFunctionOptions {
  /// Reject references that are not pseudometrics (induced bridge kernels are not).
  bool require_pseudometric = true;
  /// Also check f(x) = max_z [d(x,z) - f(z)].
  bool check_sup_identity = false;
};

struct NormFunctionCheck {
  bool holds = true;
  /// Maximal violation of |f(x1) - f(x2)| <= d(x1,x2) <= f(x1) + f(x2), as (x1, x2).
  std::optional<Witness> witness;
  std::optional<bool> sup_identity;
};

NormFunctionCheck check_norm_function(const RealFunction& f, const Kernel& d, double tol = kDefaultTol,
                                      NormFunctionOptions options = {});

/// G(x,y) = f(x) + g(y) with f(x) = F(x0,y0) + F(x,y0) and g(y) = F(x0,y).
/// G dominates F and is itself a bridge.
Bridge flood_pestov_dominating(const Bridge& f, std::string_view x0, std::string_view y0);

/// F(x,y) = f(x) + g(y) from two nonnegative functions.
Bridge separable_bridge(const RealFunction& f, const RealFunction& g, double tol = kDefaultTol);

}  // namespace kerncalc
