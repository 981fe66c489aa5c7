#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "kerncalc/hilbert.hpp"

namespace kerncalc {

/// Relative slack on the E-set threshold, absorbing rounding at exact ties.
inline constexpr double kTieSlack = 1e-12;

/// E(x,y,eps;d) = {z : |d(x,z) - d(y,z)| >= eps d(x,y)}, the threshold relaxed
/// by kTieSlack. Requires a metric and x != y.
std::vector<std::size_t> e_set(const Kernel& d, std::string_view x, std::string_view y, double eps,
                               double tol = kDefaultTol);

/// Same set by index, without re-checking that d is a metric.
std::vector<std::size_t> e_set_unchecked(const Kernel& d, std::size_t x, std::size_t y, double eps);

/// 20 log-spaced radii in [0.05, 1].
std::vector<double> default_separation_grid();

struct SeparationReport {
  std::vector<double> eps_grid;   // ascending, deduplicated
  std::vector<double> c_profile;  // min over pairs x != y of μ(E(x,y,eps;d))
  double ell = 0.0;               // min over pairs of ρ_d / d
  double L = 0.0;                 // max over pairs of ρ_d / d
  /// ell >= max over the grid of eps √c(eps), up to tol.
  bool derived_bound_ok = false;
  /// ell <= tol: ι_d is not bi-Lipschitz at this scale.
  bool degenerate = false;

  friend bool operator==(const SeparationReport&, const SeparationReport&) = default;
};

SeparationReport separation_profile(const Kernel& d, const MeasuredSpace& m, std::vector<double> eps_grid,
                                    double tol = kDefaultTol);

/// ell s <= k <= L s with extreme ratios k/s over pairs where s > tol, and
/// u = log(L/ell), evaluated as a difference of logs so u(s,k) = u(k,s) exactly.
struct BilipConstants {
  double ell = 0.0;
  double L = 0.0;
  double u = 0.0;
};

/// Throws IncomparableSupports unless s > tol exactly where k > tol.
BilipConstants bilip_constants(const Kernel& k, const Kernel& s, double tol = kDefaultTol);

struct IvtCheck {
  /// Lipschitz constant of k on (X × X, ρ_s ⊕ ρ_s).
  double lip_of_kappa = 0.0;
  /// Lipschitz constant of ι_s⁻¹ : ι_s(X) -> (X, k).
  double lip_inverse = 0.0;
};

/// Both constants for the canonical map of `sigma_map`. The ⊕ on the product
/// is (a^p + b^p)^(1/p); the two constants agree for p = 1 only.
/// Throws PreconditionFailed unless k is a weak metric and NotInjective when
/// ι_s identifies two points.
IvtCheck ivt_check(const Kernel& k, const Kernel& sigma_map, const MeasuredSpace& m, double tol = kDefaultTol,
                   double p = 1.0);

/// Transfer of uniform separation from d to a bi-Lipschitz metric tau, with
/// δ = L d - tau a uniform q-almost distance and ell/L > 1 - eps/q.
struct PerturbationReport {
  bool d_is_metric = false;
  bool tau_is_metric = false;
  double ell = 0.0;  // ell d <= tau
  double L = 0.0;    // tau <= L d
  double q = 0.0;    // max(minimal_q(δ), 1/2)
  bool delta_uniform = false;
  bool ratio_condition = false;  // ell / L > 1 - eps / q
  bool preconditions_hold = false;

  double eps = 0.0;
  /// eps - q (1 - ell/L), the shifted radius for tau.
  double eps_shifted = 0.0;
  std::optional<bool> containment;
  /// (x, y, z) with z in E(x,y,eps;d) but not in E(x,y,eps_shifted;tau).
  std::optional<Witness> containment_witness;
  std::optional<double> c_shifted;

  /// eps - 2q (1 - ell/L): the radius the reverse-triangle bound supports
  /// once the factor 2q in |δ(x,z) - δ(y,z)| <= 2q δ(x,y) is carried through.
  double eps_conservative = 0.0;
  std::optional<bool> containment_conservative;
};

PerturbationReport perturb_separation(const Kernel& d, const Kernel& tau, const MeasuredSpace& m, double eps,
                                      double tol = kDefaultTol);

}  // namespace kerncalc
