#include "kerncalc/separation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kerncalc/almost.hpp"
#include "kerncalc/classify.hpp"

namespace kerncalc {

namespace {

void require_metric(const Kernel& d, double tol, std::string_view what) {
  const auto cls = classify(d, tol);
  if (cls.taxonomy.metric) return;
  for (auto c : kAllConditions)
    if (!cls.holds(c)) throw Error(ErrorCode::PreconditionFailed, std::string(what) + " needs a metric", cls.witness(c));
}

double measure_of(const std::vector<std::size_t>& set, const MeasuredSpace& m) {
  double total = 0.0;
  for (auto z : set) total += m.weight(z);
  return total;
}

}  // namespace

std::vector<std::size_t> e_set_unchecked(const Kernel& d, std::size_t x, std::size_t y, double eps) {
  std::vector<std::size_t> out;
  // Geodesic points sit exactly on the threshold at eps = 1; the slack keeps
  // them in regardless of how the subtraction rounds.
  const double threshold = eps * d(x, y) * (1.0 - kTieSlack);
  for (std::size_t z = 0; z < d.size(); ++z)
    if (std::abs(d(x, z) - d(y, z)) >= threshold) out.push_back(z);
  return out;
}

std::vector<std::size_t> e_set(const Kernel& d, std::string_view x_label, std::string_view y_label, double eps,
                               double tol) {
  const std::size_t x = d.points().index_of(x_label);
  const std::size_t y = d.points().index_of(y_label);
  if (x == y) throw Error(ErrorCode::PreconditionFailed, "E-sets need two distinct points", Witness{{x, y}, 0.0});
  if (!(eps > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "epsilon must be positive");
  require_metric(d, tol, "e_set");
  return e_set_unchecked(d, x, y, eps);
}

std::vector<double> default_separation_grid() {
  constexpr int count = 20;
  const double lo = std::log(0.05), hi = std::log(1.0);
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) grid[i] = std::exp(lo + (hi - lo) * i / (count - 1));
  grid.back() = 1.0;
  return grid;
}

SeparationReport separation_profile(const Kernel& d, const MeasuredSpace& m, std::vector<double> eps_grid,
                                    double tol) {
  require_same_points(d.points(), m.points(), "separation_profile");
  require_metric(d, tol, "separation_profile");
  const std::size_t n = d.size();
  if (n < 2) throw Error(ErrorCode::PreconditionFailed, "separation needs at least two points");
  for (double e : eps_grid)
    if (!(e > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "epsilon grid values must be positive");
  std::sort(eps_grid.begin(), eps_grid.end());
  eps_grid.erase(std::unique(eps_grid.begin(), eps_grid.end()), eps_grid.end());

  SeparationReport r;
  r.eps_grid = eps_grid;
  for (double eps : eps_grid) {
    double c = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) c = std::min(c, measure_of(e_set_unchecked(d, x, y, eps), m));
    r.c_profile.push_back(c);
  }

  const Kernel rho = canonical_embedding(d, m).second;
  r.ell = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const double ratio = rho(x, y) / d(x, y);
      r.ell = std::min(r.ell, ratio);
      r.L = std::max(r.L, ratio);
    }

  double bound = 0.0;
  for (std::size_t i = 0; i < eps_grid.size(); ++i) bound = std::max(bound, eps_grid[i] * std::sqrt(r.c_profile[i]));
  r.derived_bound_ok = r.ell >= bound - tol;
  r.degenerate = r.ell <= tol;
  return r;
}

BilipConstants bilip_constants(const Kernel& k, const Kernel& s, double tol) {
  require_same_points(k.points(), s.points(), "bilip_constants");
  require_nonnegative(k, "bilip_constants");
  require_nonnegative(s, "bilip_constants");
  const std::size_t n = k.size();
  BilipConstants b;
  b.ell = std::numeric_limits<double>::infinity();
  double min_log = std::numeric_limits<double>::infinity();
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const bool ks = k(x, y) > tol, ss = s(x, y) > tol;
      if (ks != ss)
        throw Error(ErrorCode::IncomparableSupports, "kernels vanish on different pairs",
                    Witness{{x, y}, std::abs(k(x, y) - s(x, y))});
      if (!ss) continue;
      const double ratio = k(x, y) / s(x, y);
      b.ell = std::min(b.ell, ratio);
      b.L = std::max(b.L, ratio);
      const double lr = std::log(k(x, y)) - std::log(s(x, y));
      min_log = std::min(min_log, lr);
      max_log = std::max(max_log, lr);
    }
  if (!(b.L > 0.0)) throw Error(ErrorCode::IncomparableSupports, "no pair where both kernels are positive");
  b.u = max_log - min_log;
  return b;
}

IvtCheck ivt_check(const Kernel& k, const Kernel& sigma_map, const MeasuredSpace& m, double tol, double p) {
  require_same_points(k.points(), sigma_map.points(), "ivt_check");
  if (!(p >= 1.0)) throw Error(ErrorCode::ParameterOutOfRange, "p must be at least 1");
  const auto cls = classify(k, tol);
  if (!cls.taxonomy.weak_metric) throw Error(ErrorCode::PreconditionFailed, "ivt_check needs a weak metric");

  const Kernel rho = canonical_embedding(sigma_map, m).second;
  const std::size_t n = k.size();
  IvtCheck r;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (!(rho(x, y) > 0.0))
        throw Error(ErrorCode::NotInjective, "canonical map identifies two points", Witness{{x, y}, 0.0});
      r.lip_inverse = std::max(r.lip_inverse, std::max(k(x, y), k(y, x)) / rho(x, y));
    }

  auto combine = [p](double a, double b) { return p == 1.0 ? a + b : std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          const double denom = combine(rho(x, x2), rho(y, y2));
          if (denom == 0.0) continue;  // (x,y) = (x2,y2) once ι is injective
          r.lip_of_kappa = std::max(r.lip_of_kappa, std::abs(k(x, y) - k(x2, y2)) / denom);
        }
  return r;
}

PerturbationReport perturb_separation(const Kernel& d, const Kernel& tau, const MeasuredSpace& m, double eps,
                                      double tol) {
  require_same_points(d.points(), tau.points(), "perturb_separation");
  require_same_points(d.points(), m.points(), "perturb_separation");
  if (!(eps > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "epsilon must be positive");

  PerturbationReport r;
  r.eps = eps;
  r.d_is_metric = classify(d, tol).taxonomy.metric;
  r.tau_is_metric = classify(tau, tol).taxonomy.metric;
  if (!r.d_is_metric || !r.tau_is_metric) return r;

  const auto bl = bilip_constants(tau, d, tol);
  r.ell = bl.ell;
  r.L = bl.L;
  const Kernel delta(d.points(), (r.L * d.values() - tau.values()).cwiseMax(0.0));
  r.q = std::max(minimal_q(delta, tol), 0.5);
  if (std::isfinite(r.q)) {
    const auto u = uniform_check(delta, r.q, tol);
    r.delta_uniform = u.ok_first && u.ok_second;
    r.ratio_condition = r.ell / r.L > 1.0 - eps / r.q;
  }
  r.preconditions_hold = r.delta_uniform && r.ratio_condition;
  if (!r.preconditions_hold) return r;

  const double shrink = 1.0 - r.ell / r.L;
  r.eps_shifted = eps - r.q * shrink;
  r.eps_conservative = eps - 2.0 * r.q * shrink;

  const std::size_t n = d.size();
  auto contained = [&](double eps_tau, std::optional<Witness>* witness) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        const auto target = e_set_unchecked(tau, x, y, eps_tau);
        for (auto z : e_set_unchecked(d, x, y, eps))
          if (!std::binary_search(target.begin(), target.end(), z)) {
            if (witness) *witness = Witness{{x, y, z}, 0.0};
            return false;
          }
      }
    return true;
  };
  r.containment = contained(r.eps_shifted, &r.containment_witness);
  r.containment_conservative = contained(r.eps_conservative, nullptr);

  double c = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) c = std::min(c, measure_of(e_set_unchecked(tau, x, y, r.eps_shifted), m));
  r.c_shifted = c;
  return r;
}

}  // namespace kerncalc
