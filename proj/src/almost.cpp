#include "kerncalc/almost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kerncalc/algebra.hpp"
#include "kerncalc/classify.hpp"
#include "kerncalc/lattice.hpp"

namespace kerncalc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MinimalQ minimal_q_with_witness(const Kernel& k, double tol) {
  require_nonnegative(k, "minimal_q");
  const std::size_t n = k.size();
  MinimalQ r;
  ViolationTracker t;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      const double num = k(x, z);
      if (num <= tol) continue;
      for (std::size_t y = 0; y < n; ++y) {
        const double den = k(x, y) + k(y, z);
        const double ratio = den <= tol ? kInf : num / den;
        t.offer(ratio, {x, y, z});
      }
    }
  if (t.best()) {
    r.q = t.best()->magnitude;
    r.argmax = t.best();
  }
  return r;
}

double minimal_q(const Kernel& k, double tol) { return minimal_q_with_witness(k, tol).q; }

UniformCheck uniform_check(const Kernel& k, double q, double tol) {
  if (!(q >= 0.5)) throw Error(ErrorCode::ParameterOutOfRange, "uniform_check needs q >= 1/2");
  require_nonnegative(k, "uniform_check");
  const std::size_t n = k.size();
  ViolationTracker first, second;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const double bound_xy = 2.0 * q * std::max(k(x, y), k(y, x));
      for (std::size_t z = 0; z < n; ++z) {
        const double v1 = std::abs(k(x, z) - k(y, z)) - bound_xy;
        if (v1 > tol) first.offer(v1, {x, y, z});
        const double v2 = std::abs(k(x, z) - k(x, y)) - 2.0 * q * std::max(k(z, y), k(y, z));
        if (v2 > tol) second.offer(v2, {x, y, z});
      }
    }
  return {!first.best(), !second.best(), first.best(), second.best()};
}

TripleBounds reverse_bounds_at(const Kernel& k, double q, std::size_t x, std::size_t y, std::size_t z) {
  return {std::abs(k(x, z) - k(y, z)) <= 2.0 * q * std::max(k(x, y), k(y, x)),
          std::abs(k(x, z) - k(x, y)) <= 2.0 * q * std::max(k(z, y), k(y, z))};
}

bool is_uniform_almost_distance(const Kernel& k, double q, double tol) {
  if (minimal_q(k, tol) > q + tol) return false;
  const auto u = uniform_check(k, q, tol);
  return u.ok_first && u.ok_second;
}

std::optional<double> least_uniform_q(const Kernel& k, double lo, double tol) {
  auto passes = [&](double q) {
    const auto u = uniform_check(k, q, tol);
    return u.ok_first && u.ok_second;
  };
  lo = std::max(lo, 0.5);
  if (!std::isfinite(lo)) return std::nullopt;
  if (passes(lo)) return lo;
  double hi = 2.0 * lo;
  int doublings = 0;
  while (!passes(hi)) {
    if (++doublings > 64) return std::nullopt;
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (passes(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

AlmostDistanceReport almost_distance_report(const Kernel& k, double tol) {
  AlmostDistanceReport r;
  const auto mq = minimal_q_with_witness(k, tol);
  r.minimal_q = mq.q;
  r.minimal_q_witness = mq.argmax;
  if (std::isfinite(mq.q)) {
    r.at_minimal_q = uniform_check(k, std::max(mq.q, 0.5), tol);
    r.uniform_ok_at = least_uniform_q(k, mq.q, tol);
    if (mq.q > 0.5) {
      const Kernel scaled = scale(k, 2.0 * mq.q - 1.0);
      r.right_dominated_scaled = dominates_right(k, scaled, tol).holds;
      r.left_dominated_scaled = dominates_left(k, scaled, tol).holds;
    }
  } else {
    r.at_minimal_q.ok_first = r.at_minimal_q.ok_second = false;
  }
  return r;
}

BilipAlmostBounds bilip_almost_bounds(const Kernel& k, const Kernel& s, double tol) {
  require_same_points(k.points(), s.points(), "bilip_almost_bounds");
  require_nonnegative(k, "bilip_almost_bounds");
  const auto cls = classify(s, tol);
  if (!cls.taxonomy.distance)
    throw Error(ErrorCode::PreconditionFailed, "reference kernel is not a distance",
                cls.holds(Condition::Triangle) ? cls.witness(Condition::Nonnegative) : cls.witness(Condition::Triangle));

  const std::size_t n = k.size();
  double ell = kInf, L = 0.0;
  bool any = false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (s(x, y) <= tol) {
        if (k(x, y) > tol)
          throw Error(ErrorCode::IncomparableSupports, "kernel is positive where the reference vanishes",
                      Witness{{x, y}, k(x, y)});
        continue;
      }
      const double ratio = k(x, y) / s(x, y);
      ell = std::min(ell, ratio);
      L = std::max(L, ratio);
      any = true;
    }
  if (!any) throw Error(ErrorCode::IncomparableSupports, "reference kernel vanishes identically");

  BilipAlmostBounds b;
  b.ell = ell;
  b.L = L;
  b.q_bound_1 = ell > 0.0 ? L / ell : kInf;
  b.minimal_q_kernel = minimal_q(k, tol);
  b.bound_1_holds = b.minimal_q_kernel <= b.q_bound_1 + tol;
  if (L < 1.0) {
    b.q_bound_2 = (1.0 - ell) / (1.0 - L);
    // L < 1 keeps s - k >= 0 up to rounding where both sides vanish.
    const Kernel gap(s.points(), (s.values() - k.values()).cwiseMax(0.0));
    b.minimal_q_gap = minimal_q(gap, tol);
    b.bound_2_holds = *b.minimal_q_gap <= *b.q_bound_2 + tol;
  }
  return b;
}

}  // namespace kerncalc
