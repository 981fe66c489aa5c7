#pragma once

#include <optional>

#include "kerncalc/kernel.hpp"

namespace kerncalc {

/// Smallest q with k(x,z) <= q [k(x,y) + k(y,z)] for every triple. Triples
/// whose numerator is <= tol are skipped; a numerator > tol over a
/// denominator <= tol makes the result +inf. A kernel with no constraining
/// triple (all entries <= tol) yields 0. Throws NegativeEntry.
double minimal_q(const Kernel& k, double tol = kDefaultTol);

/// Like minimal_q, also returning the maximising triple (x, y, z).
struct MinimalQ {
  double q = 0.0;
  std::optional<Witness> argmax;
};
MinimalQ minimal_q_with_witness(const Kernel& k, double tol = kDefaultTol);

/// The two reverse-triangle bounds at a given q:
///   first:  |k(x,z) - k(y,z)| <= 2q [k(x,y) ∨ k(y,x)]
///   second: |k(x,z) - k(x,y)| <= 2q [k(z,y) ∨ k(y,z)]
struct UniformCheck {
  bool ok_first = true;
  bool ok_second = true;
  std::optional<Witness> witness_first;
  std::optional<Witness> witness_second;
};

/// Throws ParameterOutOfRange when q < 1/2, NegativeEntry on negative input.
UniformCheck uniform_check(const Kernel& k, double q, double tol = kDefaultTol);

/// Both bounds at a single triple (x, y, z), without the tolerance.
struct TripleBounds {
  bool first = true;
  bool second = true;
};
TripleBounds reverse_bounds_at(const Kernel& k, double q, std::size_t x, std::size_t y, std::size_t z);

/// A kernel is a uniform q-almost distance iff minimal_q <= q + tol and both bounds hold.
bool is_uniform_almost_distance(const Kernel& k, double q, double tol = kDefaultTol);

struct AlmostDistanceReport {
  double minimal_q = 0.0;  // may be +inf
  std::optional<Witness> minimal_q_witness;
  /// Least q >= 1/2 at which k is a uniform q-almost distance, if any.
  std::optional<double> uniform_ok_at;
  /// Both reverse-triangle bounds evaluated at max(minimal_q, 1/2).
  UniformCheck at_minimal_q;
  /// k ⊴_R (2q-1)k and k ⊴_L (2q-1)k at q = minimal_q, when 1/2 < q < inf.
  std::optional<bool> right_dominated_scaled;
  std::optional<bool> left_dominated_scaled;
};

AlmostDistanceReport almost_distance_report(const Kernel& k, double tol = kDefaultTol);

/// Least q in [lo, inf) passing uniform_check, by bracketing and bisection to
/// 1e-9 (both bounds are monotone in q). nullopt when no finite q works.
std::optional<double> least_uniform_q(const Kernel& k, double lo, double tol = kDefaultTol);

/// Bounds for a kernel squeezed between dilations of a distance s:
/// ell s <= k <= L s, with ell/L the extreme ratios k/s over pairs s > tol.
struct BilipAlmostBounds {
  double ell = 0.0;
  double L = 0.0;
  double q_bound_1 = 0.0;             // L / ell; k is an (L/ell)-almost distance
  std::optional<double> q_bound_2;    // (1 - ell) / (1 - L) when L < 1
  double minimal_q_kernel = 0.0;      // minimal_q(k)
  std::optional<double> minimal_q_gap;  // minimal_q(s - k) when L < 1
  bool bound_1_holds = false;
  std::optional<bool> bound_2_holds;
};

/// Throws PreconditionFailed when s is not a distance and
/// IncomparableSupports when k > tol somewhere s <= tol.
BilipAlmostBounds bilip_almost_bounds(const Kernel& k, const Kernel& s, double tol = kDefaultTol);

}  // namespace kerncalc
