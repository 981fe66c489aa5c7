#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kerncalc/bridge.hpp"
#include "kerncalc/hilbert.hpp"
#include "kerncalc/topology.hpp"

namespace kerncalc::testing {

/// Seeded random source for hand-rolled property generators.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  /// Log-uniform on [lo, hi], so small and large values both show up.
  double spread(double lo, double hi);

  Kernel kernel(std::size_t n, double lo, double hi);
  /// Nonnegative kernel with a fraction of exact zeros.
  Kernel sparse_kernel(std::size_t n, double hi, double zero_fraction);
  Kernel symmetric_zero_diagonal(std::size_t n, double lo, double hi);
  /// hat of a random symmetric zero-diagonal kernel, retried until (e) holds.
  Kernel metric(std::size_t n);
  /// A metric dilated entrywise by factors in [lo, hi], symmetrically.
  Kernel comparable(const Kernel& s, double lo, double hi);
  MeasuredSpace measure(const PointSet& points);
  RealFunction function(const PointSet& points, double lo, double hi);
  Permutation permutation(std::size_t n);

  /// f ⊕ g from norm functions of random metrics, plus nonnegative multiples
  /// of restricted metrics on X ⊔ Y and a constant (all preserve the bridge cone).
  Bridge bridge(std::size_t nx, std::size_t ny);

 private:
  std::mt19937_64 eng_;
};

PointSet labelled(std::size_t n, const char* prefix);
Kernel from_rows(const std::vector<std::vector<double>>& rows);

// Independent oracles. Straight loops over the definitions, no shared code
// with the library beyond the value types.

/// Cheapest walk with 1..max_edges edges, by exhaustive enumeration.
Matrix brute_hat(const Matrix& k, std::size_t max_edges);
Matrix brute_s_hat(const Matrix& k, const Matrix& s);

struct Conditions {
  bool triangle, nonnegative, zero_diagonal, weak_separation, separation, symmetry;
};
Conditions brute_conditions(const Matrix& k, double tol);

double brute_minimal_q(const Matrix& k, double tol);
bool brute_right_dominated(const Matrix& k, const Matrix& s, double tol);
bool brute_left_dominated(const Matrix& k, const Matrix& s, double tol);

Matrix brute_star(const Matrix& k, const Matrix& phi, const Vector& mu);
Matrix brute_rho(const Matrix& k, const Vector& mu);
double brute_e_measure(const Matrix& d, std::size_t x, std::size_t y, double eps, const Vector& mu);
bool brute_bridge_ok(const Matrix& f, double tol);

/// Topology generated by a family of sets: finite intersections, then unions.
std::vector<PointMask> brute_topology(std::size_t n, const std::vector<PointMask>& subbasis);
std::vector<PointMask> brute_subbasis(const Matrix& k, const std::vector<double>& eps_grid);

double max_abs(const Matrix& m);

}  // namespace kerncalc::testing
