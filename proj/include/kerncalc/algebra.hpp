#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "kerncalc/kernel.hpp"

namespace kerncalc {

Kernel transpose(const Kernel& k);

namespace combine_mode {
struct Min {};
struct Max {};
struct Sum {};
/// t*k + (1-t)*s, 0 <= t <= 1.
struct Convex {
  double t;
};
/// (k^p + s^p)^(1/p), p >= 1, nonnegative operands.
struct PNorm {
  double p;
};
}  // namespace combine_mode

using CombineMode = std::variant<combine_mode::Min, combine_mode::Max, combine_mode::Sum, combine_mode::Convex,
                                 combine_mode::PNorm>;

/// Entrywise combination of two kernels over the same points.
Kernel combine(const Kernel& k, const Kernel& s, const CombineMode& mode);

/// k ∧ ᵗk, k ∨ ᵗk and friends.
inline Kernel symmetrize(const Kernel& k, const CombineMode& mode) { return combine(k, transpose(k), mode); }

Kernel scale(const Kernel& k, double factor);
Kernel add(const Kernel& a, const Kernel& b);
Kernel subtract(const Kernel& a, const Kernel& b);
/// Entrywise k^exponent for a nonnegative kernel.
Kernel power(const Kernel& k, double exponent);
/// Same off-diagonal values, zero diagonal.
Kernel off_diagonal(const Kernel& k);

/// a <= b + tol entrywise.
bool entrywise_leq(const Kernel& a, const Kernel& b, double tol = 0.0);
double max_abs_difference(const Kernel& a, const Kernel& b);

/// Z k = k - Λk and Λk(x,y) = (k(x,x) + k(y,y)) / 2.
struct DiagonalSplit {
  Kernel zero_diagonal;  // Z k
  Kernel diagonal_part;  // Λ k
};
DiagonalSplit zero_diag_projection(const Kernel& k);

/// Indices x with |k(x,x)| <= tol.
std::vector<std::size_t> zero_set(const Kernel& k, double tol = kDefaultTol);

struct Quotient {
  /// Kernel over one point per class; each class is labelled by its lowest-index member.
  Kernel kernel;
  /// class_of[x] = index of the class of point x in `kernel`.
  std::vector<std::size_t> class_of;
  /// Members of each class, ascending.
  std::vector<std::vector<std::size_t>> classes;
};

/// Collapses points with k(x,y) <= tol and k(y,x) <= tol. Requires a weak
/// metric; cross values within a class pair must agree to 2*tol.
Quotient quotient(const Kernel& k, double tol = kDefaultTol);

}  // namespace kerncalc
