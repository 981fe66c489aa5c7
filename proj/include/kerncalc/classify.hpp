#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "kerncalc/kernel.hpp"

namespace kerncalc {

/// The six elementary conditions a kernel may satisfy.
enum class Condition : std::size_t {
  Triangle = 0,       // (a) k(x,z) <= k(x,y) + k(y,z)
  Nonnegative = 1,    // (b) 0 <= k(x,y)
  ZeroDiagonal = 2,   // (c) k(x,x) = 0
  WeakSeparation = 3, // (d) k(x,y) = 0 and k(y,x) = 0 imply x = y
  Separation = 4,     // (e) k(x,y) = 0 implies x = y
  Symmetry = 5,       // (f) k(x,y) = k(y,x)
};

inline constexpr std::array<Condition, 6> kAllConditions{
    Condition::Triangle,       Condition::Nonnegative, Condition::ZeroDiagonal,
    Condition::WeakSeparation, Condition::Separation,  Condition::Symmetry};

std::string_view to_string(Condition c);

struct Taxonomy {
  bool distance = false;      // (a),(b)
  bool weak_metric = false;   // (a)-(c)
  bool multimetric = false;   // (a)-(d)
  bool quasi_metric = false;  // (a)-(e)
  bool pseudometric = false;  // (a),(b),(c),(f)
  bool metric = false;        // (a)-(f)

  friend bool operator==(const Taxonomy&, const Taxonomy&) = default;
};

Taxonomy taxonomy_from(const std::array<bool, 6>& conditions);

struct ClassificationReport {
  std::array<bool, 6> conditions{};
  Taxonomy taxonomy;
  /// Indexed like `conditions`; engaged exactly where the condition fails.
  std::array<std::optional<Witness>, 6> witnesses;
  double tol = kDefaultTol;

  bool holds(Condition c) const { return conditions[static_cast<std::size_t>(c)]; }
  const std::optional<Witness>& witness(Condition c) const { return witnesses[static_cast<std::size_t>(c)]; }
  bool symmetric_distance() const { return taxonomy.distance && holds(Condition::Symmetry); }

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Checks (a)-(f) with tolerance `tol`. Witnesses are maximal violators; ties
/// go to the lexicographically lowest index tuple. For (d) and (e) the
/// magnitude is `tol - max|k|` over the offending pair, i.e. how firmly the
/// pair reads as zero.
ClassificationReport classify(const Kernel& k, double tol = kDefaultTol);

/// Maximal triangle-inequality violation (> tol), if any. Tuple is (x, y, z).
std::optional<Witness> triangle_violation(const Kernel& k, double tol = kDefaultTol);

/// Re-evaluates condition `c` on the witness tuple; true when it is violated.
bool witness_reproduces(const Kernel& k, Condition c, const Witness& w, double tol = kDefaultTol);

}  // namespace kerncalc
