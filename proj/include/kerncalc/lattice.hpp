#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kerncalc/kernel.hpp"

namespace kerncalc {

/// Largest distance below a nonnegative kernel: hat(k)(x,y) is the cheapest
/// chain x = z0, ..., zn = y with n >= 1 edges. Diagonal entries are genuine
/// self-loop weights, so hat(k)(x,x) can drop below k(x,x) through cycles.
/// Throws NegativeEntry.
Kernel hat(const Kernel& k);

/// Cheapest chain for hat(k)(x,y): among minimisers, fewest edges, then the
/// lexicographically least vertex sequence. Includes both endpoints.
std::vector<std::size_t> hat_chain(const Kernel& k, std::size_t x, std::size_t y, double tol = kDefaultTol);

/// Ŝ(k, s)(x,y) = min( k(x,y), min_z [k(x,z) + P_s(z,y)] ) where P_s(z,y) is
/// the cheapest s-chain from z to y with at least one edge.
Kernel s_hat(const Kernel& k, const Kernel& s);

struct Domination {
  bool holds = true;
  /// Maximal violating triple (x, y, z) when `holds` is false.
  std::optional<Witness> witness;
};

/// k ⊴_R s: k(x,z) <= k(x,y) + s(y,z) + tol for all triples.
Domination dominates_right(const Kernel& k, const Kernel& s, double tol = kDefaultTol);
/// k ⊴_L s: k(x,z) <= s(x,y) + k(y,z) + tol for all triples.
Domination dominates_left(const Kernel& k, const Kernel& s, double tol = kDefaultTol);

}  // namespace kerncalc
