#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kerncalc/kernel.hpp"

namespace kerncalc {

/// Subsets of a small point set as bitmasks: bit i set <=> point i is a member.
using PointMask = std::uint32_t;

inline constexpr std::size_t kDefaultTopologyCap = 12;
inline constexpr std::size_t kHardTopologyCap = 20;

/// Radii that realise every distinct set U^R[eps,x](y) and U^L[eps,x](y):
/// midpoints between consecutive distinct gaps |k(x,z) - k(x,y)| (and the
/// column analogue), plus one radius past the largest gap.
std::vector<double> default_epsilon_grid(const Kernel& k);

/// All sets U^R[eps,x](y) = {z : |k(x,z) - k(x,y)| < eps} and
/// U^L[eps,x](y) = {z : |k(z,x) - k(y,x)| < eps}, deduplicated, ascending.
std::vector<PointMask> kappa_subbasis(const Kernel& k, const std::vector<double>& eps_grid);

struct KappaTopology {
  std::size_t n = 0;
  std::vector<double> eps_grid;
  std::vector<PointMask> subbasis;
  /// Every open set, ascending by mask value; contains 0 and the full set.
  std::vector<PointMask> open_sets;
};

/// The topology generated by the subbasis above. Throws TooManyPoints when
/// the kernel has more than `max_n` points.
KappaTopology kappa_topology(const Kernel& k, std::optional<std::vector<double>> eps_grid = std::nullopt,
                             std::size_t max_n = kDefaultTopologyCap);

}  // namespace kerncalc
