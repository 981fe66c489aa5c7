#include "kerncalc/topology.hpp"

#include <algorithm>
#include <cmath>

namespace kerncalc {

std::vector<double> default_epsilon_grid(const Kernel& k) {
  const std::size_t n = k.size();
  std::vector<double> gaps{0.0};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        gaps.push_back(std::abs(k(x, z) - k(x, y)));
        gaps.push_back(std::abs(k(z, x) - k(y, x)));
      }
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());

  std::vector<double> grid;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) grid.push_back(0.5 * (gaps[i] + gaps[i + 1]));
  grid.push_back(gaps.back() + 1.0);
  return grid;
}

std::vector<PointMask> kappa_subbasis(const Kernel& k, const std::vector<double>& eps_grid) {
  const std::size_t n = k.size();
  std::vector<PointMask> sets;
  for (double eps : eps_grid) {
    if (!(eps > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "epsilon grid values must be positive");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        PointMask right = 0, left = 0;
        for (std::size_t z = 0; z < n; ++z) {
          if (std::abs(k(x, z) - k(x, y)) < eps) right |= PointMask{1} << z;
          if (std::abs(k(z, x) - k(y, x)) < eps) left |= PointMask{1} << z;
        }
        sets.push_back(right);
        sets.push_back(left);
      }
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

KappaTopology kappa_topology(const Kernel& k, std::optional<std::vector<double>> eps_grid, std::size_t max_n) {
  const std::size_t n = k.size();
  if (n > std::min(max_n, kHardTopologyCap))
    throw Error(ErrorCode::TooManyPoints,
                "topology enumeration is capped at " + std::to_string(std::min(max_n, kHardTopologyCap)) + " points");

  KappaTopology t;
  t.n = n;
  t.eps_grid = eps_grid ? std::move(*eps_grid) : default_epsilon_grid(k);
  t.subbasis = kappa_subbasis(k, t.eps_grid);

  const PointMask full = n == 32 ? ~PointMask{0} : (PointMask{1} << n) - 1;

  // On a finite set the generated topology is determined by the minimal
  // neighbourhood of each point: the intersection of the subbasis sets
  // containing it. Open sets are exactly the unions of those.
  std::vector<PointMask> minimal(n, full);
  for (PointMask s : t.subbasis)
    for (std::size_t x = 0; x < n; ++x)
      if (s & (PointMask{1} << x)) minimal[x] &= s;

  for (PointMask u = 0;; ++u) {
    bool open = true;
    for (std::size_t x = 0; x < n && open; ++x)
      if ((u & (PointMask{1} << x)) && (minimal[x] & ~u)) open = false;
    if (open) t.open_sets.push_back(u);
    if (u == full) break;
  }
  return t;
}

}  // namespace kerncalc
