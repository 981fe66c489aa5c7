#include "kerncalc/lattice.hpp"

#include <algorithm>
#include <limits>

namespace kerncalc {

namespace {

/// Floyd–Warshall on the complete digraph weighted by `m`, starting from the
/// one-edge chains (the diagonal keeps its self-loop weight, never 0).
void relax_all_pairs(Matrix& m) {
  const Eigen::Index n = m.rows();
  for (Eigen::Index via = 0; via < n; ++via) {
    for (Eigen::Index y = 0; y < n; ++y) {
      const double via_y = m(via, y);
      for (Eigen::Index x = 0; x < n; ++x) {
        const double cand = m(x, via) + via_y;
        if (cand < m(x, y)) m(x, y) = cand;
      }
    }
  }
}

}  // namespace

Kernel hat(const Kernel& k) {
  require_nonnegative(k, "hat");
  Matrix m = k.values();
  relax_all_pairs(m);
  return Kernel(k.points(), std::move(m));
}

std::vector<std::size_t> hat_chain(const Kernel& k, std::size_t x, std::size_t y, double tol) {
  require_nonnegative(k, "hat_chain");
  const std::size_t n = k.size();
  if (x >= n || y >= n) throw Error(ErrorCode::UnknownLabel, "chain endpoint out of range");
  const double target = hat(k)(x, y);
  constexpr double inf = std::numeric_limits<double>::infinity();

  // to_end[len][v]: cheapest chain from v to y with exactly len edges.
  // Nonnegative weights need at most n + 1 edges.
  const std::size_t max_len = n + 1;
  std::vector<std::vector<double>> to_end(max_len + 1, std::vector<double>(n, inf));
  to_end[0][y] = 0.0;
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        to_end[len][v] = std::min(to_end[len][v], k(v, w) + to_end[len - 1][w]);

  std::size_t len = 1;
  while (len <= max_len && !(to_end[len][x] <= target + tol)) ++len;
  if (len > max_len) len = max_len;

  std::vector<std::size_t> chain{x};
  double spent = 0.0;
  std::size_t at = x;
  for (std::size_t remaining = len; remaining > 0; --remaining) {
    for (std::size_t v = 0; v < n; ++v) {
      if (spent + k(at, v) + to_end[remaining - 1][v] <= target + tol) {
        spent += k(at, v);
        at = v;
        chain.push_back(v);
        break;
      }
    }
  }
  return chain;
}

Kernel s_hat(const Kernel& k, const Kernel& s) {
  require_same_points(k.points(), s.points(), "s_hat");
  require_nonnegative(k, "s_hat");
  require_nonnegative(s, "s_hat");
  Matrix chains = s.values();
  relax_all_pairs(chains);

  const Matrix& first = k.values();
  const Eigen::Index n = first.rows();
  Matrix out = first;  // the empty chain
  for (Eigen::Index y = 0; y < n; ++y)
    for (Eigen::Index z = 0; z < n; ++z) {
      const double tail = chains(z, y);
      for (Eigen::Index x = 0; x < n; ++x) {
        const double cand = first(x, z) + tail;
        if (cand < out(x, y)) out(x, y) = cand;
      }
    }
  return Kernel(k.points(), std::move(out));
}

Domination dominates_right(const Kernel& k, const Kernel& s, double tol) {
  require_same_points(k.points(), s.points(), "dominates_right");
  const std::size_t n = k.size();
  ViolationTracker t;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const double v = k(x, z) - k(x, y) - s(y, z);
        if (v > tol) t.offer(v, {x, y, z});
      }
  return {!t.best().has_value(), t.best()};
}

Domination dominates_left(const Kernel& k, const Kernel& s, double tol) {
  require_same_points(k.points(), s.points(), "dominates_left");
  const std::size_t n = k.size();
  ViolationTracker t;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const double v = k(x, z) - s(x, y) - k(y, z);
        if (v > tol) t.offer(v, {x, y, z});
      }
  return {!t.best().has_value(), t.best()};
}

}  // namespace kerncalc
