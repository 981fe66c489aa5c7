#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "kerncalc/classify.hpp"
#include "kerncalc/lattice.hpp"

namespace kerncalc::testing {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double Gen::spread(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

Kernel Gen::kernel(std::size_t n, double lo, double hi) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(lo, hi);
  return Kernel(PointSet::indexed(n), m);
}

Kernel Gen::sparse_kernel(std::size_t n, double hi, double zero_fraction) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = coin(zero_fraction) ? 0.0 : uniform(0.0, hi);
  return Kernel(PointSet::indexed(n), m);
}

Kernel Gen::symmetric_zero_diagonal(std::size_t n, double lo, double hi) {
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = spread(lo, hi);
  return Kernel(PointSet::indexed(n), m);
}

Kernel Gen::metric(std::size_t n) {
  for (;;) {
    Kernel d = hat(symmetric_zero_diagonal(n, 0.05, 10.0));
    if (classify(d).taxonomy.metric) return d;
  }
}

Kernel Gen::comparable(const Kernel& s, double lo, double hi) {
  const std::size_t n = s.size();
  Matrix m = s.values();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double f = uniform(lo, hi);
      m(i, j) *= f;
      m(j, i) *= f;
    }
  return Kernel(s.points(), m);
}

MeasuredSpace Gen::measure(const PointSet& points) {
  Vector w(points.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = uniform(0.1, 1.0);
  w /= w.sum();
  return MeasuredSpace(points, w);
}

RealFunction Gen::function(const PointSet& points, double lo, double hi) {
  Vector v(points.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = uniform(lo, hi);
  return RealFunction(points, v);
}

Permutation Gen::permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), eng_);
  return p;
}

Bridge Gen::bridge(std::size_t nx, std::size_t ny) {
  const Kernel dx = metric(nx), dy = metric(ny);
  const std::size_t x0 = index(0, nx - 1), y0 = index(0, ny - 1);
  const double eps = uniform(0.01, 1.0);
  Matrix f(nx, ny);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) f(x, y) = dx(x0, x) + eps + dy(y0, y) + eps;
  if (coin(0.7)) {
    const Kernel d = metric(nx + ny);
    f += uniform(0.0, 2.0) * d.values().topRightCorner(nx, ny);
  }
  if (coin(0.5)) f.array() += uniform(0.0, 1.0);
  return validate_bridge(f, labelled(nx, "x"), labelled(ny, "y"));
}

PointSet labelled(std::size_t n, const char* prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return PointSet(labels);
}

Kernel from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i].at(j);
  return Kernel(PointSet::indexed(n), m);
}

namespace {

void walk(const Matrix& k, std::size_t start, std::size_t at, double cost, std::size_t edges, std::size_t max_edges,
          Matrix& best) {
  if (edges == max_edges) return;
  for (Eigen::Index next = 0; next < k.cols(); ++next) {
    const double c = cost + k(at, next);
    best(start, next) = std::min(best(start, next), c);
    walk(k, start, next, c, edges + 1, max_edges, best);
  }
}

}  // namespace

Matrix brute_hat(const Matrix& k, std::size_t max_edges) {
  Matrix best = Matrix::Constant(k.rows(), k.cols(), kInf);
  for (Eigen::Index x = 0; x < k.rows(); ++x) walk(k, x, x, 0.0, 0, max_edges, best);
  return best;
}

Matrix brute_s_hat(const Matrix& k, const Matrix& s) {
  const Matrix p = brute_hat(s, s.rows() + 1);
  Matrix out = k;
  for (Eigen::Index x = 0; x < k.rows(); ++x)
    for (Eigen::Index y = 0; y < k.cols(); ++y)
      for (Eigen::Index z = 0; z < k.rows(); ++z) out(x, y) = std::min(out(x, y), k(x, z) + p(z, y));
  return out;
}

Conditions brute_conditions(const Matrix& k, double tol) {
  Conditions c{true, true, true, true, true, true};
  const Eigen::Index n = k.rows();
  for (Eigen::Index x = 0; x < n; ++x) {
    if (std::abs(k(x, x)) > tol) c.zero_diagonal = false;
    for (Eigen::Index y = 0; y < n; ++y) {
      if (k(x, y) < -tol) c.nonnegative = false;
      if (std::abs(k(x, y) - k(y, x)) > tol) c.symmetry = false;
      if (x != y && std::abs(k(x, y)) <= tol) {
        c.separation = false;
        if (std::abs(k(y, x)) <= tol) c.weak_separation = false;
      }
      for (Eigen::Index z = 0; z < n; ++z)
        if (k(x, z) - k(x, y) - k(y, z) > tol) c.triangle = false;
    }
  }
  return c;
}

double brute_minimal_q(const Matrix& k, double tol) {
  double q = 0.0;
  const Eigen::Index n = k.rows();
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      for (Eigen::Index z = 0; z < n; ++z) {
        if (k(x, z) <= tol) continue;
        const double den = k(x, y) + k(y, z);
        if (den <= tol) return kInf;
        q = std::max(q, k(x, z) / den);
      }
  return q;
}

bool brute_right_dominated(const Matrix& k, const Matrix& s, double tol) {
  const Eigen::Index n = k.rows();
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      for (Eigen::Index z = 0; z < n; ++z)
        if (k(x, z) > k(x, y) + s(y, z) + tol) return false;
  return true;
}

bool brute_left_dominated(const Matrix& k, const Matrix& s, double tol) {
  const Eigen::Index n = k.rows();
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      for (Eigen::Index z = 0; z < n; ++z)
        if (k(x, z) > s(x, y) + k(y, z) + tol) return false;
  return true;
}

Matrix brute_star(const Matrix& k, const Matrix& phi, const Vector& mu) {
  const Eigen::Index n = k.rows();
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y) {
      double s = 0.0;
      for (Eigen::Index z = 0; z < n; ++z) s += k(x, z) * phi(z, y) * mu(z);
      out(x, y) = s;
    }
  return out;
}

Matrix brute_rho(const Matrix& k, const Vector& mu) {
  const Eigen::Index n = k.rows();
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y) {
      double s = 0.0;
      for (Eigen::Index z = 0; z < n; ++z) s += (k(x, z) - k(y, z)) * (k(x, z) - k(y, z)) * mu(z);
      out(x, y) = std::sqrt(s);
    }
  return out;
}

double brute_e_measure(const Matrix& d, std::size_t x, std::size_t y, double eps, const Vector& mu) {
  double total = 0.0;
  for (Eigen::Index z = 0; z < d.rows(); ++z)
    if (std::abs(d(x, z) - d(y, z)) >= eps * d(x, y) * (1 - 1e-12)) total += mu(z);
  return total;
}

bool brute_bridge_ok(const Matrix& f, double tol) {
  for (Eigen::Index x1 = 0; x1 < f.rows(); ++x1)
    for (Eigen::Index x2 = 0; x2 < f.rows(); ++x2)
      for (Eigen::Index y1 = 0; y1 < f.cols(); ++y1)
        for (Eigen::Index y2 = 0; y2 < f.cols(); ++y2)
          if (f(x1, y1) - f(x2, y2) > f(x1, y2) + f(x2, y1) + tol) return false;
  return true;
}

std::vector<PointMask> brute_topology(std::size_t n, const std::vector<PointMask>& subbasis) {
  const PointMask full = n == 32 ? ~PointMask{0} : ((PointMask{1} << n) - 1);
  std::set<PointMask> basis{full};
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<PointMask> current(basis.begin(), basis.end());
    for (PointMask a : current)
      for (PointMask s : subbasis)
        if (basis.insert(a & s).second) grew = true;
  }
  std::set<PointMask> open{0};
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<PointMask> current(open.begin(), open.end());
    for (PointMask a : current)
      for (PointMask b : basis)
        if (open.insert(a | b).second) grew = true;
  }
  return {open.begin(), open.end()};
}

std::vector<PointMask> brute_subbasis(const Matrix& k, const std::vector<double>& eps_grid) {
  std::set<PointMask> sets;
  const Eigen::Index n = k.rows();
  for (double eps : eps_grid)
    for (Eigen::Index x = 0; x < n; ++x)
      for (Eigen::Index y = 0; y < n; ++y) {
        PointMask right = 0, left = 0;
        for (Eigen::Index z = 0; z < n; ++z) {
          if (std::abs(k(x, z) - k(x, y)) < eps) right |= PointMask{1} << z;
          if (std::abs(k(z, x) - k(y, x)) < eps) left |= PointMask{1} << z;
        }
        sets.insert(right);
        sets.insert(left);
      }
  return {sets.begin(), sets.end()};
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace kerncalc::testing
