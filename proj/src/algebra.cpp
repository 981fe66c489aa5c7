#include "kerncalc/algebra.hpp"

#include <cmath>
#include <numeric>

#include "kerncalc/classify.hpp"

namespace kerncalc {

Kernel transpose(const Kernel& k) { return Kernel(k.points(), k.values().transpose()); }

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Kernel combine(const Kernel& k, const Kernel& s, const CombineMode& mode) {
  require_same_points(k.points(), s.points(), "combine");
  const Matrix& a = k.values();
  const Matrix& b = s.values();
  Matrix out = std::visit(
      Overloaded{
          [&](combine_mode::Min) -> Matrix { return a.cwiseMin(b); },
          [&](combine_mode::Max) -> Matrix { return a.cwiseMax(b); },
          [&](combine_mode::Sum) -> Matrix { return a + b; },
          [&](combine_mode::Convex c) -> Matrix {
            if (!(c.t >= 0.0 && c.t <= 1.0))
              throw Error(ErrorCode::ParameterOutOfRange, "convex weight must lie in [0, 1]");
            return c.t * a + (1.0 - c.t) * b;
          },
          [&](combine_mode::PNorm p) -> Matrix {
            if (!(p.p >= 1.0) || !std::isfinite(p.p))
              throw Error(ErrorCode::ParameterOutOfRange, "p-norm exponent must satisfy 1 <= p < inf");
            require_nonnegative(k, "combine(pnorm)");
            require_nonnegative(s, "combine(pnorm)");
            return (a.array().pow(p.p) + b.array().pow(p.p)).pow(1.0 / p.p).matrix();
          },
      },
      mode);
  return Kernel(k.points(), std::move(out));
}

Kernel scale(const Kernel& k, double factor) { return Kernel(k.points(), factor * k.values()); }

Kernel add(const Kernel& a, const Kernel& b) {
  require_same_points(a.points(), b.points(), "add");
  return Kernel(a.points(), a.values() + b.values());
}

Kernel subtract(const Kernel& a, const Kernel& b) {
  require_same_points(a.points(), b.points(), "subtract");
  return Kernel(a.points(), a.values() - b.values());
}

Kernel power(const Kernel& k, double exponent) {
  require_nonnegative(k, "power");
  return Kernel(k.points(), k.values().array().pow(exponent).matrix());
}

Kernel off_diagonal(const Kernel& k) {
  Matrix m = k.values();
  m.diagonal().setZero();
  return Kernel(k.points(), std::move(m));
}

bool entrywise_leq(const Kernel& a, const Kernel& b, double tol) {
  require_same_points(a.points(), b.points(), "entrywise_leq");
  return ((a.values() - b.values()).array() <= tol).all();
}

double max_abs_difference(const Kernel& a, const Kernel& b) {
  require_same_points(a.points(), b.points(), "max_abs_difference");
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

DiagonalSplit zero_diag_projection(const Kernel& k) {
  const Eigen::Index n = k.values().rows();
  const Vector d = k.values().diagonal();
  Matrix lambda(n, n);
  for (Eigen::Index y = 0; y < n; ++y)
    for (Eigen::Index x = 0; x < n; ++x) lambda(x, y) = 0.5 * (d(x) + d(y));
  // Λk(x,x) = k(x,x) exactly, so the diagonal of Zk is exactly zero.
  Matrix z = k.values() - lambda;
  z.diagonal().setZero();
  return {Kernel(k.points(), std::move(z)), Kernel(k.points(), std::move(lambda))};
}

std::vector<std::size_t> zero_set(const Kernel& k, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < k.size(); ++x)
    if (std::abs(k(x, x)) <= tol) out.push_back(x);
  return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Quotient quotient(const Kernel& k, double tol) {
  const auto report = classify(k, tol);
  if (!report.taxonomy.weak_metric) {
    std::optional<Witness> w;
    for (auto c : {Condition::Triangle, Condition::Nonnegative, Condition::ZeroDiagonal})
      if (!report.holds(c)) {
        w = report.witness(c);
        break;
      }
    throw Error(ErrorCode::PreconditionFailed, "quotient requires a weak metric", w);
  }

  const std::size_t n = k.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (k(x, y) <= tol && k(y, x) <= tol) {
        auto rx = find_root(parent, x), ry = find_root(parent, y);
        if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
      }

  Quotient q{Kernel::zero(PointSet::indexed(1)), std::vector<std::size_t>(n), {}};
  std::vector<std::size_t> class_of_root(n, n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    const auto r = find_root(parent, x);
    if (class_of_root[r] == n) {
      class_of_root[r] = q.classes.size();
      q.classes.emplace_back();
      labels.push_back(k.points().label(x));
    }
    q.class_of[x] = class_of_root[r];
    q.classes[q.class_of[x]].push_back(x);
  }

  // Well-definedness: every member pair must reproduce the representative value.
  const std::size_t m = q.classes.size();
  Matrix values(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const double rep = k(q.classes[a].front(), q.classes[b].front());
      values(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = rep;
      for (auto x : q.classes[a])
        for (auto y : q.classes[b]) {
          const double gap = std::abs(k(x, y) - rep);
          if (gap > 2.0 * tol)
            throw Error(ErrorCode::InconsistentQuotient, "class members disagree on a cross value",
                        Witness{{q.classes[a].front(), q.classes[b].front(), x, y}, gap});
        }
    }
  q.kernel = Kernel(PointSet(std::move(labels)), std::move(values));
  return q;
}

}  // namespace kerncalc
