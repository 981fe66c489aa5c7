#include "kerncalc/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kerncalc/classify.hpp"
#include "kerncalc/lattice.hpp"

namespace kerncalc {

std::optional<Witness> bridge_violation(const Matrix& v, double tol) {
  const Eigen::Index nx = v.rows(), ny = v.cols();
  ViolationTracker t;
  for (Eigen::Index x1 = 0; x1 < nx; ++x1)
    for (Eigen::Index y1 = 0; y1 < ny; ++y1)
      for (Eigen::Index x2 = 0; x2 < nx; ++x2)
        for (Eigen::Index y2 = 0; y2 < ny; ++y2) {
          const double excess = v(x1, y1) - v(x2, y2) - v(x1, y2) - v(x2, y1);
          if (excess > tol)
            t.offer(excess, {static_cast<std::size_t>(x1), static_cast<std::size_t>(y1), static_cast<std::size_t>(x2),
                             static_cast<std::size_t>(y2)});
        }
  return t.best();
}

Bridge validate_bridge(Matrix values, PointSet x_points, PointSet y_points, double tol) {
  if (values.rows() != static_cast<Eigen::Index>(x_points.size()) ||
      values.cols() != static_cast<Eigen::Index>(y_points.size()))
    throw Error(ErrorCode::InvalidInput, "bridge matrix must be |X| x |Y|");
  if (!values.allFinite()) throw Error(ErrorCode::InvalidInput, "bridge entries must be finite");
  for (Eigen::Index x = 0; x < values.rows(); ++x)
    for (Eigen::Index y = 0; y < values.cols(); ++y)
      if (values(x, y) < -tol)
        throw Error(ErrorCode::NegativeEntry, "bridge has a negative entry",
                    Witness{{static_cast<std::size_t>(x), static_cast<std::size_t>(y)}, -values(x, y)});
  if (auto w = bridge_violation(values, tol))
    throw Error(ErrorCode::BridgeViolation, "bridge inequality fails", std::move(w));
  return Bridge(std::move(x_points), std::move(y_points), std::move(values));
}

std::pair<Kernel, Kernel> induced_kernels(const Bridge& f) {
  const Matrix& v = f.values();
  const Eigen::Index nx = v.rows(), ny = v.cols();
  Matrix kx(nx, nx), ky(ny, ny);
  for (Eigen::Index a = 0; a < nx; ++a)
    for (Eigen::Index b = 0; b < nx; ++b) kx(a, b) = (v.row(a) + v.row(b)).minCoeff();
  for (Eigen::Index a = 0; a < ny; ++a)
    for (Eigen::Index b = 0; b < ny; ++b) ky(a, b) = (v.col(a) + v.col(b)).minCoeff();
  return {Kernel(f.x_points(), std::move(kx)), Kernel(f.y_points(), std::move(ky))};
}

Kernel glue(const Bridge& f, LabelPolicy policy) {
  std::vector<std::string> labels;
  for (const auto& l : f.x_points().labels()) labels.push_back(policy == LabelPolicy::Prefix ? "X:" + l : l);
  for (const auto& l : f.y_points().labels()) {
    if (policy == LabelPolicy::Reject && f.x_points().find(l))
      throw Error(ErrorCode::LabelCollision, "label '" + l + "' appears on both sides of the bridge");
    labels.push_back(policy == LabelPolicy::Prefix ? "Y:" + l : l);
  }

  auto [kx, ky] = induced_kernels(f);
  // hat() rejects negatives; induced kernels can only dip below 0 within tol.
  const Kernel hx = hat(Kernel(kx.points(), kx.values().cwiseMax(0.0)));
  const Kernel hy = hat(Kernel(ky.points(), ky.values().cwiseMax(0.0)));

  const Eigen::Index nx = f.values().rows(), ny = f.values().cols();
  Matrix m(nx + ny, nx + ny);
  m.topLeftCorner(nx, nx) = hx.values();
  m.topRightCorner(nx, ny) = f.values();
  m.bottomLeftCorner(ny, nx) = f.values().transpose();
  m.bottomRightCorner(ny, ny) = hy.values();
  return Kernel(PointSet(std::move(labels)), std::move(m));
}

NormFunctionCheck check_norm_function(const RealFunction& f, const Kernel& d, double tol,
                                      NormFunctionOptions options) {
  require_same_points(f.points(), d.points(), "check_norm_function");
  if (options.require_pseudometric && !classify(d, tol).taxonomy.pseudometric)
    throw Error(ErrorCode::PreconditionFailed, "norm functions are checked against a pseudometric");

  const std::size_t n = d.size();
  ViolationTracker t;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double lower = std::abs(f(a) - f(b)) - d(a, b);
      const double upper = d(a, b) - f(a) - f(b);
      const double worst = std::max(lower, upper);
      if (worst > tol) t.offer(worst, {a, b});
    }
  NormFunctionCheck r{!t.best(), t.best(), std::nullopt};
  if (options.check_sup_identity) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t z = 0; z < n; ++z) best = std::max(best, d(a, z) - f(z));
      ok = std::abs(best - f(a)) <= tol;
    }
    r.sup_identity = ok;
  }
  return r;
}

Bridge flood_pestov_dominating(const Bridge& f, std::string_view x0_label, std::string_view y0_label) {
  const std::size_t x0 = f.x_points().index_of(x0_label);
  const std::size_t y0 = f.y_points().index_of(y0_label);
  const Eigen::Index nx = f.values().rows(), ny = f.values().cols();
  const double base = f(x0, y0);
  Matrix g(nx, ny);
  for (Eigen::Index x = 0; x < nx; ++x)
    for (Eigen::Index y = 0; y < ny; ++y)
      g(x, y) = (base + f(static_cast<std::size_t>(x), y0)) + f(x0, static_cast<std::size_t>(y));
  return validate_bridge(std::move(g), f.x_points(), f.y_points(), kDefaultTol);
}

Bridge separable_bridge(const RealFunction& f, const RealFunction& g, double tol) {
  const Eigen::Index nx = f.values().size(), ny = g.values().size();
  Matrix m(nx, ny);
  for (Eigen::Index x = 0; x < nx; ++x)
    for (Eigen::Index y = 0; y < ny; ++y) m(x, y) = f.values()(x) + g.values()(y);
  return validate_bridge(std::move(m), f.points(), g.points(), tol);
}

}  // namespace kerncalc
