#include "kerncalc/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace kerncalc {

Fixture make_fixture(FixtureKind kind, std::size_t n, FixtureMetric metric) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "fixtures need at least two points");
  const auto N = static_cast<Eigen::Index>(n);
  Matrix d(N, N);
  Vector coord(N);
  if (kind == FixtureKind::Interval) {
    if (metric != FixtureMetric::Euclid)
      throw Error(ErrorCode::ParameterOutOfRange, "the interval fixture only supports the euclid metric");
    for (Eigen::Index i = 0; i < N; ++i) coord(i) = static_cast<double>(i) / static_cast<double>(n - 1);
    for (Eigen::Index i = 0; i < N; ++i)
      for (Eigen::Index j = 0; j < N; ++j) d(i, j) = std::abs(coord(i) - coord(j));
  } else {
    const double two_pi = 2.0 * std::numbers::pi;
    for (Eigen::Index i = 0; i < N; ++i) coord(i) = two_pi * static_cast<double>(i) / static_cast<double>(n);
    for (Eigen::Index i = 0; i < N; ++i)
      for (Eigen::Index j = 0; j < N; ++j) {
        auto gap = static_cast<std::size_t>(i > j ? i - j : j - i);
        gap = std::min(gap, n - gap);
        const double angle = two_pi * static_cast<double>(gap) / static_cast<double>(n);
        switch (metric) {
          case FixtureMetric::Arc: d(i, j) = angle; break;
          case FixtureMetric::Chord:
          case FixtureMetric::Euclid: d(i, j) = 2.0 * std::sin(0.5 * angle); break;
        }
      }
  }
  PointSet points = PointSet::indexed(n);
  return Fixture{Kernel(points, std::move(d)), MeasuredSpace::uniform(points), std::move(coord)};
}

FixtureKind parse_fixture_kind(std::string_view s) {
  if (s == "interval") return FixtureKind::Interval;
  if (s == "circle") return FixtureKind::Circle;
  throw Error(ErrorCode::ParameterOutOfRange, "unknown fixture kind '" + std::string(s) + "'");
}

FixtureMetric parse_fixture_metric(std::string_view s) {
  if (s == "euclid") return FixtureMetric::Euclid;
  if (s == "arc") return FixtureMetric::Arc;
  if (s == "chord") return FixtureMetric::Chord;
  throw Error(ErrorCode::ParameterOutOfRange, "unknown fixture metric '" + std::string(s) + "'");
}

Permutation rotation(std::size_t n, std::size_t shift) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + shift) % n;
  return p;
}

}  // namespace kerncalc
