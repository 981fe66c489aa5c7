#pragma once

#include <cstddef>
#include <string_view>

#include "kerncalc/hilbert.hpp"

namespace kerncalc {

enum class FixtureKind { Interval, Circle };
enum class FixtureMetric { Euclid, Arc, Chord };

struct Fixture {
  Kernel distance;
  MeasuredSpace space;
  /// Coordinate of each point: position in [0,1] or angle in [0, 2π).
  Vector coordinate;
};

/// Uniformly weighted grid fixtures:
///   interval: x_i = i/(n-1) with |x - y|;
///   circle:   θ_i = 2πi/n with arc length or chord length.
/// Circle distances are computed from the index gap k = min(|i-j|, n-|i-j|),
/// so every rotation is an exact isometry. interval+arc and interval+chord
/// are rejected, as is n < 2.
Fixture make_fixture(FixtureKind kind, std::size_t n, FixtureMetric metric);

FixtureKind parse_fixture_kind(std::string_view s);
FixtureMetric parse_fixture_metric(std::string_view s);

/// Rotation by `shift` grid steps on an n-point circle.
Permutation rotation(std::size_t n, std::size_t shift);

}  // namespace kerncalc
