#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace kerncalc {

/// Default tolerance used by every predicate when the caller gives none.
inline constexpr double kDefaultTol = 1e-9;

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  ParameterOutOfRange,
  NegativeEntry,
  PreconditionFailed,
  InconsistentQuotient,
  DegenerateDenominator,
  BridgeViolation,
  LabelCollision,
  UnknownLabel,
  NotInjective,
  TooManyPoints,
  NotBijection,
  IncomparableSupports,
  InvalidMeasure,
};

std::string_view to_string(ErrorCode code);

/// Index tuple (into a PointSet) that violates some property, plus by how much.
struct Witness {
  std::vector<std::size_t> points;
  double magnitude = 0.0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// All library failures. `code()` is stable and machine-readable; the witness,
/// when present, names the offending points by index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<Witness> witness = std::nullopt)
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::optional<Witness> witness_;
};

/// Ordered set of distinct labels. Index i <-> labels()[i] never changes.
class PointSet {
 public:
  explicit PointSet(std::vector<std::string> labels);

  /// Points labelled "0", "1", ..., "n-1".
  static PointSet indexed(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find() but throws ErrorCode::UnknownLabel.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A real function of two points over a finite PointSet, stored densely.
class Kernel {
 public:
  /// Throws InvalidInput unless values is square, matches points and is finite.
  Kernel(PointSet points, Matrix values);

  static Kernel zero(PointSet points);
  static Kernel constant(PointSet points, double c);

  std::size_t size() const noexcept { return points_.size(); }
  const PointSet& points() const noexcept { return points_; }
  const Matrix& values() const noexcept { return values_; }

  double operator()(std::size_t x, std::size_t y) const { return values_(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)); }

  bool is_nonnegative() const { return values_.minCoeff() >= 0.0; }
  double max_value() const { return values_.maxCoeff(); }

  /// Same kernel values, relabelled points.
  Kernel with_points(PointSet points) const { return Kernel(std::move(points), values_); }

 private:
  PointSet points_;
  Matrix values_;
};

/// f : X -> R over a finite PointSet.
class RealFunction {
 public:
  RealFunction(PointSet points, Vector values);

  std::size_t size() const noexcept { return points_.size(); }
  const PointSet& points() const noexcept { return points_; }
  const Vector& values() const noexcept { return values_; }
  double operator()(std::size_t x) const { return values_(static_cast<Eigen::Index>(x)); }

 private:
  PointSet points_;
  Vector values_;
};

void require_same_points(const PointSet& a, const PointSet& b, std::string_view what);
void require_nonnegative(const Kernel& k, std::string_view what);

/// Lexicographic comparison used for deterministic witness tie-breaking.
bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

/// Tracks the maximal violation seen so far, ties going to the lowest tuple.
class ViolationTracker {
 public:
  void offer(double magnitude, std::initializer_list<std::size_t> tuple) {
    if (best_) {
      if (magnitude < best_->magnitude) return;
      if (magnitude == best_->magnitude &&
          !std::lexicographical_compare(tuple.begin(), tuple.end(), best_->points.begin(), best_->points.end()))
        return;
    }
    best_ = Witness{std::vector<std::size_t>(tuple), magnitude};
  }
  const std::optional<Witness>& best() const noexcept { return best_; }

 private:
  std::optional<Witness> best_;
};

}  // namespace kerncalc
