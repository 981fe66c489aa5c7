#include "kerncalc/kernel.hpp"

#include <cmath>

namespace kerncalc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::ParameterOutOfRange: return "parameter_out_of_range";
    case ErrorCode::NegativeEntry: return "negative_entry";
    case ErrorCode::PreconditionFailed: return "precondition_failed";
    case ErrorCode::InconsistentQuotient: return "inconsistent_quotient";
    case ErrorCode::DegenerateDenominator: return "degenerate_denominator";
    case ErrorCode::BridgeViolation: return "bridge_violation";
    case ErrorCode::LabelCollision: return "label_collision";
    case ErrorCode::UnknownLabel: return "unknown_label";
    case ErrorCode::NotInjective: return "not_injective";
    case ErrorCode::TooManyPoints: return "too_many_points";
    case ErrorCode::NotBijection: return "not_bijection";
    case ErrorCode::IncomparableSupports: return "incomparable_supports";
    case ErrorCode::InvalidMeasure: return "invalid_measure";
  }
  return "unknown";
}

Kernel::Kernel(PointSet points, Matrix values) : points_(std::move(points)), values_(std::move(values)) {
  const auto n = static_cast<Eigen::Index>(points_.size());
  if (values_.rows() != n || values_.cols() != n)
    throw Error(ErrorCode::InvalidInput, "kernel matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!values_.allFinite()) throw Error(ErrorCode::InvalidInput, "kernel entries must be finite");
}

Kernel Kernel::zero(PointSet points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  return Kernel(std::move(points), Matrix::Zero(n, n));
}

Kernel Kernel::constant(PointSet points, double c) {
  const auto n = static_cast<Eigen::Index>(points.size());
  return Kernel(std::move(points), Matrix::Constant(n, n, c));
}

RealFunction::RealFunction(PointSet points, Vector values) : points_(std::move(points)), values_(std::move(values)) {
  if (values_.size() != static_cast<Eigen::Index>(points_.size()))
    throw Error(ErrorCode::InvalidInput, "function length does not match point count");
  if (!values_.allFinite()) throw Error(ErrorCode::InvalidInput, "function values must be finite");
}

void require_same_points(const PointSet& a, const PointSet& b, std::string_view what) {
  if (!(a == b)) throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": operands live on different point sets");
}

void require_nonnegative(const Kernel& k, std::string_view what) {
  const auto n = k.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (k(x, y) < 0.0)
        throw Error(ErrorCode::NegativeEntry, std::string(what) + ": kernel has a negative entry", Witness{{x, y}, -k(x, y)});
}

}  // namespace kerncalc
