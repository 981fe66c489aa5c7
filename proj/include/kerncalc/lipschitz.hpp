#pragma once

#include "kerncalc/kernel.hpp"

namespace kerncalc {

struct LipNorm {
  double sup = 0.0;  // max |f(x)|
  double lip = 0.0;  // max over x != x' of |f(x) - f(x')| / (k(x,x') ∨ k(x',x))
  double norm = 0.0; // sup ∨ lip
};

/// Lipschitz norm of f on (X, k). Throws DegenerateDenominator when some
/// pair x != x' has k(x,x') ∨ k(x',x) = 0.
LipNorm lip_norm(const RealFunction& f, const Kernel& k);

}  // namespace kerncalc
