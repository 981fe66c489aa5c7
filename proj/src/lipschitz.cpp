#include "kerncalc/lipschitz.hpp"

#include <algorithm>
#include <cmath>

namespace kerncalc {

LipNorm lip_norm(const RealFunction& f, const Kernel& k) {
  require_same_points(f.points(), k.points(), "lip_norm");
  const std::size_t n = k.size();
  LipNorm r;
  for (std::size_t x = 0; x < n; ++x) r.sup = std::max(r.sup, std::abs(f(x)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const double denom = std::max(k(x, y), k(y, x));
      if (!(denom > 0.0))
        throw Error(ErrorCode::DegenerateDenominator, "k(x,x') ∨ k(x',x) vanishes on a pair of distinct points",
                    Witness{{x, y}, denom});
      r.lip = std::max(r.lip, std::abs(f(x) - f(y)) / denom);
    }
  r.norm = std::max(r.sup, r.lip);
  return r;
}

}  // namespace kerncalc
