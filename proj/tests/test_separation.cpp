#include <cmath>

#include <gtest/gtest.h>

#include "kerncalc/classify.hpp"
#include "kerncalc/hilbert.hpp"
#include "kerncalc/lattice.hpp"
#include "kerncalc/separation.hpp"
#include "support.hpp"

namespace kerncalc {
namespace {

using testing::Gen;
using testing::from_rows;

const Kernel kPair = from_rows({{0, 1}, {1, 0}});

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

Kernel scaled(const Kernel& k, double r) { return Kernel(k.points(), r * k.values()); }

TEST(ESet, Examples) {
  EXPECT_EQ(e_set(kPair, "0", "1", 1.0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(code_of([] { e_set(kPair, "0", "0", 1.0); }), ErrorCode::PreconditionFailed);
  EXPECT_EQ(code_of([] { e_set(kPair, "0", "7", 1.0); }), ErrorCode::UnknownLabel);
  EXPECT_EQ(code_of([] { e_set(kPair, "0", "1", 0.0); }), ErrorCode::ParameterOutOfRange);
  EXPECT_EQ(code_of([] { e_set(from_rows({{0, 1}, {2, 0}}), "0", "1", 1.0); }), ErrorCode::PreconditionFailed);

  Gen g(91);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = g.metric(g.index(2, 10));
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y)
        if (x != y) EXPECT_TRUE(e_set(d, d.points().label(x), d.points().label(y), 2.5).empty());
  }
}

TEST(ESet, MeasureMatchesOracle) {
  Gen g(92);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = g.metric(g.index(2, 10));
    const auto mu = g.measure(d.points());
    const double eps = g.uniform(0.05, 1);
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y) {
        if (x == y) continue;
        double total = 0.0;
        for (auto z : e_set_unchecked(d, x, y, eps)) total += mu.weight(z);
        EXPECT_EQ(total, testing::brute_e_measure(d.values(), x, y, eps, mu.weights()));
        // x and y always separate themselves
        const auto e = e_set_unchecked(d, x, y, eps);
        EXPECT_TRUE(std::binary_search(e.begin(), e.end(), x));
        EXPECT_TRUE(std::binary_search(e.begin(), e.end(), y));
      }
  }
}

TEST(ESet, GeodesicPointsSeparateAtOne) {
  // (0.3 + 0.6) - 0.6 rounds below 0.3, yet 2 lies on the geodesic from 0 through 1.
  const double far = 0.3 + 0.6;
  ASSERT_LT(far - 0.6, 0.3);
  const auto d = from_rows({{0, 0.3, far}, {0.3, 0, 0.6}, {far, 0.6, 0}});
  EXPECT_EQ(e_set(d, "0", "1", 1.0), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(e_set(d, "1", "2", 1.0), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ESet, DilationInvariance) {
  Gen g(93);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = g.metric(g.index(2, 12));
    const auto rd = scaled(d, g.spread(1e-3, 1e3));
    const double eps = g.coin() ? 1.0 : g.uniform(0.05, 1);
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y)
        if (x != y) EXPECT_EQ(e_set_unchecked(rd, x, y, eps), e_set_unchecked(d, x, y, eps));
  }
}

TEST(Separation, DefaultGrid) {
  const auto grid = default_separation_grid();
  ASSERT_EQ(grid.size(), 20u);
  EXPECT_NEAR(grid.front(), 0.05, 1e-15);
  EXPECT_EQ(grid.back(), 1.0);
  for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_NEAR(grid[i] / grid[i - 1], std::pow(20.0, 1.0 / 19), 1e-12);
}

TEST(Separation, PairExample) {
  const auto r = separation_profile(kPair, MeasuredSpace::uniform(kPair.points()), {1.0});
  EXPECT_EQ(r.c_profile, std::vector<double>{1.0});
  EXPECT_NEAR(r.ell, 1.0, 1e-15);
  EXPECT_NEAR(r.L, 1.0, 1e-15);
  EXPECT_TRUE(r.derived_bound_ok);
  EXPECT_FALSE(r.degenerate);

  const auto sorted = separation_profile(kPair, MeasuredSpace::uniform(kPair.points()), {0.5, 0.1, 0.5});
  EXPECT_EQ(sorted.eps_grid, (std::vector<double>{0.1, 0.5}));
  EXPECT_EQ(code_of([] { separation_profile(kPair, MeasuredSpace::uniform(kPair.points()), {0.0}); }),
            ErrorCode::ParameterOutOfRange);
}

TEST(Separation, ProfileProperties) {
  Gen g(94);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = g.index(2, 32);
    const auto d = g.metric(n);
    const auto mu = trial % 2 ? g.measure(d.points()) : MeasuredSpace::uniform(d.points());
    const auto r = separation_profile(d, mu, default_separation_grid());
    ASSERT_EQ(r.c_profile.size(), r.eps_grid.size());
    for (std::size_t i = 0; i < r.c_profile.size(); ++i) {
      EXPECT_GE(r.c_profile[i], 0.0);
      EXPECT_LE(r.c_profile[i], 1.0 + 1e-12);
      if (i) EXPECT_LE(r.c_profile[i], r.c_profile[i - 1]);
      EXPECT_GE(r.ell, r.eps_grid[i] * std::sqrt(r.c_profile[i]) - 1e-9);
    }
    EXPECT_TRUE(r.derived_bound_ok);
    EXPECT_LE(r.ell, r.L);
    EXPECT_LE(r.L, 1.0 + 1e-9);

    double c_oracle = 1.0;
    const double eps = r.eps_grid[7];
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        c_oracle = std::min(c_oracle, testing::brute_e_measure(d.values(), x, y, eps, mu.weights()));
    EXPECT_NEAR(r.c_profile[7], c_oracle, 1e-15);

    const double s = g.spread(1e-3, 1e3);
    const auto rs = separation_profile(scaled(d, s), mu, default_separation_grid());
    EXPECT_EQ(rs.c_profile, r.c_profile);
    EXPECT_NEAR(rs.ell, r.ell, 1e-12);
    EXPECT_EQ(rs.derived_bound_ok, r.derived_bound_ok);
  }
}

TEST(Bilip, Examples) {
  Gen g(95);
  const auto s = g.metric(5);
  const auto b = bilip_constants(scaled(s, 2.0), s);
  EXPECT_DOUBLE_EQ(b.ell, 2.0);
  EXPECT_DOUBLE_EQ(b.L, 2.0);
  EXPECT_NEAR(b.u, 0.0, 1e-15);
  EXPECT_EQ(code_of([] { bilip_constants(from_rows({{0, 1}, {1, 0}}), from_rows({{0, 1}, {1, 1}})); }),
            ErrorCode::IncomparableSupports);
  EXPECT_EQ(code_of([] { bilip_constants(from_rows({{0, -1}, {1, 0}}), from_rows({{0, 1}, {1, 0}})); }),
            ErrorCode::NegativeEntry);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = g.metric(g.index(2, 8));
    const auto k = g.comparable(d, 0.5, 2.0);
    const auto c = bilip_constants(k, d);
    EXPECT_LE(c.u, std::log(4.0) + 1e-12);
    EXPECT_GE(c.u, 0.0);
    EXPECT_LE(c.ell, c.L);
    EXPECT_TRUE((k.values().array() <= c.L * d.values().array() + 1e-12).all());
    EXPECT_TRUE((k.values().array() >= c.ell * d.values().array() - 1e-12).all());
  }
}

TEST(Bilip, UIsAPseudometric) {
  Gen g(96);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = g.metric(g.index(3, 10));
    const auto p = g.comparable(s, 0.3, 3), k = g.comparable(s, 0.3, 3);
    const double u_sk = bilip_constants(k, s).u, u_ks = bilip_constants(s, k).u;
    EXPECT_EQ(u_sk, u_ks);
    EXPECT_LE(u_sk, bilip_constants(p, s).u + bilip_constants(k, p).u + 1e-9);
    EXPECT_EQ(bilip_constants(s, s).u, 0.0);
    const double r = g.spread(0.01, 100);
    EXPECT_LE(bilip_constants(scaled(s, r), s).u, 1e-9);
    EXPECT_GT(bilip_constants(k, s).u, 1e-9);  // generic factors never form a dilation
  }
}

TEST(Ivt, Examples) {
  const auto mu = MeasuredSpace::uniform(kPair.points());
  const auto r = ivt_check(kPair, kPair, mu);
  EXPECT_NEAR(r.lip_inverse, 1.0, 1e-15);
  EXPECT_NEAR(r.lip_of_kappa, 1.0, 1e-15);
  const auto r3 = ivt_check(scaled(kPair, 3.0), kPair, mu);
  EXPECT_NEAR(r3.lip_inverse, 3.0, 1e-15);
  EXPECT_NEAR(r3.lip_of_kappa, 3.0, 1e-15);
  EXPECT_EQ(code_of([&] { ivt_check(kPair, Kernel::zero(kPair.points()), mu); }), ErrorCode::NotInjective);
  EXPECT_EQ(code_of([&] { ivt_check(from_rows({{1, 1}, {1, 0}}), kPair, mu); }), ErrorCode::PreconditionFailed);
}

TEST(Ivt, EqualityOnRandomMetrics) {
  Gen g(97);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = g.index(2, 16);
    const auto s = g.metric(n);
    const auto k = trial % 2 ? s : g.comparable(s, 0.5, 2);
    if (!classify(k).taxonomy.weak_metric) continue;
    const auto mu = g.measure(s.points());
    const auto r = ivt_check(k, s, mu);
    EXPECT_NEAR(r.lip_of_kappa, r.lip_inverse, 1e-9);
    // the p = 2 variant can only shrink the denominators' sum, never below the inverse bound
    const auto r2 = ivt_check(k, s, mu, kDefaultTol, 2.0);
    EXPECT_GE(r2.lip_of_kappa, r.lip_of_kappa - 1e-12);
    EXPECT_EQ(r2.lip_inverse, r.lip_inverse);
  }
}

TEST(Perturb, IdentityIsExact) {
  Gen g(98);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = g.metric(g.index(2, 10));
    const auto mu = g.measure(d.points());
    const double eps = g.uniform(0.05, 1);
    const auto r = perturb_separation(d, d, mu, eps);
    EXPECT_TRUE(r.preconditions_hold);
    EXPECT_EQ(r.ell, 1.0);
    EXPECT_EQ(r.L, 1.0);
    EXPECT_EQ(r.eps_shifted, eps);
    EXPECT_EQ(r.containment, true);
    const auto prof = separation_profile(d, mu, {eps});
    EXPECT_EQ(r.c_shifted, prof.c_profile[0]);
  }
}

TEST(Perturb, DilationsAreExact) {
  Gen g(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = g.metric(g.index(2, 10));
    const auto mu = g.measure(d.points());
    const auto r = perturb_separation(d, scaled(d, 0.75), mu, 0.3);
    EXPECT_TRUE(r.preconditions_hold);
    EXPECT_DOUBLE_EQ(r.eps_shifted, 0.3);
    EXPECT_EQ(r.containment, true);
  }
}

TEST(Perturb, Preconditions) {
  const auto mu = MeasuredSpace::uniform(kPair.points());
  const auto bad = perturb_separation(from_rows({{0, 1}, {2, 0}}), kPair, mu, 0.5);
  EXPECT_FALSE(bad.d_is_metric);
  EXPECT_FALSE(bad.preconditions_hold);
  EXPECT_EQ(code_of([&] { perturb_separation(kPair, kPair, mu, 0.0); }), ErrorCode::ParameterOutOfRange);
}

// hat of an entrywise perturbation stays between (1 - spread) d and (1 + spread) d.
Kernel nearby_metric(Gen& g, const Kernel& d, double spread) { return hat(g.comparable(d, 1 - spread, 1 + spread)); }

TEST(Perturb, SmallPerturbationsKeepSeparation) {
  Gen g(100);
  int applicable = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = g.metric(g.index(3, 10));
    const auto mu = g.measure(d.points());
    const auto tau = nearby_metric(g, d, 0.004);
    ASSERT_LE(bilip_constants(tau, d).u, 0.01);
    const double eps = 0.3;
    const auto r = perturb_separation(d, tau, mu, eps);
    EXPECT_TRUE(r.d_is_metric && r.tau_is_metric);
    EXPECT_TRUE(r.ratio_condition || !r.delta_uniform);
    if (!r.preconditions_hold) continue;
    ++applicable;
    EXPECT_EQ(r.containment_conservative, true);
    EXPECT_EQ(r.containment, true);
    const double c = separation_profile(d, mu, {eps}).c_profile[0];
    ASSERT_TRUE(r.c_shifted);
    EXPECT_GE(*r.c_shifted, c);
  }
  // δ = L d - tau usually fails its own reverse bounds, so only a minority qualify.
  EXPECT_GT(applicable, 20);
}

TEST(Perturb, ConservativeRadiusAlwaysContains) {
  Gen g(101);
  int shifted_failures = 0, applicable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = g.metric(g.index(3, 8));
    const auto mu = g.measure(d.points());
    const auto tau = nearby_metric(g, d, g.uniform(0.01, 0.2));
    const auto r = perturb_separation(d, tau, mu, g.uniform(0.2, 1.0));
    if (!r.preconditions_hold) continue;
    ++applicable;
    if (r.eps_conservative > 0) EXPECT_EQ(r.containment_conservative, true);
    shifted_failures += r.containment == false;
  }
  EXPECT_GT(applicable, 20);
  RecordProperty("shifted_failures", shifted_failures);
}

TEST(Perturb, ShiftedRadiusCanFail) {
  const auto d = from_rows({{0, 0.33586651588245209, 0.23950586791965922, 0.98632215473287987},
                            {0.33586651588245209, 0, 0.096360647962792853, 0.91313863914459015},
                            {0.23950586791965922, 0.096360647962792853, 0, 0.81677799118179728},
                            {0.98632215473287987, 0.91313863914459015, 0.81677799118179728, 0}});
  const auto tau = from_rows({{0, 0.29824399203796914, 0.19206174260515763, 0.733492032511181},
                              {0.29824399203796914, 0, 0.1061822494328115, 0.84452398313792609},
                              {0.19206174260515763, 0.1061822494328115, 0, 0.73834173370511458},
                              {0.733492032511181, 0.84452398313792609, 0.73834173370511458, 0}});
  const double eps = 0.57807863400528925;
  const auto r = perturb_separation(d, tau, MeasuredSpace::uniform(d.points()), eps);
  ASSERT_TRUE(r.preconditions_hold);
  EXPECT_NEAR(r.eps_shifted, 0.0861509711675, 1e-9);
  EXPECT_EQ(r.containment, false);
  ASSERT_TRUE(r.containment_witness);
  EXPECT_EQ(r.containment_witness->points, (std::vector<std::size_t>{0, 2, 3}));
  const auto& w = r.containment_witness->points;
  EXPECT_GE(std::abs(d(w[0], w[2]) - d(w[1], w[2])), eps * d(w[0], w[1]));
  EXPECT_LT(std::abs(tau(w[0], w[2]) - tau(w[1], w[2])), 0.5 * r.eps_shifted * tau(w[0], w[1]));
}

}  // namespace
}  // namespace kerncalc
