#include <doctest.h>

#include <cmath>
#include <vector>

#include "robust_outage/core.hpp"
#include "robust_outage/forward_kl.hpp"
#include "robust_outage/lp_bounds.hpp"
#include "robust_outage/reverse_kl.hpp"
#include "robust_outage/rng.hpp"

using namespace robust_outage;

TEST_CASE("lp_lower_bounds frozen example") {
  const LpBoundChain c = lp_lower_bounds(2.0, 0.2, 0.01);
  // KL radius d^2/2 = 0.02
  CHECK(c.floor == doctest::Approx(0.019801326693244747).epsilon(1e-12));
  CHECK(c.floor_with_eps == doctest::Approx(0.0296033134263123).epsilon(1e-12));
  CHECK(c.p1_via_forward == doctest::Approx(0.035648311917525786).epsilon(1e-9));
  CHECK(c.p1_via_reverse == doctest::Approx(0.044270024395351104).epsilon(1e-9));
  CHECK(c.p1_via_forward == doctest::Approx(solve_forward(0.01, 0.02).p_out));
  CHECK(c.p1_via_reverse == doctest::Approx(solve_reverse(0.01, 0.02).p_out));
}

TEST_CASE("chain ordering holds on a grid") {
  for (double p : {1.0, 1.5, 2.0, 10.0}) {
    for (double d : {0.0, 0.01, 0.2, 1.0}) {
      for (double eps : {0.0, 1e-4, 0.01, 0.3, 0.9}) {
        const LpBoundChain c = lp_lower_bounds(p, d, eps);
        const double best = std::max(c.p1_via_forward, c.p1_via_reverse);
        CHECK(best >= c.floor_with_eps - 1e-12);
        CHECK(c.floor_with_eps >= c.floor - 1e-15);
        CHECK(c.p1_via_forward >= eps - 1e-15);
        CHECK(c.p1_via_reverse >= eps - 1e-15);
      }
    }
  }
}

TEST_CASE("zero radius collapses the chain to eps") {
  const LpBoundChain c = lp_lower_bounds(2.0, 0.0, 0.3);
  CHECK(c.floor == 0.0);
  CHECK(c.floor_with_eps == 0.3);
  CHECK(c.p1_via_forward == 0.3);
  CHECK(c.p1_via_reverse == 0.3);
}

TEST_CASE("eps = 0 leaves only the floor") {
  const LpBoundChain c = lp_lower_bounds(2.0, 0.2, 0.0);
  CHECK(c.floor_with_eps == c.floor);
  CHECK(c.p1_via_reverse == doctest::Approx(c.floor).epsilon(1e-12));
  CHECK(c.p1_via_forward == 0.0);  // forward class pins mass ratios to f0
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(lp_lower_bounds(0.5, 0.1, 0.1), std::domain_error);
  CHECK_THROWS_AS(lp_lower_bounds(2.0, -0.1, 0.1), std::domain_error);
  CHECK_THROWS_AS(lp_lower_bounds(2.0, 0.1, 1.5), std::domain_error);
}

TEST_CASE("tv_exact_outage examples") {
  CHECK(tv_exact_outage(0.0, 0.3) == 0.3);
  CHECK(tv_exact_outage(0.2, 0.01) == doctest::Approx(0.11).epsilon(1e-15));
  CHECK(tv_exact_outage(5.0, 0.5) == 1.0);
  CHECK_THROWS_AS(tv_exact_outage(-0.1, 0.5), std::domain_error);
}

TEST_CASE("tv exact dominates the p = 1 lower bounds") {
  for (double d : {0.01, 0.1, 0.5, 1.0}) {
    for (double eps : {0.0, 1e-3, 0.1, 0.5}) {
      const LpBoundChain c = lp_lower_bounds(1.0, d, eps);
      const double tv = tv_exact_outage(d, eps);
      CHECK(tv >= c.p1_via_forward - 1e-12);
      CHECK(tv >= c.p1_via_reverse - 1e-12);
      CHECK(tv >= c.floor_with_eps - 1e-12);
    }
  }
}

TEST_CASE("tv worst case is attained by a feasible discrete shift") {
  // two-point support (outage mass eps, clear mass 1-eps): moving min(d/2,
  // 1-eps) into the outage atom has L1 cost <= d and hits the bound
  CounterRng rng(/*seed=*/11, /*stream=*/0);
  for (int k = 0; k < 200; ++k) {
    const double eps = rng.next_uniform();
    const double d = 2.0 * rng.next_uniform();
    const double shift = std::min(d / 2.0, 1.0 - eps);
    const double l1 = 2.0 * shift;
    CHECK(l1 <= d + 1e-15);
    CHECK(eps + shift == doctest::Approx(tv_exact_outage(d, eps)).epsilon(1e-12));
  }
}
