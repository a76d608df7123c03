#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "huygens/commutator.hpp"
#include "huygens/errors.hpp"
#include "huygens/oracle.hpp"
#include "huygens/signalling.hpp"
#include "huygens/special_functions.hpp"

using namespace huygens;

TEST_CASE("mode kernel vanishes at equal conformal times") {
  for (double alpha : {0.5, 1.5, 2.5}) {
    for (double k : {0.3, 1.0, 7.0}) {
      CHECK(mode_kernel_g(alpha, 1.7, 1.7, k) == 0.0);
    }
  }
}

TEST_CASE("mode kernel at alpha = 1/2 is the conformal plane-wave kernel") {
  for (double eta : {0.4, 1.0, 3.0}) {
    for (double eta_p : {0.7, 2.2, 9.0}) {
      for (double k : {0.5, 1.3, 6.0}) {
        const double expected = 0.5 * std::sin(k * (eta - eta_p));
        CHECK(mode_kernel_g(0.5, eta, eta_p, k) ==
              doctest::Approx(expected).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("literal and Wronskian-reduced kernels agree") {
  CHECK(mode_kernel_g(1.5, 2.0, 1.0, 1.0) ==
        doctest::Approx(mode_kernel_g_reduced(1.5, 2.0, 1.0, 1.0)).epsilon(1e-10));
  for (double alpha : {-1.2, -0.3, 0.5, 1.5, 2.5, 5.0}) {
    for (double eta : {0.3, 1.1, 4.7}) {
      for (double eta_p : {0.9, 2.8}) {
        for (double k : {0.2, 1.0, 11.0}) {
          const double lhs = mode_kernel_g(alpha, eta, eta_p, k);
          const double rhs = mode_kernel_g_reduced(alpha, eta, eta_p, k);
          CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("kernel denominator equals the Bessel Wronskian -4/(pi k eta')") {
  for (double alpha : {-1.2, -0.5, 0.5, 1.5, 2.5, 5.0, 8.0}) {
    for (double k : {0.1, 1.0, 10.0, 100.0}) {
      for (double eta_p : {0.2, 1.0, 5.0, 20.0}) {
        const double x = k * eta_p;
        const double lj = bessel_j(alpha - 1.0, x) - bessel_j(alpha + 1.0, x);
        const double ly = bessel_y(alpha - 1.0, x) - bessel_y(alpha + 1.0, x);
        const double denom = bessel_y(alpha, x) * lj - bessel_j(alpha, x) * ly;
        CHECK(std::abs(denom * (M_PI * k * eta_p) / 4.0 + 1.0) < 1e-8);
      }
    }
  }
}

TEST_CASE("Wronskian-reduced bracket is antisymmetric under eta <-> eta'") {
  for (double alpha : {0.5, 1.5, 3.3}) {
    for (double k : {0.7, 4.0}) {
      for (double eta : {0.5, 1.9}) {
        for (double eta_p : {1.2, 6.4}) {
          auto bracket = [&](double u, double v) {
            return bessel_y(alpha, k * u) * bessel_j(alpha, k * v) -
                   bessel_j(alpha, k * u) * bessel_y(alpha, k * v);
          };
          const double fwd = bracket(eta, eta_p);
          const double rev = bracket(eta_p, eta);
          CHECK(fwd == doctest::Approx(-rev).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("matter commutator: values, microcausality, antisymmetry") {
  const CosmologyParams matter = CosmologyParams::from_w(0.0);

  // equal-time: spacelike, interior vanishes
  const CommutatorValue equal_time = commutator_matter(3.0, 3.0, 1.0, matter);
  CHECK(equal_time.interior_value == 0.0);

  // timelike: interior = -1/(4 pi a(10) a(1) * 10 * 1), a(eta) = eta^2
  const CommutatorValue timelike = commutator_matter(10.0, 1.0, 2.0, matter);
  const double expected = -1.0 / (4.0 * M_PI * 100.0 * 1.0 * 10.0 * 1.0);
  CHECK(timelike.interior_value == doctest::Approx(expected).epsilon(1e-14));
  CHECK(timelike.delta_retarded_strength ==
        doctest::Approx(-1.0 / (4.0 * M_PI * 100.0 * 2.0)).epsilon(1e-14));
  CHECK(timelike.delta_advanced_strength ==
        doctest::Approx(+1.0 / (4.0 * M_PI * 100.0 * 2.0)).epsilon(1e-14));

  // swapping the events negates every component
  const CommutatorValue swapped = commutator_matter(1.0, 10.0, 2.0, matter);
  CHECK(swapped.interior_value == doctest::Approx(-timelike.interior_value));
  CHECK(swapped.delta_retarded_strength ==
        doctest::Approx(-timelike.delta_advanced_strength));
  CHECK(swapped.delta_advanced_strength ==
        doctest::Approx(-timelike.delta_retarded_strength));

  const CosmologyParams radiation = CosmologyParams::from_w(1.0 / 3.0);
  CHECK_THROWS_AS(commutator_matter(2.0, 1.0, 1.0, radiation), UnsupportedError);
  CHECK_THROWS_AS(commutator_matter(-1.0, 1.0, 1.0, matter), std::domain_error);
}

TEST_CASE("window-integrated mode sum reproduces the case-5 closed form") {
  // the central cross-validation of the sign convention
  const ConformalWindow a{1.0, 2.0}, b{10.0, 11.0};
  const double target = -std::log(2.0) * std::log(1.1) / (4.0 * M_PI);
  const QuadResult m = window_integrated_commutator(1.5, a, b, 3.0, 1e-5);
  CHECK(std::abs(m.value - target) < 1e-5);
  CHECK(std::abs(m.value - target) < 1e-3 * std::abs(target));
  CHECK(m.error_estimate >= 0.0);
}

TEST_CASE("window-integrated mode sum: conformal kernel has no interior support") {
  const ConformalWindow a{1.0, 2.0}, b{10.0, 11.0};
  const QuadResult m = window_integrated_commutator(0.5, a, b, 3.0, 1e-7);
  CHECK(std::abs(m.value) < 1e-6);
}

TEST_CASE("window-integrated mode sum: no causal contact at large R") {
  const ConformalWindow a{1.0, 2.0}, b{10.0, 11.0};
  const QuadResult m = window_integrated_commutator(1.5, a, b, 100.0, 1e-4);
  CHECK(std::abs(m.value) < 1e-4);
}

TEST_CASE("integrated microcausality for spacelike overlapping windows") {
  const ConformalWindow w{1.0, 2.0};
  for (double alpha : {0.5, 1.5, 2.5}) {
    const QuadResult m = window_integrated_commutator(alpha, w, w, 100.0, 1e-4);
    CHECK(std::abs(m.value) < 1e-3);  // 10 x tol
  }
}

TEST_CASE("alpha = 3/2 mode sum agrees with the window-integrated commutator") {
  // delta branch integrated exactly, theta branch by adaptive quadrature
  const ConformalWindow a{1.0, 4.0}, b{4.5, 5.0};
  const double r = 2.0;
  const auto [sa, sb] = optimal_detector_states();
  const OracleReport analytic = s2_oracle_matter_windows(sa, sb, a, b, r, 1e-10);
  const double target =
      -(analytic.s_delta_numeric + analytic.s_theta_numeric) / (4.0 * M_PI);
  const QuadResult m = window_integrated_commutator(1.5, a, b, r, 1e-6);
  CHECK(m.value == doctest::Approx(target).epsilon(1e-3));
}

TEST_CASE("window integration argument validation") {
  const ConformalWindow a{1.0, 2.0}, b{3.0, 4.0};
  CHECK_THROWS_AS(window_integrated_commutator(1.5, {2.0, 1.0}, b, 1.0, 1e-4),
                  std::invalid_argument);
  CHECK_THROWS_AS(window_integrated_commutator(1.5, a, b, -1.0, 1e-4),
                  std::domain_error);
  CHECK_THROWS_AS(window_integrated_commutator(1.5, a, b, 1.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(window_integrated_commutator(-1.6, a, b, 1.0, 1e-4),
                  std::domain_error);
}
