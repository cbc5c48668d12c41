#include "trigprod/pointeval.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "trigprod/coeffs.hpp"

using namespace trigprod;

namespace {

constexpr double kPi = std::numbers::pi;

// |sum_k coeffs[k] e^{ik theta}| accumulated in extended precision; the
// independent check for the log-domain evaluation. Also reports sum |c_k|,
// which bounds the cancellation error of this reference itself.
double fourier_magnitude(const CoefficientTable& table, double theta, double& abs_sum) {
  long double re = 0.0L, im = 0.0L;
  long double magnitude_sum = 0.0L;
  for (std::int64_t k = 0; k <= table.degree(); ++k) {
    const double c = table.coeffs[static_cast<std::size_t>(k)].convert_to<double>();
    if (c == 0.0) continue;
    const long double arg = static_cast<long double>(k) * static_cast<long double>(theta);
    re += static_cast<long double>(c) * std::cos(arg);
    im += static_cast<long double>(c) * std::sin(arg);
    magnitude_sum += std::fabs(static_cast<long double>(c));
  }
  abs_sum = static_cast<double>(magnitude_sum);
  return static_cast<double>(std::sqrt(re * re + im * im));
}

}  // namespace

TEST_SUITE("pointeval") {

TEST_CASE("explicit values") {
  // P_4(2 pi / 5) = 5
  CHECK(log_abs_pn(4, PiRational{2, 5}).log_value() == doctest::Approx(std::log(5.0)).epsilon(1e-13));
  // P_1(pi) = 2
  CHECK(log_abs_pn(1, PiRational{1, 1}).log_value() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  // single factor at 3 pi / 4: 2 sin(3 pi / 4) = sqrt 2
  CHECK(log_abs_pn_at_3pi_over_2n(1).log_value() ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-13));
  // Q_n(0) = 2^n
  CHECK(log_abs_qn(7, 0.0).log_value() == doctest::Approx(7.0 * std::log(2.0)).epsilon(1e-14));
  // Q_4(2 pi / 5) = 1 since n is even
  CHECK(log_abs_qn(4, PiRational{2, 5}).log_value() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("zero detection") {
  CHECK(log_abs_pn(5, 0.0).is_zero());
  CHECK(log_abs_pn(5, PiRational{0, 1}).is_zero());
  CHECK(log_abs_pn(3, PiRational{4, 2}).is_zero());  // theta = 2 pi
  // Q_3 at pi/2: the k = 2 factor is cos(pi/2) = 0
  CHECK(log_abs_qn(3, PiRational{1, 2}).is_zero());
  // Q_n at pi: the k = 1 factor is cos(pi/2)
  CHECK(log_abs_qn(4, PiRational{1, 1}).is_zero());
  // The double pi/2 is not exactly pi/2, so the factor is tiny but nonzero.
  const ScaledMagnitude near = log_abs_qn(3, kPi / 2.0);
  CHECK(!near.is_zero());
  CHECK(near.log_value() < -30.0);
  // A tiny but nonzero theta is not folded to the zero at 0.
  CHECK(!log_abs_pn(5, 1e-300).is_zero());
}

TEST_CASE("wrapper identity") {
  CHECK(log_abs_pn_at_3pi_over_2n(10).log_value() ==
        log_abs_pn(10, PiRational{3, 20}).log_value());
}

TEST_CASE("periodicity and evenness") {
  for (int n : {3, 11, 40}) {
    // exact for rational angles: theta and theta + 2 pi reduce identically
    CHECK(log_abs_pn(n, PiRational{2, 7}).log_value() ==
          log_abs_pn(n, PiRational{2 + 14, 7}).log_value());
    CHECK(log_abs_qn(n, PiRational{3, 5}).log_value() ==
          log_abs_qn(n, PiRational{3 + 10, 5}).log_value());
    // evenness
    CHECK(log_abs_pn(n, PiRational{-2, 7}).log_value() ==
          log_abs_pn(n, PiRational{2, 7}).log_value());
    CHECK(log_abs_pn(n, -1.234567) == log_abs_pn(n, 1.234567));
    CHECK(log_abs_qn(n, -0.77) == log_abs_qn(n, 0.77));
  }
  for (double theta : {0.37, 1.234, 2.99}) {
    CHECK(log_abs_pn(25, theta).log_value() ==
          doctest::Approx(log_abs_pn(25, theta + 2.0 * kPi).log_value()).epsilon(1e-9));
  }
}

TEST_CASE("agrees with the coefficient tables") {
  for (int n : {1, 2, 5, 12, 30}) {
    const CoefficientTable table = pn_coefficients(n);
    const CoefficientTable qtable = qn_coefficients(n);
    for (double theta : {0.37, 1.234, 2.9, 5.5}) {
      double abs_sum = 0.0;
      const double expected_p = fourier_magnitude(table, theta, abs_sum);
      const double got_p = log_abs_pn(n, theta).value();
      CHECK(std::fabs(got_p - expected_p) <= 1e-8 * expected_p);
      // |Q_n| can be ~2^{-n} of its coefficient mass, so the Fourier-sum
      // reference carries cancellation error ~eps * sum|c_k| of its own.
      const double expected_q = fourier_magnitude(qtable, theta, abs_sum);
      const double got_q = log_abs_qn(n, theta).value();
      CHECK(std::fabs(got_q - expected_q) <= 1e-8 * expected_q + 1e-18 * abs_sum);
    }
  }
}

TEST_CASE("sup-norm witness P_n(2 pi/(n+1)) = n+1 up to n = 1000") {
  for (int n = 1; n <= 1000; ++n) {
    const double value = log_abs_pn(n, PiRational{2, n + 1}).value();
    REQUIRE(std::fabs(value - (n + 1.0)) <= 1e-10 * (n + 1.0));
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(log_abs_pn(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(log_abs_pn(3, PiRational{1, 0}), std::domain_error);
  CHECK_THROWS_AS(log_abs_qn(3, std::numeric_limits<double>::infinity()), std::domain_error);
}

}  // TEST_SUITE
