#include "trigprod/constants.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trigprod/quadrature.hpp"

using namespace trigprod;

namespace {

constexpr double kPi = std::numbers::pi;

// The K objective phi(w) = w^{-1} int_0^w log sin(pi t) dt.
double k_objective(double w) {
  return integrate_singular([](double t) { return std::log(std::sin(kPi * t)); }, 0.0, w, 1e-13)
             .value / w;
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("paper decimals reproduce to 1e-8") {
  const ConstantsSet set = compute_constants(1e-12);
  CHECK(std::fabs(set.w0.value - 0.7912265710) <= 1e-8);
  CHECK(std::fabs(set.K.value - 0.1986176152) <= 1e-8);
  CHECK(std::fabs(set.e_K.value - 1.219715476) <= 1e-8);
  CHECK(std::fabs(set.B.value - 2.740222990) <= 1e-8);
  CHECK(std::fabs(set.C.value - 1.606193491) <= 1e-8);
  CHECK(std::fabs(set.G.value - 0.9159655942) <= 1e-8);
  CHECK(std::fabs(set.e_A.value - 1.214550362) <= 1e-8);
  CHECK(std::fabs(set.l2_prefactor_p.value - 1.551046691) <= 1e-8);
  CHECK(std::fabs(set.q_l1_prefactor.value - std::sqrt(6.0 / kPi)) <= 1e-15);
}

TEST_CASE("internal identities hold to combined error") {
  const ConstantsSet set = compute_constants(1e-12);
  const double b_closed =
      2.0 * std::exp(set.K.value) * std::pow(1.0 - 0.25 * std::exp(2.0 * set.K.value), -0.25);
  CHECK(std::fabs(set.B.value - b_closed) <= set.B.error + 1e-12);

  const double c2 = -0.5 * (kPi / set.w0.value) *
                    (std::cos(kPi * set.w0.value) / std::sin(kPi * set.w0.value));
  CHECK(std::fabs(set.C.value * set.C.value - c2) <= 2.0 * set.C.value * set.C.error + 1e-12);
  CHECK(set.A.value == doctest::Approx(2.0 * set.G.value / (3.0 * kPi)).epsilon(1e-15));
}

TEST_CASE("w0 residual and stationarity") {
  const ValueWithError w0 = compute_w0(1e-11);
  const auto F = [](double w) {
    return integrate_singular(
               [](double t) { return t == 0.0 ? 1.0 / kPi
                                              : t * std::cos(kPi * t) / std::sin(kPi * t); },
               0.0, w, 1e-13)
        .value;
  };
  CHECK(std::fabs(F(w0.value)) <= 1e-10);

  const double at_w0 = k_objective(w0.value);
  CHECK(k_objective(w0.value - 1e-4) < at_w0);
  CHECK(k_objective(w0.value + 1e-4) < at_w0);
}

TEST_CASE("C^2 agrees with the curvature of the K objective") {
  const ValueWithError w0 = compute_w0(1e-12);
  const ValueWithError c = compute_C(w0);
  // phi''(w0) = -2 C^2 by the cotangent identity; central differences.
  const double h = 1e-3;
  const double second = (k_objective(w0.value + h) - 2.0 * k_objective(w0.value) +
                         k_objective(w0.value - h)) / (h * h);
  CHECK(std::fabs(-0.5 * second - c.value * c.value) <= 1e-4);
}

TEST_CASE("B is increasing in K near the computed value") {
  const ValueWithError K = compute_K(compute_w0(1e-12), 1e-12);
  const double below = compute_B({K.value - 1e-4, 0.0}).value;
  const double above = compute_B({K.value + 1e-4, 0.0}).value;
  CHECK(below < above);
}

TEST_CASE("catalan series basics") {
  const ValueWithError g = compute_catalan(1e-13);
  CHECK(g.value < 1.0);  // alternating series, first term 1 is an upper bound
  CHECK(g.value > 1.0 - 1.0 / 9.0);
  CHECK(g.error <= 1e-13);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(compute_B({0.8, 0.0}), std::domain_error);  // e^{1.6} > 4 fails the radicand
  CHECK_THROWS_AS(compute_C({0.3, 0.0}), std::domain_error);  // cot(pi w0) > 0
  CHECK_THROWS_AS(compute_w0(1e-14), std::domain_error);      // below the tol floor
}

}  // TEST_SUITE
