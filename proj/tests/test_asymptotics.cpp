#include "trigprod/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trigprod/coeffs.hpp"
#include "trigprod/pointeval.hpp"

using namespace trigprod;

namespace {

constexpr double kPi = std::numbers::pi;

const ConstantsSet& consts() {
  static const ConstantsSet set = compute_constants(1e-12);
  return set;
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("formula transcription") {
  const ConstantsSet& c = consts();
  CHECK(asymptotic_value(TheoremTag::t1, 100, 0.0, c).log_value() ==
        doctest::Approx(std::log(c.B.value) + 100.0 * c.K.value - std::log(100.0)).epsilon(1e-14));
  CHECK(asymptotic_value(TheoremTag::t7, 64, 0.0, c).log_value() ==
        doctest::Approx(64.0 * std::numbers::ln2 + 0.5 * std::log(6.0 / kPi) -
                        1.5 * std::log(64.0)).epsilon(1e-14));
  // Theorem 2 at p = 1 must collapse to the L1 form B e^{Kn} / n.
  CHECK(asymptotic_value(TheoremTag::t2, 50, 1.0, c).log_value() ==
        doctest::Approx(asymptotic_value(TheoremTag::t1, 50, 0.0, c).log_value()).epsilon(1e-13));
  CHECK_THROWS_AS(asymptotic_value(TheoremTag::littlewood, 10, 0.0, c), std::invalid_argument);
}

TEST_CASE("theorem tag names round-trip") {
  for (TheoremTag tag : {TheoremTag::t1, TheoremTag::t4, TheoremTag::bigpoint,
                         TheoremTag::wright_coeff, TheoremTag::pentagonal}) {
    CHECK(theorem_tag_from_string(to_string(tag)) == tag);
  }
  CHECK_THROWS_AS(theorem_tag_from_string("T9"), std::invalid_argument);
}

TEST_CASE("wright linf ratio report") {
  const VerificationReport report = verify_wright_linf_coeff({25, 50, 100}, consts());
  CHECK(report.pass);
  CHECK(report.observed.size() == 3);
  // far from B at tiny n is expected and allowed by the trend contract
  const VerificationReport tiny = verify_wright_linf_coeff({1}, consts(), 1e9);
  CHECK(tiny.observed[0] == doctest::Approx(std::exp(-consts().K.value)).epsilon(1e-12));
}

TEST_CASE("bigpoint band") {
  const VerificationReport report = verify_bigpoint(200, consts());
  CHECK(report.pass);
  CHECK(report.extras.at("argmax_n") == 2.0);
  CHECK(report.extras.at("fitted_c0") == doctest::Approx(0.8249320244).epsilon(1e-6));
  // the band formula at one n, by hand
  const double observed_5 =
      (log_abs_pn_at_3pi_over_2n(5).log_value() - consts().A.value * 5.0) / std::log(5.0);
  CHECK(report.observed[3] == doctest::Approx(observed_5).epsilon(1e-14));
}

TEST_CASE("bigsmall inequality") {
  // degenerate n = 1 case by hand: |P_1(3 pi/2)| = sqrt 2 <= sqrt(2.2 * 2) * ||P_1||_2
  const double lhs = log_abs_pn_at_3pi_over_2n(1).value();
  const double rhs = std::sqrt(2.2 * 1.0 * 2.0) * std::sqrt(2.0);
  CHECK(lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(lhs <= rhs);
  CHECK(verify_bigsmall(60).pass);
}

TEST_CASE("littlewood and pentagonal sweeps") {
  CHECK(verify_littlewood_count(60).pass);
  CHECK(verify_pentagonal(100).pass);
}

TEST_CASE("wallis integrals") {
  CHECK(wallis_integral(1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wallis_integral(2) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
  CHECK(wallis_integral(100) * std::sqrt(102.0) ==
        doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(0.02));
  CHECK(verify_wallis_bound(40).pass);
}

TEST_CASE("qhat maximum") {
  const CoefficientTable q4 = qn_coefficients(4);
  CHECK(q4.coeffs == std::vector<BigInt>{1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1});
  BigInt max = 0;
  for (const BigInt& c : q4.coeffs) max = std::max(max, c);
  CHECK(max == 2);
  CHECK(q4.coeffs[5] == max);  // attained at floor(N/2)

  const VerificationReport report = verify_qhat_max({50, 100, 200});
  CHECK(report.pass);
  CHECK(report.observed.back() ==
        doctest::Approx(std::sqrt(6.0 / kPi)).epsilon(0.02));
}

TEST_CASE("wright coefficient formulas") {
  const ConstantsSet& c = consts();
  // plain variant at k = N/2 (N even for n = 120)
  const int n = 120;
  const std::int64_t big_n = triangular(n);
  const WrightCoefficientParams params{n, big_n / 2};
  const double l = params.l(c.w0.value);
  CHECK(l == doctest::Approx((1.5 * big_n) * c.w0.value / n - 0.25 * n).epsilon(1e-12));
  const SignedMagnitude plain = wright_coefficient_formula(params, c, WrightVariant::plain);
  const double expected = (c.B.value * std::exp(c.K.value * n) / n) * std::cos(2.0 * kPi * l);
  CHECK(plain.real() == doctest::Approx(expected).epsilon(1e-9));

  // gaussian variant at m = 0 collapses to (B/n) e^{Kn} cos(n pi / 2)
  const SignedMagnitude center = wright_coefficient_formula(params, c, WrightVariant::gaussian);
  CHECK(center.real() ==
        doctest::Approx(c.B.value * std::exp(c.K.value * n) / n).epsilon(1e-9));

  const VerificationReport window = verify_wright_coefficient_window(60, c);
  CHECK(window.pass);
  CHECK(window.extras.at("pearson") >= 0.99);
}

TEST_CASE("conjecture ratio series") {
  const ConstantsSet& c = consts();
  // ||Qhat||_1 = 2^n exactly, so the p = 1 ratio is 1 for every n.
  for (const RatioRow& row : conjecture_ratio_series(ProductKind::Q, 1.0, 60, c)) {
    CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-9));
  }
  // p = 2 for P: Parseval + Theorem 2 pin the plateau near the L2 prefactor.
  const std::vector<RatioRow> rows = conjecture_ratio_series(ProductKind::P, 2.0, 200, c);
  CHECK(rows.back().n == 200);
  CHECK(rows.back().ratio == doctest::Approx(c.l2_prefactor_p.value).epsilon(0.02));
}

TEST_CASE("lp ratio runners") {
  CHECK(verify_lp_ratio(TheoremTag::t2, {25, 50, 100}, 2.0, consts()).pass);
  CHECK(verify_lp_ratio(TheoremTag::t6, {25, 50, 100}, 1.0, consts(), 0.10).pass);
  CHECK_THROWS_AS(verify_lp_ratio(TheoremTag::t1, {10}, 1.0, consts()), std::invalid_argument);
}

}  // TEST_SUITE
