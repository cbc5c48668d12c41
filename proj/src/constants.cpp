#include "trigprod/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trigprod/quadrature.hpp"

namespace trigprod {

namespace {

constexpr double kPi = std::numbers::pi;

void check_tol(double tol) {
  if (!(tol >= 1e-13)) throw std::domain_error("constants require tol >= 1e-13");
}

// t cot(pi t) with the removable singularity at t = 0 filled by its limit.
double t_cot_pi_t(double t) {
  if (t == 0.0) return 1.0 / kPi;
  return t * std::cos(kPi * t) / std::sin(kPi * t);
}

double log_sin_pi_t(double t) { return std::log(std::sin(kPi * t)); }

IntegralResult integrate_t_cot(double w, double tol) {
  return integrate_singular(t_cot_pi_t, 0.0, w, tol);
}

}  // namespace

ValueWithError compute_w0(double tol) {
  check_tol(tol);
  const double quad_tol = std::fmin(tol * 0.1, 1e-13);
  const auto F = [quad_tol](double w) { return integrate_t_cot(w, quad_tol).value; };
  const RootResult root = find_root(F, 0.5, 0.95, tol);
  // Error: bracket width plus residual divided by F'(w0) = w0 cot(pi w0).
  const double slope = std::fabs(t_cot_pi_t(root.root));
  const double err = root.bracket_width + std::fabs(root.residual) / std::fmax(slope, 0.1) +
                     10.0 * quad_tol;
  return {root.root, err};
}

ValueWithError compute_K(ValueWithError w0, double tol) {
  check_tol(tol);
  const IntegralResult integral = integrate_singular(log_sin_pi_t, 0.0, w0.value, tol);
  const double value = std::numbers::ln2 + integral.value / w0.value;
  // The objective is stationary at w0, so the w0 error enters second order
  // with curvature 2 C^2.
  const double c2 = -0.5 * (kPi / w0.value) * (std::cos(kPi * w0.value) / std::sin(kPi * w0.value));
  const double err = integral.error_estimate / w0.value + std::fabs(c2) * w0.error * w0.error;
  return {value, err};
}

ValueWithError compute_B(ValueWithError K) {
  const double e2k = std::exp(2.0 * K.value);
  if (e2k >= 4.0) throw std::domain_error("compute_B requires e^{2K} < 4");
  const auto b_of = [](double k) {
    return 2.0 * std::exp(k) * std::pow(1.0 - 0.25 * std::exp(2.0 * k), -0.25);
  };
  const double value = b_of(K.value);
  const double h = 1e-6;
  const double slope = (b_of(K.value + h) - b_of(K.value - h)) / (2.0 * h);
  return {value, std::fabs(slope) * K.error + 1e-14 * value};
}

ValueWithError compute_C(ValueWithError w0) {
  const double radicand = -0.5 * (kPi / w0.value) *
                          (std::cos(kPi * w0.value) / std::sin(kPi * w0.value));
  if (!(radicand > 0.0)) {
    throw std::domain_error("compute_C requires cot(pi w0) < 0, i.e. w0 in (1/2, 1)");
  }
  const auto c_of = [](double w) {
    return std::sqrt(-0.5 * (kPi / w) * (std::cos(kPi * w) / std::sin(kPi * w)));
  };
  const double value = c_of(w0.value);
  const double h = 1e-6;
  const double slope = (c_of(w0.value + h) - c_of(w0.value - h)) / (2.0 * h);
  return {value, std::fabs(slope) * w0.error + 1e-14 * value};
}

ValueWithError compute_catalan(double tol) {
  check_tol(tol);
  // Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k a_k,
  // a_k = 1/(2k+1)^2; error falls like (3 + sqrt 8)^{-terms}.
  const int digits = static_cast<int>(std::ceil(-std::log10(tol))) + 2;
  const int terms = std::max(8, static_cast<int>(std::ceil(1.31 * digits)) + 2);
  double d = std::pow(3.0 + std::sqrt(8.0), terms);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    const double a = 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    c = b - c;
    sum += c * a;
    b = (k + terms) * (k - terms) * b / ((k + 0.5) * (k + 1.0));
  }
  const double value = sum / d;
  const double err = 3.0 / std::pow(3.0 + std::sqrt(8.0), terms) + 4e-16;
  return {value, std::fmax(err, 1e-16)};
}

void derived_prefactors(ConstantsSet& set) {
  const double b = set.B.value;
  const double c = set.C.value;
  const double rel_b = set.B.error / b;
  const double rel_c = set.C.error / c;

  set.e_K = {std::exp(set.K.value), std::exp(set.K.value) * set.K.error};
  set.e_A = {std::exp(set.A.value), std::exp(set.A.value) * set.A.error};

  const double l2 = std::pow(2.0, -0.75) * std::pow(kPi, -0.25) * b * std::sqrt(c);
  set.l2_prefactor_p = {l2, l2 * (rel_b + 0.5 * rel_c)};

  const double linf = b * c / std::sqrt(4.0 * kPi);
  set.linf_prefactor_p = {linf, linf * (rel_b + rel_c)};

  const double ql1 = std::sqrt(6.0 / kPi);
  set.q_l1_prefactor = {ql1, 1e-16};
}

ConstantsSet compute_constants(double tol) {
  check_tol(tol);
  ConstantsSet set;
  set.w0 = compute_w0(tol);
  set.K = compute_K(set.w0, tol);
  set.B = compute_B(set.K);
  set.C = compute_C(set.w0);
  set.G = compute_catalan(tol);
  set.A = {2.0 * set.G.value / (3.0 * kPi), 2.0 * set.G.error / (3.0 * kPi)};
  derived_prefactors(set);
  return set;
}

}  // namespace trigprod
