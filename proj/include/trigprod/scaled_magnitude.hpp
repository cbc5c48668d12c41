#ifndef TRIGPROD_SCALED_MAGNITUDE_HPP
#define TRIGPROD_SCALED_MAGNITUDE_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace trigprod {

/// A nonnegative real stored as its natural log, so magnitudes like e^{Kn}
/// or 2^n survive without overflow. Exact zero is the -inf sentinel.
/// The stored log is finite or -inf, never NaN.
class ScaledMagnitude {
 public:
  ScaledMagnitude() : log_(-std::numeric_limits<double>::infinity()) {}

  static ScaledMagnitude zero() { return ScaledMagnitude(); }

  static ScaledMagnitude from_log(double log_value) {
    if (std::isnan(log_value)) {
      throw std::domain_error("ScaledMagnitude: log value is NaN");
    }
    if (log_value == std::numeric_limits<double>::infinity()) {
      throw std::domain_error("ScaledMagnitude: log value is +inf");
    }
    ScaledMagnitude m;
    m.log_ = log_value;
    return m;
  }

  static ScaledMagnitude from_value(double v) {
    if (std::isnan(v) || v < 0.0) {
      throw std::domain_error("ScaledMagnitude: value must be a nonnegative real");
    }
    if (v == 0.0) return zero();
    return from_log(std::log(v));
  }

  bool is_zero() const { return std::isinf(log_) && log_ < 0.0; }
  double log_value() const { return log_; }
  /// exp(log); overflows to +inf for magnitudes beyond double range.
  double value() const { return is_zero() ? 0.0 : std::exp(log_); }

  ScaledMagnitude& operator*=(const ScaledMagnitude& o) {
    if (is_zero() || o.is_zero()) {
      *this = zero();  // -inf absorbs
    } else {
      log_ += o.log_;
    }
    return *this;
  }

  friend ScaledMagnitude operator*(ScaledMagnitude a, const ScaledMagnitude& b) {
    a *= b;
    return a;
  }

  friend ScaledMagnitude operator/(const ScaledMagnitude& a, const ScaledMagnitude& b) {
    if (b.is_zero()) throw std::domain_error("ScaledMagnitude: division by zero");
    if (a.is_zero()) return zero();
    return from_log(a.log_ - b.log_);
  }

  friend ScaledMagnitude pow(const ScaledMagnitude& a, double e) {
    if (a.is_zero()) {
      if (e <= 0.0) throw std::domain_error("ScaledMagnitude: 0 to a nonpositive power");
      return zero();
    }
    return from_log(a.log_ * e);
  }

  friend bool operator<(const ScaledMagnitude& a, const ScaledMagnitude& b) { return a.log_ < b.log_; }
  friend bool operator>(const ScaledMagnitude& a, const ScaledMagnitude& b) { return b < a; }
  friend bool operator<=(const ScaledMagnitude& a, const ScaledMagnitude& b) { return !(b < a); }
  friend bool operator>=(const ScaledMagnitude& a, const ScaledMagnitude& b) { return !(a < b); }
  friend bool operator==(const ScaledMagnitude& a, const ScaledMagnitude& b) { return a.log_ == b.log_; }

 private:
  double log_;
};

}  // namespace trigprod

#endif
