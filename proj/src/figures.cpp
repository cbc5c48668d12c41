#include "trigprod/figures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "trigprod/asymptotics.hpp"
#include "trigprod/norms.hpp"
#include "trigprod/parallel.hpp"

namespace trigprod {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_samples_figure(std::ofstream& out, bool cosine) {
  constexpr int kSamples = 2048;
  constexpr int kN = 10;
  out << "theta,value\n";
  for (int i = 0; i < kSamples; ++i) {
    const double theta = (kPi / 2.0) * static_cast<double>(i) / (kSamples - 1);
    double value = 1.0;
    for (int k = 1; k <= kN; ++k) {
      value *= 2.0 * std::fabs(cosine ? std::cos(k * theta) : std::sin(k * theta));
    }
    out << fmt17(theta) << "," << fmt17(value) << "\n";
  }
}

void write_lp_figure(std::ofstream& out, int n_max, double p, double shift_exp,
                     const ConstantsSet& consts) {
  // ratio = ||P_n||_p / (e^{Kn} n^{shift_exp})
  std::vector<double> ratios(static_cast<std::size_t>(n_max));
  parallel_for_index(ratios.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    const NormResult norm = lp_norm_pn(n, p, 1e-9);
    ratios[i] = std::exp(norm.value.log_value() - consts.K.value * n -
                         shift_exp * std::log(static_cast<double>(n)));
  });
  out << "n,ratio\n";
  for (int n = 1; n <= n_max; ++n) {
    out << n << "," << fmt17(ratios[static_cast<std::size_t>(n - 1)]) << "\n";
  }
}

void write_coefficient_figure(std::ofstream& out, ProductKind kind, double p, int n_max,
                              const ConstantsSet& consts) {
  // Figures 5 and 6 plot ||Xhat_n||_p divided by e^{Kn} n^{1/2} (P, p=1) and
  // 2^n n^{-1} (Q, p=3); both equal the conjectured order at that p.
  const std::vector<RatioRow> rows = conjecture_ratio_series(kind, p, n_max, consts);
  out << "n,ratio\n";
  for (const RatioRow& row : rows) {
    out << row.n << "," << fmt17(row.ratio) << "\n";
  }
}

}  // namespace

int captioned_n_max(int figure_id) {
  switch (figure_id) {
    case 1:
    case 4: return 10;
    case 2:
    case 3: return 400;
    case 5: return 500;
    case 6: return 400;
    default: throw std::domain_error("figure id must be 1..6");
  }
}

void emit_figure(const FigureSpec& spec, const ConstantsSet& consts) {
  if (spec.id < 1 || spec.id > 6) throw std::domain_error("figure id must be 1..6");
  const int n_max = spec.n_max > 0 ? spec.n_max : captioned_n_max(spec.id);
  std::ofstream out(spec.out);
  if (!out) throw std::runtime_error("cannot open figure output: " + spec.out.string());
  try {
    switch (spec.id) {
      case 1: write_samples_figure(out, false); break;
      case 4: write_samples_figure(out, true); break;
      case 2: write_lp_figure(out, n_max, 1.0, -1.0, consts); break;
      case 3: write_lp_figure(out, n_max, 2.0, -0.25, consts); break;
      case 5: write_coefficient_figure(out, ProductKind::P, 1.0, n_max, consts); break;
      case 6: write_coefficient_figure(out, ProductKind::Q, 3.0, n_max, consts); break;
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + spec.out.string());
  } catch (...) {
    out.close();
    std::error_code ec;
    std::filesystem::remove(spec.out, ec);
    throw;
  }
}

}  // namespace trigprod
