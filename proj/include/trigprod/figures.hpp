#ifndef TRIGPROD_FIGURES_HPP
#define TRIGPROD_FIGURES_HPP

#include <filesystem>

#include "trigprod/constants.hpp"

namespace trigprod {

/// One of the six paper figures as a CSV emitter.
///   1: prod_{k<=10} 2|sin(k theta)| on [0, pi/2], 2048 samples
///   2: ||P_n||_1 / (e^{Kn} n^{-1}),      n = 1..n_max (captioned 400)
///   3: ||P_n||_2 / (e^{Kn} n^{-1/4}),    n = 1..n_max (captioned 400)
///   4: prod_{k<=10} 2|cos(k theta)| on [0, pi/2], 2048 samples
///   5: ||Phat_n||_1 / (e^{Kn} n^{1/2}),  n = 1..n_max (captioned 500)
///   6: ||Qhat_n||_3 / (2^n n^{-1}),      n = 1..n_max (captioned 400)
struct FigureSpec {
  int id;
  int n_max;  // 0 means the captioned range
  std::filesystem::path out;
};

int captioned_n_max(int figure_id);

/// Writes the CSV; a partial file is removed on failure.
void emit_figure(const FigureSpec& spec, const ConstantsSet& consts);

}  // namespace trigprod

#endif
