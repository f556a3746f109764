#pragma once

#include <functional>

namespace causal {

struct QuadOptions {
  double abs_tol = 1e-300;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
  int initial_pieces = 1;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

/// One 21-point Kronrod rule with its embedded 10-point Gauss estimate on [a, b].
struct KronrodEstimate {
  double kronrod;
  double gauss;
};
KronrodEstimate gauss_kronrod_21(const std::function<double(double)>& f, double a, double b);

/// Globally adaptive Gauss-Kronrod (10/21) quadrature on a finite interval; the
/// interval with the largest error estimate is bisected until the summed
/// estimate meets max(abs_tol, rel_tol |I|). Partial results are summed in
/// left-endpoint order.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadOptions& opt = {});

}  // namespace causal
