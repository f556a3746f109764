#include "causal/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace causal {

namespace {

// Kronrod abscissae; odd positions (1, 3, ..., 9) are the Gauss nodes
constexpr std::array<double, 11> kXgk{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525009422, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Piece {
  double a, b, value, error;
};

Piece evaluate(const std::function<double(double)>& f, double a, double b) {
  const auto e = gauss_kronrod_21(f, a, b);
  return {a, b, e.kronrod, std::fabs(e.kronrod - e.gauss)};
}

}  // namespace

KronrodEstimate gauss_kronrod_21(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[10] * fc;
  double g = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {k * h, g * h};
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadOptions& opt) {
  if (!(b >= a)) throw std::invalid_argument("integration bounds out of order");
  QuadResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  const auto worse = [](const Piece& x, const Piece& y) { return x.error < y.error; };
  std::priority_queue<Piece, std::vector<Piece>, decltype(worse)> heap(worse);
  const int pieces = std::max(1, opt.initial_pieces);
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + (b - a) * i / pieces;
    const double hi = i + 1 == pieces ? b : a + (b - a) * (i + 1) / pieces;
    heap.push(evaluate(f, lo, hi));
  }
  res.evaluations = 21 * pieces;

  const auto totals = [&] {
    std::vector<Piece> all;
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
    double v = 0.0, e = 0.0;
    for (const auto& p : all) {
      v += p.value;
      e += p.error;
    }
    return std::pair{v, e};
  };

  double value = 0.0, error = 0.0;
  for (;;) {
    std::tie(value, error) = totals();
    if (!std::isfinite(value)) break;
    if (error <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(value))) {
      res.converged = true;
      break;
    }
    if (static_cast<int>(heap.size()) >= opt.max_intervals) break;
    const Piece worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval at machine resolution
    heap.pop();
    heap.push(evaluate(f, worst.a, mid));
    heap.push(evaluate(f, mid, worst.b));
    res.evaluations += 42;
  }
  res.value = value;
  res.abs_error = error;
  res.intervals = static_cast<int>(heap.size());
  return res;
}

}  // namespace causal
