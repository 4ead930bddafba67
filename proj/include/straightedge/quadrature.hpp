#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "straightedge/errors.hpp"

namespace straightedge {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  int max_subdivisions = 200;
};

inline void validate(const QuadratureConfig& qc) {
  if (!(qc.rel_tol > 0.0) || !(qc.abs_tol > 0.0))
    throw Error("quadrature tolerances must be positive");
  if (qc.max_subdivisions < 10) throw Error("max_subdivisions must be at least 10");
}

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGk15WeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGk15WeightsG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

template <class F>
Panel gk15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv[15];  // 2j / 2j+1 hold the node pair for kGk15Nodes[j]; 14 the center
  double result_g = 0.0;
  double result_k = 0.0;

  const double fc = f(center);
  result_k = fc * kGk15WeightsK[7];
  result_g = fc * kGk15WeightsG[3];
  fv[14] = fc;

  for (int j = 0; j < 7; ++j) {
    const double dx = half * kGk15Nodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    result_k += kGk15WeightsK[j] * (f1 + f2);
    if (j % 2 == 1) result_g += kGk15WeightsG[j / 2] * (f1 + f2);
  }

  const double mean = result_k * 0.5;
  double resasc = kGk15WeightsK[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kGk15WeightsK[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
  resasc *= std::abs(half);

  const double value = result_k * half;
  double err = std::abs((result_k - result_g) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  return Panel{a, b, value, err};
}

}  // namespace detail

/// Adaptive quadrature of f over [a, b] with an embedded-rule error estimate.
/// The worst panel (ties broken by left endpoint) is bisected until the
/// summed estimate meets max(abs_tol, rel_tol * |integral|); panels are
/// summed in ascending order so the result is independent of split history.
/// Throws QuadratureNonConvergence when max_subdivisions is exhausted.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& qc) {
  validate(qc);
  if (!(b > a)) return QuadratureResult{0.0, 0.0, 0};

  std::vector<detail::Panel> panels;
  panels.reserve(32);
  panels.push_back(detail::gk15(f, a, b));

  auto tally = [&panels]() {
    std::sort(panels.begin(), panels.end(),
              [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
    double sum = 0.0, comp = 0.0, err = 0.0;
    for (const auto& p : panels) {
      // Neumaier compensated accumulation
      const double t = sum + p.value;
      if (std::abs(sum) >= std::abs(p.value))
        comp += (sum - t) + p.value;
      else
        comp += (p.value - t) + sum;
      sum = t;
      err += p.error;
    }
    return std::pair<double, double>{sum + comp, err};
  };

  for (int split = 0; split < qc.max_subdivisions; ++split) {
    auto [total, err] = tally();
    if (err <= std::max(qc.abs_tol, qc.rel_tol * std::abs(total)))
      return QuadratureResult{total, err, static_cast<int>(panels.size())};

    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    const detail::Panel bad = panels[worst];
    const double mid = 0.5 * (bad.a + bad.b);
    if (!(mid > bad.a && mid < bad.b)) break;  // interval exhausted at machine precision
    panels[worst] = detail::gk15(f, bad.a, mid);
    panels.push_back(detail::gk15(f, mid, bad.b));
  }

  auto [total, err] = tally();
  if (err <= std::max(qc.abs_tol, qc.rel_tol * std::abs(total)))
    return QuadratureResult{total, err, static_cast<int>(panels.size())};
  throw QuadratureNonConvergence("adaptive quadrature failed to meet tolerance", err);
}

}  // namespace straightedge
