#include "straightedge/continuous.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "straightedge/detail/edge_pair.hpp"
#include "straightedge/detail/numeric.hpp"
#include "straightedge/parallel.hpp"

namespace straightedge {

double aux_f(const AuxParams& params, double ell1, double ell2) {
  const double denom = params.alpha + params.beta * ell1 + params.gamma * ell2;
  if (!(denom > 0.0))
    throw NonPositiveDenominator("straightness integrand denominator not positive");
  const Eigen::Vector2d q = params.base + ell2 * params.dir2 - ell1 * params.dir1;
  return q.norm() / denom;
}

namespace {

// Relative perpendicular offset below which a configuration is treated as
// collinear (the quadratic under the root degenerates to a perfect square).
constexpr double kCollinearEps = 1e-7;

bool collinear_config(const Eigen::Vector2d& w, const Eigen::Vector2d& dir2, double span) {
  const double h = detail::cross2(w, dir2);
  const double scale = std::max({w.norm(), std::abs(span), 1e-300});
  return std::abs(h) <= kCollinearEps * scale;
}

}  // namespace

double antiderivative_F(const AuxParams& params, double ell1, double ell2) {
  const Eigen::Vector2d w = params.base - ell1 * params.dir1;
  const double b = 2.0 * w.dot(params.dir2);
  const double d = params.alpha + params.beta * ell1;
  const double e = params.gamma;
  const double t = d + e * ell2;
  if (!(t > 0.0))
    throw NonPositiveDenominator("route length not positive at evaluation point");

  if (collinear_config(w, params.dir2, ell2)) {
    // Perfect square under the root: the numerator is |ell2 + b/2|. The
    // antiderivative below is valid on intervals that do not straddle the
    // zero of the numerator.
    const double sign = (ell2 + 0.5 * b >= 0.0) ? 1.0 : -1.0;
    return sign * (t + (e * 0.5 * b - d) * std::log(t));
  }

  const double h = detail::cross2(w, params.dir2);
  const double disc = 4.0 * h * h;  // 4C - B^2, computed from geometry
  const double big_b = b * e - 2.0 * d;
  const double cap_c = (w - (e * d) * params.dir2).squaredNorm();
  const double q = (w + ell2 * params.dir2).squaredNorm();
  if (!(cap_c > 0.0) || !(q >= 0.0)) throw BranchUndefined("degenerate quadratic configuration");
  const double sq = std::sqrt(q);
  const double sc = std::sqrt(cap_c);

  const double two_t_b = 2.0 * t + big_b;
  const double log1 = two_t_b >= 0.0 ? std::log(2.0 * sq + two_t_b)
                                     : std::log(disc) - std::log(2.0 * sq - two_t_b);
  const double bt2c = big_b * t + 2.0 * cap_c;
  const double log2 = bt2c >= 0.0
                          ? std::log((bt2c + 2.0 * sc * sq) / t)
                          : std::log(disc * t) - std::log(2.0 * sc * sq - bt2c);
  const double value = e * (sq + 0.5 * big_b * log1 - sc * log2);
  if (!std::isfinite(value)) throw BranchUndefined("antiderivative overflowed");
  return value;
}

namespace {

using detail::NeumaierSum;

// Integral of aux_f(P, ell1, .) over [a2, b2], analytic where the closed form
// validates against a finite-difference derivative probe, adaptive quadrature
// of the integrand otherwise. Collinear configurations are split at the point
// where the numerator vanishes before evaluating the closed form.
double piece_integral(const AuxParams& params, double ell1, double a2, double b2,
                      const QuadratureConfig& qc) {
  if (!(b2 - a2 > 0.0)) return 0.0;
  const auto f = [&](double l2) { return aux_f(params, ell1, l2); };

  std::array<double, 3> cuts{a2, b2, b2};
  int n_cuts = 2;
  const Eigen::Vector2d w = params.base - ell1 * params.dir1;
  if (collinear_config(w, params.dir2, std::max(std::abs(a2), std::abs(b2)))) {
    const double crossing = -w.dot(params.dir2);
    if (crossing > a2 && crossing < b2) {
      cuts = {a2, crossing, b2};
      n_cuts = 3;
    }
  }

  double total = 0.0;
  for (int k = 0; k + 1 < n_cuts; ++k) {
    const double lo = cuts[static_cast<std::size_t>(k)];
    const double hi = cuts[static_cast<std::size_t>(k) + 1];
    bool analytic_ok = true;
    double value = 0.0;
    try {
      value = antiderivative_F(params, ell1, hi) - antiderivative_F(params, ell1, lo);
      const double mid = 0.5 * (lo + hi);
      const double step = std::min(0.25 * (hi - lo), 1e-5 * (1.0 + std::abs(mid)));
      if (step > 0.0) {
        const double fd = (antiderivative_F(params, ell1, mid + step) -
                           antiderivative_F(params, ell1, mid - step)) /
                          (2.0 * step);
        const double fm = f(mid);
        if (!(std::abs(fd - fm) <= 1e-5 * std::max(1.0, std::abs(fm)))) analytic_ok = false;
      }
      if (!std::isfinite(value)) analytic_ok = false;
    } catch (const BranchUndefined&) {
      analytic_ok = false;
    } catch (const NonPositiveDenominator&) {
      analytic_ok = false;
    }
    total += analytic_ok ? value : integrate_adaptive(f, lo, hi, qc).value;
  }
  return total;
}

struct EdgePairContext {
  detail::PairDistances pd;
  AuxParams f_u1u2, f_u1v2, f_v1u2, f_v1v2;
};

EdgePairContext make_context(const SpatialGraph& g, const DistanceProvider& dp, const EdgeKey& e1,
                             const EdgeKey& e2) {
  EdgePairContext ctx;
  ctx.pd = detail::pair_distances(g, dp, e1, e2);
  if (!ctx.pd.connected) return ctx;
  const Eigen::Vector2d base = g.coord(e2.u) - g.coord(e1.u);
  const Eigen::Vector2d dir1 = (g.coord(e1.v) - g.coord(e1.u)) / ctx.pd.len1;
  const Eigen::Vector2d dir2 = (g.coord(e2.v) - g.coord(e2.u)) / ctx.pd.len2;
  ctx.f_u1u2 = AuxParams{ctx.pd.d_u1u2, 1.0, 1.0, base, dir1, dir2};
  ctx.f_u1v2 = AuxParams{ctx.pd.d_u1v2 + ctx.pd.len2, 1.0, -1.0, base, dir1, dir2};
  ctx.f_v1u2 = AuxParams{ctx.pd.len1 + ctx.pd.d_v1u2, -1.0, 1.0, base, dir1, dir2};
  ctx.f_v1v2 = AuxParams{ctx.pd.len1 + ctx.pd.d_v1v2 + ctx.pd.len2, -1.0, -1.0, base, dir1, dir2};
  return ctx;
}

// Total straightness between the point at ell1 on e1 and the whole of e2:
// two analytic pieces split at the break-even position of the active case.
double inner_total(const EdgePairContext& ctx, double ell1, const QuadratureConfig& qc) {
  const int case_index = detail::select_case(ctx.pd, ell1);
  const double lambda = std::min(
      std::max(detail::raw_lambda_for_case(ctx.pd, ell1, case_index), 0.0), ctx.pd.len2);
  const AuxParams* first = nullptr;
  const AuxParams* second = nullptr;
  switch (case_index) {
    case 1: first = &ctx.f_u1u2; second = &ctx.f_u1v2; break;
    case 2: first = &ctx.f_u1u2; second = &ctx.f_v1v2; break;
    case 3: first = &ctx.f_v1u2; second = &ctx.f_u1v2; break;
    default: first = &ctx.f_v1u2; second = &ctx.f_v1v2; break;
  }
  return piece_integral(*first, ell1, 0.0, lambda, qc) +
         piece_integral(*second, ell1, lambda, ctx.pd.len2, qc);
}

bool point_on_edge(const SpatialGraph& g, const PointRef& p, const EdgeKey& target) {
  if (p.edge == target) return true;
  const auto w = point_vertex(g, p);
  return w.has_value() && (*w == target.u || *w == target.v);
}

}  // namespace

double total_straightness_point_edge(const SpatialGraph& g, const DistanceProvider& dp,
                                     const PointRef& p1, const EdgeKey& target,
                                     const QuadratureConfig& qc) {
  validate_point(g, p1);
  const double target_len = g.edge_length(g.edge_index(target));
  if (point_on_edge(g, p1, target)) return target_len;
  const EdgePairContext ctx = make_context(g, dp, p1.edge, target);
  if (!ctx.pd.connected) return 0.0;
  return inner_total(ctx, p1.ell, qc);
}

double avg_straightness_point_edge(const SpatialGraph& g, const DistanceProvider& dp,
                                   const PointRef& p1, const EdgeKey& target,
                                   const QuadratureConfig& qc) {
  const double target_len = g.edge_length(g.edge_index(target));
  return total_straightness_point_edge(g, dp, p1, target, qc) / target_len;
}

double avg_straightness_point_graph(const SpatialGraph& g, const DistanceProvider& dp,
                                    const PointRef& p1, const QuadratureConfig& qc) {
  validate_point(g, p1);
  if (g.edge_count() == 0) throw Error("graph has no edges");
  NeumaierSum num;
  for (std::int32_t i = 0; i < g.edge_count(); ++i)
    num.add(total_straightness_point_edge(g, dp, p1, g.edge(i), qc));
  return num.value() / g.total_edge_length();
}

double total_straightness_edge_edge(const SpatialGraph& g, const DistanceProvider& dp,
                                    const EdgeKey& e1, const EdgeKey& e2,
                                    const QuadratureConfig& qc) {
  const double len1 = g.edge_length(g.edge_index(e1));
  (void)g.edge_index(e2);
  if (e1 == e2) return len1 * len1 / 2.0;

  const EdgePairContext ctx = make_context(g, dp, e1, e2);
  if (!ctx.pd.connected) return 0.0;
  const auto& pd = ctx.pd;

  // Split the outer integral at every knot of the integrand: the break-even
  // positions of e1 for the target's end-vertices (either ordering), plus the
  // positions where the moving inner split reaches the ends of e2.
  std::vector<double> knots{0.0, pd.len1, pd.lam_u2, pd.lam_v2};
  const double k2 = pd.d_v1v2 - pd.d_u1u2 + pd.len1 + pd.len2;
  const double k3 = pd.d_u1v2 - pd.d_v1u2 - pd.len1 + pd.len2;
  for (const double c : {k2 / 2.0, k2 / 2.0 - pd.len2, -k3 / 2.0, pd.len2 - k3 / 2.0}) {
    if (c > 0.0 && c < pd.len1) knots.push_back(c);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end(),
                          [&](double a, double b) {
                            return std::abs(b - a) <= 1e-12 * std::max(1.0, pd.len1);
                          }),
              knots.end());

  NeumaierSum total;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const auto r = integrate_adaptive([&](double ell1) { return inner_total(ctx, ell1, qc); },
                                      knots[k], knots[k + 1], qc);
    total.add(r.value);
  }
  return total.value();
}

double avg_straightness_edge_edge(const SpatialGraph& g, const DistanceProvider& dp,
                                  const EdgeKey& e1, const EdgeKey& e2,
                                  const QuadratureConfig& qc) {
  if (e1 == e2) {
    (void)g.edge_index(e1);
    return 1.0;
  }
  const double len1 = g.edge_length(g.edge_index(e1));
  const double len2 = g.edge_length(g.edge_index(e2));
  return total_straightness_edge_edge(g, dp, e1, e2, qc) / (len1 * len2);
}

double avg_straightness_edge_graph(const SpatialGraph& g, const DistanceProvider& dp,
                                   const EdgeKey& e1, bool include_self,
                                   const QuadratureConfig& qc) {
  const double len1 = g.edge_length(g.edge_index(e1));
  NeumaierSum num;
  NeumaierSum den;
  for (std::int32_t i = 0; i < g.edge_count(); ++i) {
    const EdgeKey& e2 = g.edge(i);
    if (e2 == e1 && !include_self) continue;
    num.add(total_straightness_edge_edge(g, dp, e1, e2, qc));
    den.add(len1 * g.edge_length(i));
  }
  const double denominator = include_self ? den.value() - len1 * len1 / 2.0 : den.value();
  if (denominator == 0.0) return 0.0;  // single-edge graph with self excluded
  return num.value() / denominator;
}

double avg_straightness_graph(const SpatialGraph& g, const DistanceProvider& dp,
                              bool include_same_edge, const QuadratureConfig& qc) {
  const auto m = g.edge_count();
  if (m == 0) throw Error("graph has no edges");

  std::vector<double> num(static_cast<std::size_t>(m), 0.0);
  std::vector<double> den(static_cast<std::size_t>(m), 0.0);
  parallel_for(0, m, [&](std::int64_t i64) {
    const auto i = static_cast<std::int32_t>(i64);
    const EdgeKey& e1 = g.edge(i);
    const double len1 = g.edge_length(i);
    NeumaierSum row_num;
    NeumaierSum row_den;
    for (std::int32_t j = include_same_edge ? i : i + 1; j < m; ++j) {
      row_num.add(total_straightness_edge_edge(g, dp, e1, g.edge(j), qc));
      row_den.add(len1 * g.edge_length(j));
    }
    if (include_same_edge) row_den.add(-len1 * len1 / 2.0);
    num[static_cast<std::size_t>(i)] = row_num.value();
    den[static_cast<std::size_t>(i)] = row_den.value();
  });

  NeumaierSum total_num;
  NeumaierSum total_den;
  for (std::int32_t i = 0; i < m; ++i) {
    total_num.add(num[static_cast<std::size_t>(i)]);
    total_den.add(den[static_cast<std::size_t>(i)]);
  }
  const double denominator = total_den.value();
  if (denominator == 0.0) return 0.0;  // no eligible pairs (single edge, self excluded)
  return total_num.value() / denominator;
}

}  // namespace straightedge
