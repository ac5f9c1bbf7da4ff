#include "dynpricer/ground_truth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dynpricer/market_ground_truth.hpp"

namespace dynpricer {
namespace {

bool all_separable_box(const MarketInstance& m) {
  if (m.feasible.kind() != FeasibleSet::Kind::Box) return false;
  for (std::size_t i = 0; i < m.distribution.num_types(); ++i)
    if (!m.distribution.type(i).as_separable()) return false;
  return true;
}

// Per-type demand for good j at price p, separable case.
double separable_coord_demand(const MarketInstance& m, std::size_t j, double price) {
  double demand = 0.0;
  for (std::size_t i = 0; i < m.distribution.num_types(); ++i) {
    const auto* s = m.distribution.type(i).as_separable();
    double lo = m.feasible.lower()[j], hi = m.feasible.upper()[j];
    double x;
    if (price <= 0.0) {
      x = hi;
    } else {
      x = std::clamp(std::pow(s->a[j] * s->exponent / price, 1.0 / (1.0 - s->exponent)), lo, hi);
    }
    demand += m.distribution.weight(i) * x;
  }
  return demand;
}

// The dual of SCP separates per coordinate for separable valuations on a
// box; minimize each h_j(p_j) exactly: demand_j is decreasing in p_j, so
// the optimum is p_j = 0 when even free goods clear, else the root of
// demand_j(p) = target_j.
ScpSolution solve_scp_separable(const MarketInstance& m, const Bundle& target) {
  const std::size_t d = m.dim();
  Vec prices(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    if (separable_coord_demand(m, j, 0.0) <= target[j]) {
      prices[j] = 0.0;
      continue;
    }
    double hi = 1.0;
    while (separable_coord_demand(m, j, hi) > target[j]) {
      hi *= 2.0;
      if (hi > 1e30) throw SolverFailure(hi, "solve_scp: dual price bracket blew up");
    }
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (separable_coord_demand(m, j, mid) > target[j])
        lo = mid;
      else
        hi = mid;
    }
    prices[j] = 0.5 * (lo + hi);
  }

  ScpSolution sol{.allocations = {}, .value = 0.0, .dual_prices = PriceVector(prices)};
  Vec demand(d, 0.0);
  for (std::size_t i = 0; i < m.distribution.num_types(); ++i) {
    Bundle x = m.type_response(i, sol.dual_prices);
    axpy(demand, m.distribution.weight(i), x.entries());
    sol.value += m.distribution.weight(i) * m.distribution.type(i).value(x);
    sol.allocations.push_back(std::move(x));
  }
  sol.saturation_residuals = sub(demand, target.entries());
  sol.residual_norm = norm2(sol.saturation_residuals);
  sol.converged = true;
  return sol;
}

ScpSolution solve_scp_descent(const MarketInstance& m, const Bundle& target,
                              const ScpOptions& opts) {
  const std::size_t d = m.dim();
  Vec p(d, 1.0);
  Vec p_sum(d, 0.0);
  Vec best_p = p;
  double best_merit = std::numeric_limits<double>::infinity();

  auto merit = [&](const Vec& prices, Vec* demand_out) {
    PriceVector pv(prices);
    Bundle demand = expected_demand(m, pv);
    if (demand_out) *demand_out = demand.entries();
    // feasibility of the dualized constraints plus complementary slackness;
    // both vanish at the exact dual optimum even when constraints are slack
    double feas = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      feas = std::max(feas, demand[j] - target[j]);
      comp += prices[j] * std::max(target[j] - demand[j], 0.0);
    }
    return std::max(feas, comp / (1.0 + norm1(prices)));
  };

  std::size_t t = 0;
  for (t = 1; t <= opts.max_iterations; ++t) {
    Vec demand;
    double mer = merit(p, &demand);
    if (mer < best_merit) {
      best_merit = mer;
      best_p = p;
      if (best_merit <= opts.tol) break;
    }
    axpy(p_sum, 1.0, p);
    if (t % 128 == 0) {
      Vec avg = scale(p_sum, 1.0 / static_cast<double>(t));
      double avg_mer = merit(avg, nullptr);
      if (avg_mer < best_merit) {
        best_merit = avg_mer;
        best_p = avg;
        if (best_merit <= opts.tol) break;
      }
    }
    double step = opts.step0 / std::sqrt(static_cast<double>(t));
    for (std::size_t j = 0; j < d; ++j) {
      p[j] -= step * (target[j] - demand[j]);
      p[j] = std::clamp(p[j], 0.0, opts.price_cap);
    }
  }

  ScpSolution sol{.allocations = {}, .value = 0.0, .dual_prices = PriceVector(best_p)};
  Vec demand(d, 0.0);
  for (std::size_t i = 0; i < m.distribution.num_types(); ++i) {
    Bundle x = m.type_response(i, sol.dual_prices);
    axpy(demand, m.distribution.weight(i), x.entries());
    sol.value += m.distribution.weight(i) * m.distribution.type(i).value(x);
    sol.allocations.push_back(std::move(x));
  }
  sol.saturation_residuals = sub(demand, target.entries());
  sol.residual_norm = norm2(sol.saturation_residuals);
  sol.converged = best_merit <= opts.tol;

  if (!sol.converged) {
    // Desk-scale fallback: certify the value against the primal brute force.
    if (m.dim() <= 2) {
      sol.value = grid_scp_value(m, target, 1e-3);
      sol.used_grid_fallback = true;
    } else {
      throw SolverFailure(best_merit, "solve_scp: dual descent did not converge, merit " +
                                          std::to_string(best_merit));
    }
  }
  return sol;
}

}  // namespace

ScpSolution solve_scp(const MarketInstance& m, const Bundle& target, const ScpOptions& opts) {
  if (m.mode() != MarketMode::Divisible)
    throw_invalid("solve_scp: divisible-goods markets only");
  if (target.dim() != m.dim()) throw_invalid("solve_scp: dimension mismatch");
  if (!m.feasible.contains(target.entries()))
    throw_invalid("solve_scp: target must lie in the feasible set");
  for (std::size_t j = 0; j < target.dim(); ++j)
    if (!(target[j] > 0.0)) throw_invalid("solve_scp: target must be strictly positive");

  if (all_separable_box(m)) return solve_scp_separable(m, target);
  return solve_scp_descent(m, target, opts);
}

double grid_scp_value(const MarketInstance& m, const Bundle& target, double resolution) {
  if (m.mode() != MarketMode::Divisible)
    throw_invalid("grid_scp_value: divisible-goods markets only");
  const std::size_t n = m.distribution.num_types();
  const std::size_t d = m.dim();

  if (all_separable_box(m) && n <= 2) {
    // The program separates per good; brute-force the first type's share,
    // give the remainder to the second.
    double total = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      double lo = m.feasible.lower()[j], hi = m.feasible.upper()[j];
      const auto* s0 = m.distribution.type(0).as_separable();
      double w0 = m.distribution.weight(0);
      double best = -std::numeric_limits<double>::infinity();
      if (n == 1) {
        for (double t = lo; t <= std::min(hi, target[j] / w0) + 1e-15; t += resolution) {
          best = std::max(best, w0 * s0->a[j] * std::pow(t, s0->exponent));
        }
      } else {
        const auto* s1 = m.distribution.type(1).as_separable();
        double w1 = m.distribution.weight(1);
        for (double t = lo; t <= hi + 1e-15; t += resolution) {
          double rest = (target[j] - w0 * t) / w1;
          double t1 = std::clamp(rest, lo, hi);
          if (w0 * t + w1 * t1 > target[j] + 1e-12) continue;
          double val = w0 * s0->a[j] * std::pow(t, s0->exponent) +
                       w1 * s1->a[j] * std::pow(t1, s1->exponent);
          best = std::max(best, val);
        }
      }
      if (!std::isfinite(best)) throw_invalid("grid_scp_value: empty grid");
      total += best;
    }
    return total;
  }

  if (n == 1 && d <= 2 && m.feasible.kind() == FeasibleSet::Kind::Box) {
    const Valuation& v = m.distribution.type(0);
    double lo0 = m.feasible.lower()[0];
    double hi0 = std::min(m.feasible.upper()[0], target[0]);
    double best = -std::numeric_limits<double>::infinity();
    if (d == 1) {
      for (double x0 = lo0; x0 <= hi0 + 1e-15; x0 += resolution)
        best = std::max(best, v.value(Bundle(Vec{x0})));
    } else {
      double lo1 = m.feasible.lower()[1];
      double hi1 = std::min(m.feasible.upper()[1], target[1]);
      for (double x0 = lo0; x0 <= hi0 + 1e-15; x0 += resolution)
        for (double x1 = lo1; x1 <= hi1 + 1e-15; x1 += resolution)
          best = std::max(best, v.value(Bundle(Vec{x0, x1})));
    }
    return best;
  }

  throw_invalid("grid_scp_value: unsupported instance shape for the grid oracle");
}

double sw_of_bundle(const MarketInstance& m, const Bundle& target) {
  return solve_scp(m, target).value - dot(m.costs.entries(), target.entries());
}

namespace {

double opt_lottery_unit_demand(const MarketInstance& m, const SupplyVector& s) {
  const std::size_t n = m.distribution.num_types();
  const std::size_t k = m.dim();  // d + 1 including the dummy
  LpProblem lp;
  lp.c.assign(n * k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& v = m.distribution.type(i).as_unit_demand()->values;
    for (std::size_t j = 0; j < k; ++j)
      lp.c[i * k + j] = m.distribution.weight(i) * (v[j] - m.costs[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec row(n * k, 0.0);
    for (std::size_t j = 0; j < k; ++j) row[i * k + j] = 1.0;
    lp.a_eq.push_back(std::move(row));
    lp.b_eq.push_back(1.0);
  }
  for (std::size_t j = 0; j < k; ++j) {
    Vec row(n * k, 0.0);
    for (std::size_t i = 0; i < n; ++i) row[i * k + j] = m.distribution.weight(i);
    lp.a_ub.push_back(std::move(row));
    lp.b_ub.push_back(s[j]);
  }
  LpResult res = solve_lp(lp);
  if (res.status != LpStatus::Optimal)
    throw std::logic_error("opt_lottery: lottery LP must be feasible and bounded");
  LpCertificate cert = verify_lp_certificate(lp, res);
  if (!cert.ok)
    throw SolverFailure(cert.max_violation, "opt_lottery: LP optimality certificate failed");
  return res.value;
}

double opt_lottery_divisible(const MarketInstance& m, const SupplyVector& s) {
  const std::size_t d = m.dim();
  // Ascent domain: supply-capped box floored away from zero so every
  // iterate is a valid SCP target.
  const double floor = 1e-6;
  Vec lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    hi[j] = std::min(m.feasible.upper()[j], s[j]);
    lo[j] = std::max(m.feasible.lower()[j], std::min(floor, 0.5 * hi[j]));
    if (!(lo[j] < hi[j])) throw_invalid("opt_lottery: empty supply-capped set");
  }
  FeasibleSet domain = FeasibleSet::box(lo, hi);

  Vec x = domain.center();
  double best = -std::numeric_limits<double>::infinity();
  const std::size_t iters = 400;
  double step0 = 0.25 * domain.diameter();
  for (std::size_t t = 1; t <= iters; ++t) {
    ScpSolution sol = solve_scp(m, Bundle(x));
    double sw = sol.value - dot(m.costs.entries(), x);
    best = std::max(best, sw);
    Vec g = sub(sol.dual_prices.entries(), m.costs.entries());
    axpy(x, step0 / std::sqrt(static_cast<double>(t)), g);
    x = domain.project(x);
  }
  ScpSolution last = solve_scp(m, Bundle(x));
  best = std::max(best, last.value - dot(m.costs.entries(), x));
  return best;
}

}  // namespace

double opt_lottery(const MarketInstance& m, const SupplyVector& s) {
  if (s.dim() != m.dim()) throw_invalid("opt_lottery: dimension mismatch");
  if (m.mode() == MarketMode::UnitDemand) return opt_lottery_unit_demand(m, s);
  return opt_lottery_divisible(m, s);
}

bool check_saturation(const ScpSolution& sol, const Bundle& target, double tol) {
  if (sol.saturation_residuals.size() != target.dim())
    throw_invalid("check_saturation: dimension mismatch");
  return norm_inf(sol.saturation_residuals) <= tol;
}

StructuralReport structural_checks(const MarketInstance& m, int trials, Rng& rng, double tol) {
  if (m.mode() != MarketMode::Divisible)
    throw_invalid("structural_checks: divisible-goods markets only");
  const std::size_t d = m.dim();
  AssumptionParams ap = m.assumption_params();
  bool all_monotone = true;
  for (std::size_t i = 0; i < m.distribution.num_types(); ++i)
    all_monotone = all_monotone && m.distribution.type(i).monotone();

  auto draw_interior = [&](Rng& r) {
    Vec x(d);
    for (std::size_t j = 0; j < d; ++j) {
      double lo = m.feasible.lower()[j], hi = m.feasible.upper()[j];
      double margin = 0.05 * (hi - lo);
      x[j] = r.uniform(std::max(lo + margin, 1e-3), hi - margin);
    }
    return Bundle(std::move(x));
  };

  StructuralReport rep;
  rep.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    Rng r = rng.stream(static_cast<std::uint64_t>(trial));
    Bundle x = draw_interior(r);
    Bundle y = draw_interior(r);

    ScpSolution sx = solve_scp(m, x);
    ScpSolution sy = solve_scp(m, y);
    double sw_x = sx.value - dot(m.costs.entries(), x.entries());
    double sw_y = sy.value - dot(m.costs.entries(), y.entries());

    Vec mid(d);
    for (std::size_t j = 0; j < d; ++j) mid[j] = 0.5 * (x[j] + y[j]);
    double sw_mid = sw_of_bundle(m, Bundle(mid));
    ++rep.concavity_checked;
    if (sw_mid < 0.5 * (sw_x + sw_y) - tol)
      rep.violations.push_back(
          {"concavity", x.entries(), y.entries(), sw_mid, 0.5 * (sw_x + sw_y)});

    double holder_lhs = std::fabs(sx.value - sy.value);
    double holder_rhs = std::pow(static_cast<double>(d), 1.0 - ap.beta) * ap.lambda *
                        std::pow(norm1(sub(x.entries(), y.entries())), ap.beta);
    ++rep.holder_checked;
    if (holder_lhs > holder_rhs + tol)
      rep.violations.push_back({"holder", x.entries(), y.entries(), holder_lhs, holder_rhs});

    Vec supergrad = sub(sx.dual_prices.entries(), m.costs.entries());
    double lin = sw_x + dot(supergrad, sub(y.entries(), x.entries()));
    ++rep.supergradient_checked;
    if (sw_y > lin + tol)
      rep.violations.push_back({"supergradient", x.entries(), y.entries(), sw_y, lin});

    if (all_monotone) {
      ++rep.saturation_checked;
      if (!check_saturation(sx, x))
        rep.violations.push_back(
            {"saturation", x.entries(), x.entries(), norm_inf(sx.saturation_residuals), 0.0});
    }
  }
  return rep;
}

}  // namespace dynpricer
