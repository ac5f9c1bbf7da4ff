#include "dynpricer/valuations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dynpricer {

Valuation Valuation::separable_power(Vec a, double exponent, const FeasibleSet& domain) {
  if (a.size() != domain.dim()) throw_invalid("separable_power: dimension mismatch");
  for (double aj : a)
    if (!(aj > 0.0)) throw_invalid("separable_power: coefficients must be positive");
  if (!(exponent > 0.0) || !(exponent < 1.0))
    throw_invalid("separable_power: exponent must lie in (0,1)");

  Valuation v;
  // |x^e - y^e| <= |x-y|^e for x,y >= 0, so sum_j a_j |dx_j|^e
  // <= (sum a_j) ||dx||_1^e.
  double lam = 0.0;
  // The Hessian diagonal -a e(1-e) x^{e-2} is smallest in magnitude at the
  // domain's upper corner, which gives a modulus valid over the whole box.
  double sig = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < a.size(); ++j) {
    lam += a[j];
    double uj = domain.upper()[j];
    sig = std::min(sig, a[j] * exponent * (1.0 - exponent) * std::pow(uj, exponent - 2.0));
  }
  v.v_ = SeparablePower{std::move(a), exponent};
  v.sigma_ = sig;
  v.lambda_ = std::max(1.0, lam);
  v.beta_ = exponent;
  v.monotone_ = true;
  return v;
}

Valuation Valuation::quadratic(Vec a, SymMatrix q, const FeasibleSet& domain) {
  if (a.size() != domain.dim() || q.size() != domain.dim())
    throw_invalid("quadratic: dimension mismatch");
  double sig = min_eigenvalue(q);
  if (!(sig > 0.0)) throw_invalid("quadratic: Q must be positive definite");

  Valuation v;
  v.sigma_ = sig;
  v.beta_ = 1.0;
  // Lipschitz constant w.r.t. l1: sup over the box of |(a - Qx)_k|.
  double lam = 0.0;
  bool monotone = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double hi = std::fabs(a[k]);
    double worst = a[k];
    for (std::size_t l = 0; l < a.size(); ++l) {
      double m = std::max(std::fabs(domain.lower()[l]), std::fabs(domain.upper()[l]));
      hi += std::fabs(q.at(k, l)) * m;
      worst -= q.at(k, l) > 0.0 ? q.at(k, l) * domain.upper()[l] : q.at(k, l) * domain.lower()[l];
    }
    lam = std::max(lam, hi);
    if (worst < 0.0) monotone = false;
  }
  v.lambda_ = std::max(1.0, lam);
  v.monotone_ = monotone;
  v.v_ = Quadratic{std::move(a), std::move(q)};
  return v;
}

Valuation Valuation::linear_unit_demand(Vec values) {
  if (values.size() < 2) throw_invalid("linear_unit_demand: needs d+1 entries");
  if (values.back() != 0.0) throw_invalid("linear_unit_demand: dummy good value must be 0");
  for (std::size_t j = 0; j + 1 < values.size(); ++j)
    if (!(values[j] > 0.0)) throw_invalid("linear_unit_demand: real-good values must be positive");

  Valuation v;
  v.sigma_ = 0.0;  // linear; the unit-demand pipeline regularizes
  v.beta_ = 1.0;
  v.lambda_ = std::max(1.0, norm_inf(values));
  v.monotone_ = true;
  v.v_ = LinearUnitDemand{std::move(values)};
  return v;
}

std::size_t Valuation::dim() const {
  if (auto* s = as_separable()) return s->a.size();
  if (auto* q = as_quadratic()) return q->a.size();
  return as_unit_demand()->values.size();
}

double Valuation::value(const Bundle& x) const {
  if (x.dim() != dim()) throw_invalid("Valuation::value: dimension mismatch");
  if (auto* s = as_separable()) {
    double out = 0.0;
    for (std::size_t j = 0; j < s->a.size(); ++j) out += s->a[j] * std::pow(x[j], s->exponent);
    return out;
  }
  if (auto* q = as_quadratic()) {
    Vec qx = q->q.multiply(x.entries());
    return dot(q->a, x.entries()) - 0.5 * dot(x.entries(), qx);
  }
  return dot(as_unit_demand()->values, x.entries());
}

Vec Valuation::gradient(const Bundle& x) const {
  if (x.dim() != dim()) throw_invalid("Valuation::gradient: dimension mismatch");
  if (auto* s = as_separable()) {
    Vec g(s->a.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (x[j] <= 0.0)
        throw SingularGradientError("separable_power gradient is unbounded at a zero coordinate");
      g[j] = s->a[j] * s->exponent * std::pow(x[j], s->exponent - 1.0);
    }
    return g;
  }
  if (auto* q = as_quadratic()) {
    Vec qx = q->q.multiply(x.entries());
    Vec g(q->a.size());
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = q->a[j] - qx[j];
    return g;
  }
  return as_unit_demand()->values;
}

namespace {

Bundle separable_box_response(const SeparablePower& s, const PriceVector& p,
                              const FeasibleSet& f) {
  Vec x(s.a.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    double lo = f.lower()[j], hi = f.upper()[j];
    if (p[j] <= 0.0) {
      x[j] = hi;  // marginal value always positive, take the cap
      continue;
    }
    double stat = std::pow(s.a[j] * s.exponent / p[j], 1.0 / (1.0 - s.exponent));
    x[j] = std::clamp(stat, lo, hi);
  }
  return Bundle(std::move(x));
}

Bundle projected_ascent_response(const Valuation& v, const PriceVector& p, const FeasibleSet& f) {
  const Quadratic* q = v.as_quadratic();
  double smooth = max_eigenvalue(q->q);
  double step = 1.0 / std::max(smooth, 1e-12);
  Vec x = f.center();
  double res = 0.0;
  for (int it = 0; it < kResponseMaxIter; ++it) {
    Vec qx = q->q.multiply(x);
    Vec g(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) g[j] = q->a[j] - qx[j] - p[j];
    Vec fixed = x;
    axpy(fixed, 1.0, g);
    res = dist2(f.project(fixed), x);
    if (res <= kResponseTol) return Bundle(x);
    Vec y = x;
    axpy(y, step, g);
    x = f.project(y);
  }
  throw SolverFailure(res, "best_response: projected ascent did not converge, residual " +
                               std::to_string(res));
}

}  // namespace

Bundle Valuation::best_response(const PriceVector& p, const FeasibleSet& f) const {
  if (p.dim() != dim() || f.dim() != dim())
    throw_invalid("best_response: dimension mismatch");
  if (auto* s = as_separable()) {
    if (f.kind() == FeasibleSet::Kind::Box) return separable_box_response(*s, p, f);
    throw_invalid("best_response: separable_power supports Box feasible sets only");
  }
  if (as_quadratic()) return projected_ascent_response(*this, p, f);
  // Linear valuation on the simplex: the maximizer is a vertex, i.e. the
  // unit-demand purchase.
  return Bundle::one_hot(dim(), unit_demand_choice(as_unit_demand()->values, p.entries()));
}

std::size_t unit_demand_choice(const Vec& values, const Vec& prices) {
  check_same_dim(values, prices, "unit_demand_choice");
  std::size_t best = 0;
  double best_u = values[0] - prices[0];
  for (std::size_t j = 1; j < values.size(); ++j) {
    double u = values[j] - prices[j];
    if (u > best_u) {
      best = j;
      best_u = u;
    }
  }
  return best;
}

std::size_t unit_demand_choice(const LinearUnitDemand& v, const PriceVector& p) {
  return unit_demand_choice(v.values, p.entries());
}

Vec regularized_response(const Vec& values, const Vec& prices, double eta) {
  check_same_dim(values, prices, "regularized_response");
  if (!(eta > 0.0)) throw_invalid("regularized_response: eta must be positive");
  Vec u(values.size());
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < u.size(); ++j) {
    u[j] = (values[j] - prices[j]) / eta;
    hi = std::max(hi, u[j]);
  }
  double z = 0.0;
  for (double& uj : u) {
    uj = std::exp(uj - hi);
    z += uj;
  }
  for (double& uj : u) uj /= z;
  return u;
}

double entropy(const Vec& x) {
  double h = 0.0;
  for (double xj : x) {
    if (xj > 0.0) h -= xj * std::log(xj);
  }
  return h;
}

double response_kkt_residual(const Valuation& v, const PriceVector& p, const FeasibleSet& f,
                             const Bundle& x) {
  Vec g = v.gradient(x);
  for (std::size_t j = 0; j < g.size(); ++j) g[j] -= p[j];
  Vec fixed = x.entries();
  axpy(fixed, 1.0, g);
  return dist2(f.project(fixed), x.entries());
}

}  // namespace dynpricer
