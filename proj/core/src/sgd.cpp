#include "dynpricer/sgd.hpp"

#include <cmath>
#include <string>

#include "dynpricer/errors.hpp"

namespace dynpricer {
namespace sgd {

Domain Domain::feasible(FeasibleSet f) {
  Domain d;
  d.kind_ = Kind::Feasible;
  d.dim_ = f.dim();
  d.f_ = std::move(f);
  return d;
}

Domain Domain::nonneg_ball(std::size_t dim, double radius) {
  if (!(radius > 0.0)) throw_invalid("Domain::nonneg_ball: radius must be positive");
  Domain d;
  d.kind_ = Kind::NonnegBall;
  d.dim_ = dim;
  d.radius_ = radius;
  return d;
}

Domain Domain::capped_simplex(Vec lower, Vec upper) {
  check_same_dim(lower, upper, "Domain::capped_simplex");
  Domain d;
  d.kind_ = Kind::CappedSimplex;
  d.dim_ = lower.size();
  d.lower_ = std::move(lower);
  d.upper_ = std::move(upper);
  // validates the box meets the simplex
  (void)project_capped_simplex(Vec(d.dim_, 1.0 / static_cast<double>(d.dim_)), d.lower_, d.upper_);
  return d;
}

std::size_t Domain::dim() const { return dim_; }

double Domain::diameter() const {
  switch (kind_) {
    case Kind::Feasible:
      return f_.diameter();
    case Kind::NonnegBall:
      // two orthant points a,b in the ball have <a,b> >= 0
      return radius_ * std::sqrt(2.0);
    case Kind::CappedSimplex:
      return norm2(sub(upper_, lower_));
  }
  return 0.0;
}

Vec Domain::project(const Vec& y) const {
  if (y.size() != dim_) throw_invalid("Domain::project: dimension mismatch");
  switch (kind_) {
    case Kind::Feasible:
      return f_.project(y);
    case Kind::NonnegBall: {
      Vec z(y.size());
      for (std::size_t j = 0; j < y.size(); ++j) z[j] = std::max(y[j], 0.0);
      double n = norm2(z);
      if (n > radius_) {
        double s = radius_ / n;
        for (double& zj : z) zj *= s;
      }
      return z;
    }
    case Kind::CappedSimplex:
      return project_capped_simplex(y, lower_, upper_);
  }
  return y;
}

bool Domain::contains(const Vec& x, double tol) const {
  if (x.size() != dim_) return false;
  switch (kind_) {
    case Kind::Feasible:
      return f_.contains(x, tol);
    case Kind::NonnegBall: {
      for (double xj : x)
        if (xj < -tol) return false;
      return norm2(x) <= radius_ + tol;
    }
    case Kind::CappedSimplex: {
      double s = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < lower_[j] - tol || x[j] > upper_[j] + tol) return false;
        s += x[j];
      }
      return std::fabs(s - 1.0) <= tol;
    }
  }
  return false;
}

namespace {

void validate_config(const DescentConfig& cfg) {
  if (cfg.iterations < 1) throw_invalid("DescentConfig: iterations must be >= 1");
  if (!(cfg.step > 0.0)) throw_invalid("DescentConfig: step must be positive");
  if (cfg.start.size() != cfg.domain.dim()) throw_invalid("DescentConfig: start dimension");
  if (!cfg.domain.contains(cfg.start)) throw_invalid("DescentConfig: start not in domain");
}

void check_grad(const Vec& g, double bound) {
  double n = norm2(g);
  if (bound > 0.0 && n > bound * (1.0 + 1e-9))
    throw BoundViolationError("gradient norm " + std::to_string(n) + " exceeds bound G = " +
                              std::to_string(bound));
}

}  // namespace

DescentResult sgd_unbiased(const GradientFn& grad_estimator, const DescentConfig& cfg,
                           bool keep_iterates) {
  validate_config(cfg);
  const std::size_t t_max = cfg.iterations;
  Vec x = cfg.start;
  Vec sum(x.size(), 0.0);
  DescentResult out;
  if (keep_iterates) out.iterates.reserve(t_max);
  for (std::size_t t = 0; t < t_max; ++t) {
    axpy(sum, 1.0, x);
    if (keep_iterates) out.iterates.push_back(x);
    Vec g = grad_estimator(x);
    check_same_dim(g, x, "sgd_unbiased gradient");
    check_grad(g, cfg.grad_bound);
    Vec y = x;
    axpy(y, -cfg.step, g);
    x = cfg.domain.project(y);
  }
  out.average = scale(sum, 1.0 / static_cast<double>(t_max));
  out.last = std::move(x);
  return out;
}

DescentResult sgd_perturbed(const GradientFn& subgradient, const GradientFn& perturb,
                            const DescentConfig& cfg, bool keep_iterates) {
  validate_config(cfg);
  const std::size_t t_max = cfg.iterations;
  Vec x = cfg.start;
  Vec sum(x.size(), 0.0);
  DescentResult out;
  if (keep_iterates) out.iterates.reserve(t_max);
  for (std::size_t t = 0; t < t_max; ++t) {
    axpy(sum, 1.0, x);
    if (keep_iterates) out.iterates.push_back(x);
    Vec g = subgradient(x);
    check_same_dim(g, x, "sgd_perturbed subgradient");
    check_grad(g, cfg.grad_bound);
    Vec y = x;
    axpy(y, -cfg.step, g);
    Vec projected = cfg.domain.project(y);
    Vec xi = perturb(projected);
    check_same_dim(xi, x, "sgd_perturbed perturbation");
    double xi_norm = norm2(xi);
    if (xi_norm > cfg.perturb_bound * (1.0 + 1e-9) && xi_norm > 1e-15)
      throw BoundViolationError("perturbation norm " + std::to_string(xi_norm) +
                                " exceeds bound E = " + std::to_string(cfg.perturb_bound));
    x = add(projected, xi);
    // The analysis requires every iterate to remain feasible; keeping the
    // perturbed point inside the domain is the caller's contract.
    if (!cfg.domain.contains(x, 1e-7))
      throw BoundViolationError("perturbed iterate left the domain");
  }
  out.average = scale(sum, 1.0 / static_cast<double>(t_max));
  out.last = std::move(x);
  return out;
}

}  // namespace sgd
}  // namespace dynpricer
