#pragma once

#include <functional>

#include "dynpricer/core_types.hpp"

namespace dynpricer {
namespace sgd {

// Projection domain for the descent engines: a feasible set, the
// intersection of a nonnegative orthant with an l2 ball (the restricted
// price space), or a box-capped simplex (the shrunk bundle space in
// unit-demand mode).
class Domain {
 public:
  static Domain feasible(FeasibleSet f);
  // {x >= 0 : ||x||_2 <= radius}. Projection clamps to the orthant first,
  // then scales radially; that composition is the exact Euclidean
  // projection onto the intersection.
  static Domain nonneg_ball(std::size_t dim, double radius);
  // {x : sum x = 1, lower <= x <= upper}.
  static Domain capped_simplex(Vec lower, Vec upper);

  std::size_t dim() const;
  double diameter() const;
  Vec project(const Vec& y) const;
  bool contains(const Vec& x, double tol = kMembershipTol) const;

 private:
  Domain() = default;
  enum class Kind { Feasible, NonnegBall, CappedSimplex } kind_ = Kind::Feasible;
  FeasibleSet f_ = FeasibleSet::simplex(1);
  std::size_t dim_ = 0;
  double radius_ = 0.0;
  Vec lower_, upper_;
};

struct DescentConfig {
  std::size_t iterations = 1;  // T
  double step = 0.0;           // eta; the analyzed schedule is D/(G sqrt(T))
  Domain domain;
  Vec start;
  double grad_bound = 0.0;     // G
  double diameter = 0.0;       // D (informational; step is explicit)
  double perturb_bound = 0.0;  // E, sgd_perturbed only
};

struct DescentResult {
  Vec average;  // z = (1/T) sum_{t=1..T} x_t
  Vec last;
  std::vector<Vec> iterates;  // x_1 .. x_T, recorded when keep_iterates
};

using GradientFn = std::function<Vec(const Vec&)>;

// Projected subgradient descent with unbiased stochastic gradients:
// x_{t+1} = proj(x_t - eta g_t), output the uniform average of x_1..x_T.
// Suboptimality of the average is 2DG/sqrt(T) in expectation when
// eta = D/(G sqrt(T)). A gradient with ||g|| > G fails fast: the premise
// of that guarantee is broken.
DescentResult sgd_unbiased(const GradientFn& grad_estimator, const DescentConfig& cfg,
                           bool keep_iterates = false);

// Exact subgradients with adversarially perturbed iterates:
// x_{t+1} = proj(x_t - eta g_t) + xi_t with ||xi_t|| <= E and every x_t
// required to stay in the domain. Average satisfies
// f(z) <= min f + DG/sqrt(T) + GE sqrt(T) at eta = D/(G sqrt(T)).
DescentResult sgd_perturbed(const GradientFn& subgradient, const GradientFn& perturb,
                            const DescentConfig& cfg, bool keep_iterates = false);

}  // namespace sgd
}  // namespace dynpricer
