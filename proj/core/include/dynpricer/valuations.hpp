#pragma once

#include <cstddef>
#include <variant>

#include "dynpricer/core_types.hpp"
#include "dynpricer/linalg.hpp"

namespace dynpricer {

// v(x) = sum_j a_j x_j^exponent, a > 0, exponent in (0,1).
struct SeparablePower {
  Vec a;
  double exponent;
};

// v(x) = <a,x> - x'Qx/2 with Q symmetric positive definite.
struct Quadratic {
  Vec a;
  SymMatrix q;
};

// Unit-demand value vector of length d+1, last entry (dummy good) = 0,
// 0 < v_j for the real goods.
struct LinearUnitDemand {
  Vec values;
};

// One buyer type's valuation together with the constants the algorithms
// consume: strong-concavity modulus sigma and Hoelder constants (lambda,
// beta) w.r.t. the l1 norm, both derived from the variant and its domain.
class Valuation {
 public:
  static Valuation separable_power(Vec a, double exponent, const FeasibleSet& domain);
  static Valuation quadratic(Vec a, SymMatrix q, const FeasibleSet& domain);
  static Valuation linear_unit_demand(Vec values);

  bool is_unit_demand() const { return std::holds_alternative<LinearUnitDemand>(v_); }
  const SeparablePower* as_separable() const { return std::get_if<SeparablePower>(&v_); }
  const Quadratic* as_quadratic() const { return std::get_if<Quadratic>(&v_); }
  const LinearUnitDemand* as_unit_demand() const { return std::get_if<LinearUnitDemand>(&v_); }

  std::size_t dim() const;
  double sigma() const { return sigma_; }
  double lambda() const { return lambda_; }
  double beta() const { return beta_; }
  // Increasing in every coordinate over the construction domain. Quadratic
  // types can satiate inside the domain; they get flagged here rather than
  // rejected, and supply saturation is then checked, not assumed.
  bool monotone() const { return monotone_; }

  double value(const Bundle& x) const;
  Vec gradient(const Bundle& x) const;

  // argmax_{x in F} [v(x) - <p,x>]. SeparablePower on a Box uses the closed
  // form x_j = clamp((a_j e / p_j)^{1/(1-e)}, box); Quadratic runs projected
  // gradient ascent to KKT residual <= kResponseTol.
  Bundle best_response(const PriceVector& p, const FeasibleSet& f) const;

 private:
  std::variant<SeparablePower, Quadratic, LinearUnitDemand> v_;
  double sigma_ = 0.0;
  double lambda_ = 1.0;
  double beta_ = 1.0;
  bool monotone_ = true;
};

inline constexpr double kResponseTol = 1e-7;
inline constexpr int kResponseMaxIter = 100000;

// argmax_j (v_j - p_j) over j in [d+1], ties broken by lowest index.
// Prices are raw reals here: the perturbation pipeline feeds unconverted
// vectors through the same choice rule.
std::size_t unit_demand_choice(const Vec& values, const Vec& prices);
std::size_t unit_demand_choice(const LinearUnitDemand& v, const PriceVector& p);

// Maximizer of <v-p, x> + eta*H(x) over the simplex: the softmax
// x_j proportional to exp((v_j - p_j)/eta).
Vec regularized_response(const Vec& values, const Vec& prices, double eta);

// Entropy H(x) = sum x_j ln(1/x_j) with 0 ln(1/0) = 0.
double entropy(const Vec& x);

// Fixed-point optimality residual ||proj_F(x + grad u(x)) - x||_2 of the
// quasilinear objective u = v(x) - <p,x>; zero exactly at the maximizer.
double response_kkt_residual(const Valuation& v, const PriceVector& p, const FeasibleSet& f,
                             const Bundle& x);

}  // namespace dynpricer
