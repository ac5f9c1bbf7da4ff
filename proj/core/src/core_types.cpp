#include "dynpricer/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dynpricer {

PriceVector::PriceVector(Vec entries) : v_(std::move(entries)) {
  if (v_.empty()) throw_invalid("PriceVector: empty");
  if (!all_finite(v_)) throw_invalid("PriceVector: non-finite entry");
  for (double p : v_)
    if (p < 0.0) throw_invalid("PriceVector: negative entry");
}

PriceVector PriceVector::unit_demand(Vec entries) {
  PriceVector p(std::move(entries));
  if (p.v_.back() != 0.0) throw_invalid("PriceVector: dummy good must be priced 0");
  return p;
}

Bundle::Bundle(Vec entries) : v_(std::move(entries)) {
  if (v_.empty()) throw_invalid("Bundle: empty");
  if (!all_finite(v_)) throw_invalid("Bundle: non-finite entry");
  for (double x : v_)
    if (x < 0.0) throw_invalid("Bundle: negative entry");
}

Bundle Bundle::one_hot(std::size_t d, std::size_t j) {
  Vec v(d, 0.0);
  if (j >= d) throw_invalid("Bundle::one_hot: index out of range");
  v[j] = 1.0;
  return Bundle(std::move(v));
}

CostVector::CostVector(Vec entries) : v_(std::move(entries)) {
  if (v_.empty()) throw_invalid("CostVector: empty");
  if (!all_finite(v_)) throw_invalid("CostVector: non-finite entry");
  for (double c : v_)
    if (c < 0.0) throw_invalid("CostVector: negative entry");
}

SupplyVector::SupplyVector(Vec entries) : v_(std::move(entries)) {
  if (v_.empty()) throw_invalid("SupplyVector: empty");
  if (!all_finite(v_)) throw_invalid("SupplyVector: non-finite entry");
  for (double s : v_)
    if (s <= 0.0) throw_invalid("SupplyVector: entries must be strictly positive");
}

double SupplyVector::min_entry() const { return *std::min_element(v_.begin(), v_.end()); }

FeasibleSet FeasibleSet::box(Vec lower, Vec upper) {
  check_same_dim(lower, upper, "FeasibleSet::box");
  if (lower.empty()) throw_invalid("FeasibleSet::box: empty");
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!(lower[j] < upper[j]))
      throw_invalid("FeasibleSet::box: requires lower < upper at coordinate " + std::to_string(j));
  }
  FeasibleSet f;
  f.kind_ = Kind::Box;
  f.lower_ = std::move(lower);
  f.upper_ = std::move(upper);
  double s = 0.0;
  for (std::size_t j = 0; j < f.lower_.size(); ++j) {
    double m = std::max(std::fabs(f.lower_[j]), std::fabs(f.upper_[j]));
    s += m * m;
  }
  f.norm_bound_ = std::sqrt(s);
  return f;
}

FeasibleSet FeasibleSet::simplex(std::size_t dim) {
  if (dim == 0) throw_invalid("FeasibleSet::simplex: dim must be positive");
  FeasibleSet f;
  f.kind_ = Kind::Simplex;
  f.lower_ = Vec(dim, 0.0);
  f.upper_ = Vec(dim, 1.0);
  f.norm_bound_ = 1.0;  // vertices attain the sup
  return f;
}

double FeasibleSet::diameter() const {
  if (kind_ == Kind::Box) return norm2(sub(upper_, lower_));
  return std::sqrt(2.0);
}

bool FeasibleSet::contains(const Vec& x, double tol) const {
  if (x.size() != dim()) return false;
  if (kind_ == Kind::Box) {
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] < lower_[j] - tol || x[j] > upper_[j] + tol) return false;
    return true;
  }
  double s = 0.0;
  for (double xi : x) {
    if (xi < -tol) return false;
    s += xi;
  }
  return std::fabs(s - 1.0) <= tol;
}

Vec FeasibleSet::project(const Vec& y) const {
  if (y.size() != dim()) throw_invalid("FeasibleSet::project: dimension mismatch");
  if (!all_finite(y)) throw_invalid("FeasibleSet::project: non-finite input");
  if (kind_ == Kind::Box) {
    Vec x(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) x[j] = std::clamp(y[j], lower_[j], upper_[j]);
    return x;
  }
  return project_simplex(y);
}

Vec FeasibleSet::center() const {
  if (kind_ == Kind::Box) {
    Vec x(dim());
    for (std::size_t j = 0; j < dim(); ++j) x[j] = 0.5 * (lower_[j] + upper_[j]);
    return x;
  }
  return Vec(dim(), 1.0 / static_cast<double>(dim()));
}

Bundle project(const FeasibleSet& f, const Vec& y) { return Bundle(f.project(y)); }

Vec project_simplex(const Vec& y) {
  // Sort-and-threshold: find the largest k with y_(k) - theta_k > 0 where
  // theta_k = (sum of k largest - 1)/k, then clip at theta.
  const std::size_t n = y.size();
  Vec sorted = y;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cum = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cum += sorted[k];
    double t = (cum - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - t > 0.0) theta = t;
  }
  Vec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = std::max(y[j] - theta, 0.0);
  return x;
}

Vec project_capped_simplex(const Vec& y, const Vec& lower, const Vec& upper) {
  check_same_dim(y, lower, "project_capped_simplex");
  check_same_dim(y, upper, "project_capped_simplex");
  double lo_sum = std::accumulate(lower.begin(), lower.end(), 0.0);
  double up_sum = std::accumulate(upper.begin(), upper.end(), 0.0);
  if (lo_sum > 1.0 + 1e-12 || up_sum < 1.0 - 1e-12)
    throw_invalid("project_capped_simplex: box does not intersect the simplex");

  auto mass = [&](double tau) {
    double s = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) s += std::clamp(y[j] - tau, lower[j], upper[j]);
    return s;
  };
  // mass(tau) is nonincreasing; bracket the root and bisect.
  double max_y = *std::max_element(y.begin(), y.end());
  double min_y = *std::min_element(y.begin(), y.end());
  double max_u = *std::max_element(upper.begin(), upper.end());
  double min_l = *std::min_element(lower.begin(), lower.end());
  double lo = min_y - max_u - 1.0, hi = max_y - min_l + 1.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mass(mid) >= 1.0)
      lo = mid;
    else
      hi = mid;
  }
  double tau = 0.5 * (lo + hi);
  Vec x(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) x[j] = std::clamp(y[j] - tau, lower[j], upper[j]);
  return x;
}

FeasibleSet shrunk_box(const FeasibleSet& f, const SupplyVector& s, double xi) {
  if (f.kind() != FeasibleSet::Kind::Box) throw_invalid("shrunk_box: requires a Box feasible set");
  if (s.dim() != f.dim()) throw_invalid("shrunk_box: dimension mismatch");
  if (!(xi > 0.0) || !(xi < 0.5 * s.min_entry())) {
    std::size_t worst = 0;
    for (std::size_t j = 1; j < s.dim(); ++j)
      if (s[j] < s[worst]) worst = j;
    throw InfeasibleShrinkError(worst, "shrunk_box: requires 0 < xi < min_j s_j / 2 (coordinate " +
                                           std::to_string(worst) + ")");
  }
  Vec lo(f.dim()), up(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) {
    lo[j] = std::max(f.lower()[j], xi);
    up[j] = std::min(f.upper()[j], s[j] - xi);
    if (!(lo[j] < up[j]))
      throw InfeasibleShrinkError(
          j, "shrunk_box: empty interval at coordinate " + std::to_string(j));
  }
  return FeasibleSet::box(std::move(lo), std::move(up));
}

}  // namespace dynpricer
