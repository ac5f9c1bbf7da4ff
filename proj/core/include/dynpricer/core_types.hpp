#pragma once

#include <cstddef>
#include <optional>

#include "dynpricer/vec.hpp"

namespace dynpricer {

// Absolute tolerance for set-membership checks; desk-scale magnitudes are O(1).
inline constexpr double kMembershipTol = 1e-9;

// Nonnegative price per good. In unit-demand mode the vector has length d+1
// and the last entry (the dummy "buy nothing" good) is exactly 0.
class PriceVector {
 public:
  explicit PriceVector(Vec entries);
  static PriceVector unit_demand(Vec entries);  // also requires back() == 0

  const Vec& entries() const { return v_; }
  double operator[](std::size_t j) const { return v_[j]; }
  std::size_t dim() const { return v_.size(); }

 private:
  Vec v_;
};

// Nonnegative quantity per good.
class Bundle {
 public:
  explicit Bundle(Vec entries);
  static Bundle zeros(std::size_t d) { return Bundle(Vec(d, 0.0)); }
  static Bundle one_hot(std::size_t d, std::size_t j);

  const Vec& entries() const { return v_; }
  double operator[](std::size_t j) const { return v_[j]; }
  std::size_t dim() const { return v_.size(); }

 private:
  Vec v_;
};

class CostVector {
 public:
  explicit CostVector(Vec entries);
  const Vec& entries() const { return v_; }
  double operator[](std::size_t j) const { return v_[j]; }
  std::size_t dim() const { return v_.size(); }

 private:
  Vec v_;
};

// Strictly positive per-good supply bound on the expected per-round purchase.
class SupplyVector {
 public:
  explicit SupplyVector(Vec entries);
  const Vec& entries() const { return v_; }
  double operator[](std::size_t j) const { return v_[j]; }
  std::size_t dim() const { return v_.size(); }
  double min_entry() const;

 private:
  Vec v_;
};

// Convex, closed feasible bundle set. Two variants: an axis-aligned box with
// lower < upper coordinatewise, and the probability simplex in R^dim.
// norm_bound is R with sup_{x in F} ||x||_2 <= R.
class FeasibleSet {
 public:
  enum class Kind { Box, Simplex };

  static FeasibleSet box(Vec lower, Vec upper);
  static FeasibleSet simplex(std::size_t dim);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return lower_.size(); }
  const Vec& lower() const { return lower_; }  // Box only
  const Vec& upper() const { return upper_; }  // Box only
  double norm_bound() const { return norm_bound_; }
  double diameter() const;  // l2 diameter

  bool contains(const Vec& x, double tol = kMembershipTol) const;
  Vec project(const Vec& y) const;
  Vec center() const;

 private:
  FeasibleSet() = default;
  Kind kind_ = Kind::Box;
  Vec lower_, upper_;
  double norm_bound_ = 0.0;
};

// argmin_{x in F} ||x - y||_2. Box: coordinatewise clamp. Simplex:
// sort-and-threshold, exact in finitely many operations.
Bundle project(const FeasibleSet& f, const Vec& y);

// Exact Euclidean projection onto the unit simplex.
Vec project_simplex(const Vec& y);

// Euclidean projection onto {x : sum x = 1, lower <= x <= upper} by bisection
// on the shift dual; requires sum(lower) <= 1 <= sum(upper).
Vec project_capped_simplex(const Vec& y, const Vec& lower, const Vec& upper);

// S_xi for the Box case: lower_j = max(F.lower_j, xi), upper_j = min(F.upper_j,
// s_j - xi). Throws InfeasibleShrinkError naming the first empty coordinate.
FeasibleSet shrunk_box(const FeasibleSet& f, const SupplyVector& s, double xi);

}  // namespace dynpricer
