#pragma once

#include <cstddef>

#include "dynpricer/vec.hpp"

namespace dynpricer {

// Dense symmetric matrix, row-major. Sizes here are tiny (d <= ~10).
class SymMatrix {
 public:
  SymMatrix() = default;
  SymMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}
  static SymMatrix from_rows(const std::vector<Vec>& rows);
  static SymMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Vec multiply(const Vec& x) const;

 private:
  std::size_t n_ = 0;
  Vec a_;
};

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
// ascending order. Converges quadratically; plenty for desk-scale sizes.
Vec symmetric_eigenvalues(const SymMatrix& m, int max_sweeps = 64);

double min_eigenvalue(const SymMatrix& m);
double max_eigenvalue(const SymMatrix& m);

}  // namespace dynpricer
