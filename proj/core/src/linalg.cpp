#include "dynpricer/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace dynpricer {

SymMatrix SymMatrix::from_rows(const std::vector<Vec>& rows) {
  const std::size_t n = rows.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw_invalid("SymMatrix::from_rows: not square");
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs(m.at(i, j) - m.at(j, i)) > 1e-12)
        throw_invalid("SymMatrix::from_rows: not symmetric");
  return m;
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Vec SymMatrix::multiply(const Vec& x) const {
  if (x.size() != n_) throw_invalid("SymMatrix::multiply: dimension mismatch");
  Vec y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

Vec symmetric_eigenvalues(const SymMatrix& m, int max_sweeps) {
  SymMatrix a = m;
  const std::size_t n = a.size();
  if (n == 0) return {};
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  Vec eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a.at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double min_eigenvalue(const SymMatrix& m) { return symmetric_eigenvalues(m).front(); }
double max_eigenvalue(const SymMatrix& m) { return symmetric_eigenvalues(m).back(); }

}  // namespace dynpricer
