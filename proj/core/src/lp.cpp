#include "dynpricer/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dynpricer {
namespace {

constexpr double kPivotTol = 1e-9;

// Tableau simplex over: minimize f'z, G z = h, z >= 0, h >= 0.
// Basis starts at the artificial columns appended by the caller.
struct Tableau {
  std::size_t rows, cols;          // cols excludes the rhs column
  std::vector<Vec> t;              // rows x (cols + 1), last column = rhs
  Vec obj;                         // reduced-cost row, size cols + 1
  std::vector<std::size_t> basis;  // basis[i] = column basic in row i

  double rhs(std::size_t i) const { return t[i][cols]; }

  void pivot(std::size_t pr, std::size_t pc) {
    double piv = t[pr][pc];
    for (std::size_t j = 0; j <= cols; ++j) t[pr][j] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      double m = t[i][pc];
      if (m == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= m * t[pr][j];
    }
    double m = obj[pc];
    if (m != 0.0)
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= m * t[pr][j];
    basis[pr] = pc;
  }

  // Bland's rule: entering = lowest-index column with negative reduced cost,
  // leaving = tightest ratio with lowest basis index on ties.
  // Returns false when optimal; throws on unboundedness via the out-flag.
  bool step(bool* unbounded) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] < -kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter == cols) return false;
    std::size_t leave = rows;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] > kPivotTol) {
        double ratio = rhs(i) / t[i][enter];
        if (ratio < best - 1e-15 || (std::fabs(ratio - best) <= 1e-15 &&
                                     (leave == rows || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave == rows) {
      *unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }
};

// Solve B' y = f_B by Gaussian elimination with partial pivoting.
Vec solve_transposed(const std::vector<Vec>& basis_cols, const Vec& fb) {
  const std::size_t n = fb.size();
  std::vector<Vec> a(n, Vec(n + 1, 0.0));
  // Row i of B' is basis column i.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = basis_cols[i][j];
    a[i][n] = fb[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(a[i][k]) > std::fabs(a[piv][k])) piv = i;
    std::swap(a[k], a[piv]);
    if (std::fabs(a[k][k]) < 1e-12) continue;  // degenerate basis row, dual 0
    for (std::size_t i = k + 1; i < n; ++i) {
      double m = a[i][k] / a[k][k];
      if (m == 0.0) continue;
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= m * a[k][j];
    }
  }
  Vec y(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = a[k][n];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * y[j];
    y[k] = std::fabs(a[k][k]) < 1e-12 ? 0.0 : s / a[k][k];
  }
  return y;
}

}  // namespace

LpResult solve_lp(const LpProblem& p) {
  const std::size_t n = p.c.size();
  const std::size_t me = p.a_eq.size();
  const std::size_t mu = p.a_ub.size();
  const std::size_t m = me + mu;
  for (const auto& row : p.a_eq)
    if (row.size() != n) throw_invalid("solve_lp: a_eq row dimension mismatch");
  for (const auto& row : p.a_ub)
    if (row.size() != n) throw_invalid("solve_lp: a_ub row dimension mismatch");
  if (p.b_eq.size() != me || p.b_ub.size() != mu) throw_invalid("solve_lp: rhs size mismatch");

  // Standard form: columns = n originals, mu slacks, m artificials.
  const std::size_t n_slack = mu;
  const std::size_t n_art = m;
  const std::size_t cols = n + n_slack + n_art;

  Tableau tab;
  tab.rows = m;
  tab.cols = cols;
  tab.t.assign(m, Vec(cols + 1, 0.0));
  tab.basis.assign(m, 0);

  std::vector<double> row_sign(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& src = i < me ? p.a_eq[i] : p.a_ub[i - me];
    double b = i < me ? p.b_eq[i] : p.b_ub[i - me];
    double sgn = b < 0.0 ? -1.0 : 1.0;
    row_sign[i] = sgn;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sgn * src[j];
    if (i >= me) tab.t[i][n + (i - me)] = sgn;  // slack
    tab.t[i][n + n_slack + i] = 1.0;            // artificial
    tab.t[i][cols] = sgn * b;
    tab.basis[i] = n + n_slack + i;
  }

  // Phase 1: minimize the sum of artificials.
  tab.obj.assign(cols + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j) tab.obj[j] -= tab.t[i][j];
  for (std::size_t k = 0; k < n_art; ++k) tab.obj[n + n_slack + k] = 0.0;

  bool unbounded = false;
  while (tab.step(&unbounded)) {
  }
  LpResult res;
  if (-tab.obj[cols] > 1e-7) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  // Drive any artificial still basic out of the basis.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= n + n_slack) {
      for (std::size_t j = 0; j < n + n_slack; ++j) {
        if (std::fabs(tab.t[i][j]) > kPivotTol) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2: minimize -c (we maximize c). Artificials are frozen out by
  // giving them an effectively infinite cost.
  const double kBig = 1e12;
  Vec f(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) f[j] = -p.c[j];
  for (std::size_t k = 0; k < n_art; ++k) f[n + n_slack + k] = kBig;
  tab.obj.assign(cols + 1, 0.0);
  for (std::size_t j = 0; j < cols; ++j) tab.obj[j] = f[j];
  for (std::size_t i = 0; i < m; ++i) {
    double fb = f[tab.basis[i]];
    if (fb == 0.0) continue;
    for (std::size_t j = 0; j <= cols; ++j) tab.obj[j] -= fb * tab.t[i][j];
  }
  unbounded = false;
  while (tab.step(&unbounded)) {
  }
  if (unbounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  Vec z(cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) z[tab.basis[i]] = tab.rhs(i);
  res.x = Vec(z.begin(), z.begin() + n);
  res.value = dot(res.x, p.c);
  res.status = LpStatus::Optimal;

  // Duals from B'y = f_B over the original (sign-adjusted) columns.
  std::vector<Vec> basis_cols(m, Vec(m, 0.0));
  Vec fb(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t col = tab.basis[i];
    fb[i] = f[col];
    for (std::size_t r = 0; r < m; ++r) {
      const Vec& src = r < me ? p.a_eq[r] : p.a_ub[r - me];
      double v;
      if (col < n)
        v = row_sign[r] * src[col];
      else if (col < n + n_slack)
        v = (r == me + (col - n)) ? row_sign[r] : 0.0;
      else
        v = (r == col - n - n_slack) ? 1.0 : 0.0;
      basis_cols[i][r] = v;
    }
  }
  Vec y = solve_transposed(basis_cols, fb);
  // Undo row sign flips and the min/max flip.
  res.dual_eq.assign(me, 0.0);
  res.dual_ub.assign(mu, 0.0);
  for (std::size_t i = 0; i < me; ++i) res.dual_eq[i] = -row_sign[i] * y[i];
  for (std::size_t i = 0; i < mu; ++i) res.dual_ub[i] = std::max(0.0, -row_sign[me + i] * y[me + i]);
  return res;
}

LpCertificate verify_lp_certificate(const LpProblem& p, const LpResult& r, double tol) {
  LpCertificate cert;
  if (r.status != LpStatus::Optimal) return cert;
  const std::size_t n = p.c.size();
  double viol = 0.0;
  for (double xj : r.x) viol = std::max(viol, -xj);
  for (std::size_t i = 0; i < p.a_eq.size(); ++i)
    viol = std::max(viol, std::fabs(dot(p.a_eq[i], r.x) - p.b_eq[i]));
  for (std::size_t i = 0; i < p.a_ub.size(); ++i)
    viol = std::max(viol, dot(p.a_ub[i], r.x) - p.b_ub[i]);
  // Dual feasibility: c_j <= sum_i y_i Aeq_ij + sum_i mu_i Aub_ij, mu >= 0.
  for (double mu : r.dual_ub) viol = std::max(viol, -mu);
  for (std::size_t j = 0; j < n; ++j) {
    double lhs = p.c[j];
    for (std::size_t i = 0; i < p.a_eq.size(); ++i) lhs -= r.dual_eq[i] * p.a_eq[i][j];
    for (std::size_t i = 0; i < p.a_ub.size(); ++i) lhs -= r.dual_ub[i] * p.a_ub[i][j];
    viol = std::max(viol, lhs);
  }
  // Matching objectives close the certificate by weak duality.
  double dual_value = dot(r.dual_eq, p.b_eq) + dot(r.dual_ub, p.b_ub);
  viol = std::max(viol, std::fabs(dual_value - r.value));
  cert.max_violation = viol;
  cert.ok = viol <= tol;
  return cert;
}

}  // namespace dynpricer
