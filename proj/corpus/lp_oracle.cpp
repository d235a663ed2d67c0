#include "lp_oracle.hpp"

#include <cstddef>

namespace slopelab::corpus {

bool lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  if (m == 0) return true;
  const std::size_t n = A.front().size();
  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = Rational(1);
    T[i][cols - 1] = b[i];
    basis[i] = n + i;
  }
  // Objective: minimise the sum of artificials; reduced costs in row z.
  std::vector<Rational> z(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (j < n || j == cols - 1) z[j] -= T[i][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (z[j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter].sign() <= 0) continue;
      const Rational ratio = T[i][cols - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    const Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter].is_zero()) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (!z[enter].is_zero()) {
      const Rational f = z[enter];
      for (std::size_t j = 0; j < cols; ++j) z[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return z[cols - 1].is_zero();
}

bool newton_point_member(const std::vector<Monomial>& vertices, const Monomial& u, unsigned a) {
  const std::size_t k = vertices.size();
  const std::size_t n = u.nvars();
  // Variables: lambda_1..lambda_k, slack_1..slack_n.
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(k + n, Rational(0)));
  std::vector<Rational> b(n + 1);
  for (std::size_t i = 0; i < k; ++i) A[0][i] = Rational(1);
  b[0] = Rational(long(a));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) A[j + 1][i] = Rational(long(vertices[i][j]));
    A[j + 1][k + j] = Rational(1);
    b[j + 1] = Rational(long(u[j]));
  }
  return lp_feasible(A, b);
}

}  // namespace slopelab::corpus
