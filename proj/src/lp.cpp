#include "skein/lp.hpp"

#include <stdexcept>

namespace skein {

std::optional<QVector> lp_feasible(const QMatrix& A, const QVector& b) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  if (b.size() != m) throw std::invalid_argument("lp_feasible: size mismatch");
  // tableau [A | I | b] with artificial basis, rows flipped so b >= 0
  size_t cols = n + m;
  std::vector<QVector> T(m, QVector(cols + 1));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    int sg = b[i] < 0 ? -1 : 1;
    for (size_t j = 0; j < n; ++j) T[i][j] = sg * A[i][j];
    T[i][n + i] = 1;
    T[i][cols] = sg * b[i];
    basis[i] = n + i;
  }
  // phase one objective: minimise the artificial sum; reduced costs
  QVector cost(cols + 1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= cols; ++j)
      if (j < n || j == cols) cost[j] -= T[i][j];
  for (;;) {
    size_t enter = cols;
    for (size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    size_t leave = m;
    mpq_class best;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      mpq_class r = T[i][cols] / T[i][enter];
      if (leave == m || r < best || (r == best && basis[i] < basis[leave])) leave = i, best = r;
    }
    if (leave == m) break;  // unbounded cannot happen in phase one
    mpq_class piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      mpq_class f = T[i][enter];
      for (size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    mpq_class f = cost[enter];
    for (size_t j = 0; j <= cols; ++j) cost[j] -= f * T[leave][j];
    basis[leave] = enter;
  }
  // cost[cols] is minus the artificial sum
  if (cost[cols] != 0) return std::nullopt;
  QVector x(n);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][cols];
  return x;
}

namespace {

// reduced row echelon form in place, returns pivot columns
std::vector<size_t> rref(QMatrix& A, size_t ncols) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < A.size(); ++c) {
    size_t p = r;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    mpq_class d = A[r][c];
    for (auto& v : A[r]) v /= d;
    for (size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      mpq_class f = A[i][c];
      for (size_t j = 0; j < A[i].size(); ++j) A[i][j] -= f * A[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

int rank(QMatrix A) {
  if (A.empty()) return 0;
  return static_cast<int>(rref(A, A[0].size()).size());
}

AffineSpace solve_linear(const QMatrix& A, const QVector& b) {
  AffineSpace out;
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  QMatrix M(m);
  for (size_t i = 0; i < m; ++i) {
    M[i] = A[i];
    M[i].push_back(b[i]);
  }
  auto piv = rref(M, n);
  for (size_t i = piv.size(); i < m; ++i)
    if (M[i][n] != 0) {
      out.consistent = false;
      return out;
    }
  out.particular.assign(n, 0);
  std::vector<bool> is_piv(n, false);
  for (size_t r = 0; r < piv.size(); ++r) {
    out.particular[piv[r]] = M[r][n];
    is_piv[piv[r]] = true;
  }
  for (size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    QVector v(n);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -M[r][f];
    out.kernel.push_back(v);
  }
  return out;
}

}  // namespace skein
