#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "higgs/eigen_support.hpp"

namespace ph {

template <class T>
size_t pivot_cost(const T&) {
  return 0;
}

inline size_t pivot_cost(const Cplx& a) {
  // larger magnitude is better; invert into a cost
  double m = std::abs(a);
  return m >= 1e300 ? 0 : static_cast<size_t>(1e6 / (1.0 + m));
}

// Gaussian elimination with full pivoting. On exact fields any nonzero pivot
// is valid; the cheapest one keeps coefficient growth down.
template <class K>
std::vector<K> linear_solve(MatX<K> A, std::vector<K> b) {
  const int n = static_cast<int>(A.rows());
  if (A.cols() != n || static_cast<int>(b.size()) != n)
    fail(Err::SingularSystem, "linear_solve expects a square system");
  std::vector<int> col(n);
  for (int j = 0; j < n; ++j) col[j] = j;
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    int pr = -1, pc = -1;
    size_t best = std::numeric_limits<size_t>::max();
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        if (is_zero(A(i, j))) continue;
        size_t c = pivot_cost(A(i, j));
        if (c < best) {
          best = c;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    ++rank;
    if (pr != k) {
      A.row(pr).swap(A.row(k));
      std::swap(b[pr], b[k]);
    }
    if (pc != k) {
      A.col(pc).swap(A.col(k));
      std::swap(col[pc], col[k]);
    }
    K inv = K(1) / A(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (is_zero(A(i, k))) continue;
      K f = A(i, k) * inv;
      for (int j = k; j < n; ++j) A(i, j) = A(i, j) - f * A(k, j);
      b[i] = b[i] - f * b[k];
    }
  }
  if (rank < n)
    fail(Err::SingularSystem, "singular system, rank defect " + std::to_string(n - rank));
  std::vector<K> y(n, K(0));
  for (int i = n - 1; i >= 0; --i) {
    K s = b[i];
    for (int j = i + 1; j < n; ++j) s = s - A(i, j) * y[j];
    y[i] = s / A(i, i);
  }
  std::vector<K> x(n, K(0));
  for (int j = 0; j < n; ++j) x[col[j]] = y[j];
  return x;
}

// Interpolation through (q_i, p_i) by the factorization V^{-1} = U L:
// L holds the divided-difference weights, U converts the Newton basis
// prod_{k<j}(z - q_k) to monomials. Indices are 1-based as in the recurrences.
template <class K>
std::vector<K> vandermonde_inverse_apply(const std::vector<K>& q, const std::vector<K>& p) {
  const int m = static_cast<int>(q.size());
  if (static_cast<int>(p.size()) != m) fail(Err::DuplicateNode, "node/value length mismatch");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (is_zero(q[i] - q[j])) fail(Err::DuplicateNode, "duplicate interpolation node");
  // l(i,j) = prod_{k<=i, k!=j} 1/(q_j - q_k) for j <= i
  MatX<K> l = MatX<K>::Constant(m + 1, m + 1, K(0));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= i; ++j) {
      K d(1);
      for (int k = 1; k <= i; ++k)
        if (k != j) d = d * (q[j - 1] - q[k - 1]);
      l(i, j) = K(1) / d;
    }
  // u(i,j): coefficient of z^{i-1} in prod_{k<j}(z - q_k)
  MatX<K> u = MatX<K>::Constant(m + 2, m + 1, K(0));
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= m; ++i) {
      if (i == j) {
        u(i, j) = K(1);
      } else if (j == 1) {
        u(i, j) = K(0);
      } else {
        u(i, j) = u(i - 1, j - 1) - u(i, j - 1) * q[j - 2];
      }
    }
  std::vector<K> a(m, K(0));
  for (int i = 0; i < m; ++i) {
    K s(0);
    for (int j = 1; j <= m; ++j) {
      if (is_zero(u(i + 1, j))) continue;
      K t(0);
      for (int k = 1; k <= j; ++k) t = t + l(j, k) * p[k - 1];
      s = s + u(i + 1, j) * t;
    }
    a[i] = s;
  }
  return a;
}

template <class K>
Poly<K> interpolate(const std::vector<K>& q, const std::vector<K>& p) {
  return Poly<K>(vandermonde_inverse_apply(q, p));
}

}  // namespace ph
