#pragma once

#include <optional>
#include <vector>

#include "higgs/limits.hpp"
#include "higgs/model.hpp"
#include "higgs/roots.hpp"

namespace ph {

// Exceptional-chart coordinate: p - eps nuhat_i = v (q - t_i).
template <class K>
struct Blowup {
  int pole = 0;  // 0-based finite pole index
  int eps = 1;
  K v{};
  friend bool operator==(const Blowup& a, const Blowup& b) {
    return a.pole == b.pole && a.eps == b.eps && a.v == b.v;
  }
};

// [1:q] with dual p, or [s:1] with dual u (stored in q and p).
template <class K>
struct Pair {
  bool inf = false;
  K q{}, p{};
  std::optional<Blowup<K>> blow;

  static Pair fin(K q, K p) { return Pair{false, std::move(q), std::move(p), std::nullopt}; }
  static Pair at_inf(K s, K u) { return Pair{true, std::move(s), std::move(u), std::nullopt}; }
  static Pair blown(K q, int pole, int eps, K v) {
    return Pair{false, std::move(q), K(0), Blowup<K>{pole, eps, std::move(v)}};
  }
  friend bool operator==(const Pair& a, const Pair& b) {
    return a.inf == b.inf && a.q == b.q && a.p == b.p && a.blow == b.blow;
  }
};

using ApparentPair = Pair<Rational>;

// Generic cluster at (x, y), or an exceptional one over (t_i, eps nuhat_i)
// with slope a. lambda has mult - 1 entries.
struct HilbCluster {
  bool exceptional = false;
  Rational x, y;
  int pole = 0, eps = 1;
  Rational a;
  int mult = 1;
  std::vector<Rational> lambda;
};

struct HilbChart {
  std::vector<HilbCluster> clusters;
};

// Dual parameters that could not be expressed over Q.
struct FloatPair {
  Cplx q, p;
  std::string note;
};

struct ExtractResult {
  std::vector<ApparentPair> pairs;
  std::vector<FloatPair> approx;
  bool used_float = false;
};

Rational blowup_coord(const Rational& q, const Rational& p, int pole, int eps, const Spectral& S);

// [s:1] with s != 0 -> [1:1/s], p = u q^{n-2}; blow-up data is kept.
ApparentPair canonical(const ApparentPair& a, int n);
std::vector<ApparentPair> canonical_sorted(std::vector<ApparentPair> v, int n);

ExtractResult extract(const FieldMatrix<Rational>& F, const Spectral& S,
                      const std::vector<Rational>& sigma_zeros = {}, bool allow_float = false);

// lambda at a sigma-zero: G'(q) = 2 p lambda
Rational sigma_lambda(const FieldMatrix<Rational>& F, const Rational& q, const Rational& p);

FieldMatrix<Rational> reconstruct_hilb(const HilbChart& H, const Spectral& S);

namespace detail {

template <class K>
K eps_nuhat(const SpectralData<K>& S, int pole, int eps) {
  return K(eps) * S.nu_hat(pole);
}

// a b_top = value at infinity, where a is f21's coefficient at its bound
template <class K>
K infinity_rhs(const SpectralData<K>& S, const K& a11, int k, bool conn) {
  const K& nu = S.nu[S.n - 1];
  if (!conn) return nu * nu - a11 * a11;
  K ak = a11 + K(k);
  return nu * nu - nu - ak * (ak + K(1));
}

template <class K>
int pole_hit(const SpectralData<K>& S, const K& q) {
  for (int i = 0; i < S.n - 1; ++i)
    if (is_zero(q - S.t[i])) return i;
  return -1;
}

}  // namespace detail

// k = 0 reconstruction from n-3 pairs (Thm-3.2 style normal form: f11 of
// degree <= n-4, f21 = prod (s_j z - 1) prod (z - q_j)). Pairs sitting on a
// finite pole must carry blow-up data; f12 always comes from the linear
// residue conditions.
template <class K>
FieldMatrix<K> reconstruct(const std::vector<Pair<K>>& pairs, const SpectralData<K>& S) {
  const int n = S.n;
  const bool conn = S.flavor == Flavor::Connection;
  if (static_cast<int>(pairs.size()) != n - 3)
    fail(Err::UsageError, "reconstruct needs n-3 = " + std::to_string(n - 3) + " pairs");

  struct Row {
    bool inf;
    K x, val;
  };
  std::vector<Row> rows;
  std::vector<int> exc_pair(n - 1, -1);  // pole -> pair index sitting on it
  std::vector<K> exc_v(n - 1, K(0));
  std::vector<int> exc_eps(n - 1, 1);
  Poly<K> f21(K(1));
  std::vector<K> abscissae;
  for (size_t j = 0; j < pairs.size(); ++j) {
    const auto& pr = pairs[j];
    if (pr.inf) {
      if (is_zero(pr.q))
        fail(Err::PoleCollision, "pair at s = 0 lies over the pole at infinity");
      if (pr.blow) fail(Err::UsageError, "blow-up data is only supported on finite charts");
      rows.push_back({true, pr.q, pr.p});
      f21 = f21 * Poly<K>({K(-1), pr.q});
      abscissae.push_back(K(1) / pr.q);
      continue;
    }
    K p = pr.p;
    int hit = detail::pole_hit(S, pr.q);
    if (pr.blow) {
      const auto& b = *pr.blow;
      if (b.pole < 0 || b.pole >= n - 1) fail(Err::UsageError, "blow-up pole index out of range");
      p = detail::eps_nuhat(S, b.pole, b.eps) + b.v * (pr.q - S.t[b.pole]);
      if (hit >= 0 && hit != b.pole)
        fail(Err::PoleCollision, "pair sits on pole " + std::to_string(hit + 1) +
                                     " but carries blow-up data for another pole");
      if (hit == b.pole) {
        exc_pair[hit] = static_cast<int>(j);
        exc_v[hit] = b.v;
        exc_eps[hit] = b.eps;
      }
    } else if (hit >= 0) {
      fail(Err::PoleCollision, "abscissa equals pole t_" + std::to_string(hit + 1) +
                                   "; supply blow-up data (reconstruct_blown)");
    }
    rows.push_back({false, pr.q, p});
    f21 = f21 * Poly<K>::linear(pr.q);
    abscissae.push_back(pr.q);
  }
  for (size_t a = 0; a < abscissae.size(); ++a)
    for (size_t b = a + 1; b < abscissae.size(); ++b)
      if (is_zero(abscissae[a] - abscissae[b]))
        fail(Err::SingularSystem, "apparent singularities collide (rank defect 1)");

  // f11 on positions 0..n-4
  const int m = n - 3;
  Poly<K> f11;
  bool all_finite = true;
  for (const auto& r : rows) all_finite &= !r.inf;
  if (all_finite) {
    std::vector<K> xs, vs;
    for (const auto& r : rows) {
      xs.push_back(r.x);
      vs.push_back(r.val);
    }
    f11 = interpolate(xs, vs);
  } else {
    MatX<K> A(m, m);
    std::vector<K> b;
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c)
        A(r, c) = rows[r].inf ? pow(rows[r].x, n - 2 - c) : pow(rows[r].x, c);
      b.push_back(rows[r].val);
    }
    f11 = Poly<K>(linear_solve(A, b));
  }

  // f12 coefficients b_0..b_{n-1}
  MatX<K> A = MatX<K>::Constant(n, n, K(0));
  std::vector<K> rhs(n, K(0));
  for (int i = 0; i < n - 1; ++i) {
    const K& t = S.t[i];
    for (int c = 0; c < n; ++c) A(i, c) = pow(t, c);
    K nh = S.nu_hat(i);
    if (exc_pair[i] < 0) {
      rhs[i] = (nh * nh - f11(t) * f11(t)) / f21(t);
    } else {
      Poly<K> R = exact_div(f21, Poly<K>::linear(t));
      K Rt = R(t);
      if (is_zero(Rt)) fail(Err::SingularSystem, "double apparent point on a pole");
      K en = K(exc_eps[i]) * nh;
      rhs[i] = K(2) * en * (exc_v[i] - f11.derivative()(t)) / Rt;
    }
  }
  A(n - 1, n - 1) = f21.coeff(n - 3);
  rhs[n - 1] = detail::infinity_rhs(S, f11.coeff(n - 2), 0, conn);
  FieldMatrix<K> F;
  F.k = 0;
  F.connection = conn;
  F.f11 = f11;
  F.f21 = f21;
  F.f12 = Poly<K>(linear_solve(A, rhs));
  return F;
}

template <class K>
FieldMatrix<K> reconstruct_blown(const std::vector<Pair<K>>& pairs, const SpectralData<K>& S) {
  for (const auto& pr : pairs) {
    if (pr.inf || pr.blow) continue;
    int hit = detail::pole_hit(S, pr.q);
    if (hit >= 0)
      fail(Err::MissingBlowup, "pair at t_" + std::to_string(hit + 1) + " has no blow-up coordinate");
  }
  return reconstruct(pairs, S);
}

// Data at a sigma-zero of a type-k field: the doubled point (q, +-p) and
// the slope lambda with G'(q) = 2 p lambda.
template <class K>
struct SigmaDatum {
  K q, p, lambda;
};

// Type k > 0 (Higgs): f21 monic from its root pairs, f11 by interpolation
// (degree <= n-2k-4), f12 from n residue conditions and G = p^2,
// G' = 2 p lambda at each sigma-zero.
template <class K>
FieldMatrix<K> reconstruct_typek(const std::vector<Pair<K>>& roots, const std::vector<SigmaDatum<K>>& sigma,
                                 const SpectralData<K>& S, int k) {
  const int n = S.n;
  if (S.flavor != Flavor::Higgs) fail(Err::UsageError, "type-k reconstruction is Higgs-only");
  if (k < 1 || k > max_k(n)) fail(Err::BundleBoundExceeded, "k out of range for n");
  if (static_cast<int>(sigma.size()) != k) fail(Err::UsageError, "need k sigma-zeros");
  if (static_cast<int>(roots.size()) != n - 2 * k - 3) fail(Err::UsageError, "need n-2k-3 root pairs");
  std::vector<K> xs, vs;
  Poly<K> f21(K(1));
  for (const auto& r : roots) {
    if (r.inf || r.blow) fail(Err::UsageError, "type-k reconstruction takes finite plain pairs");
    if (detail::pole_hit(S, r.q) >= 0) fail(Err::PoleCollision, "root pair on a pole");
    xs.push_back(r.q);
    vs.push_back(r.p);
    f21 = f21 * Poly<K>::linear(r.q);
  }
  Poly<K> f11;
  try {
    if (!xs.empty()) f11 = interpolate(xs, vs);
  } catch (const Error& e) {
    if (e.code() == Err::DuplicateNode) fail(Err::SingularSystem, "apparent singularities collide");
    throw;
  }
  const int N = n + 2 * k;
  MatX<K> A = MatX<K>::Constant(N, N, K(0));
  std::vector<K> rhs(N, K(0));
  int row = 0;
  for (int i = 0; i < n - 1; ++i, ++row) {
    const K& t = S.t[i];
    K ft = f21(t);
    if (is_zero(ft)) fail(Err::PoleCollision, "f21 vanishes at a pole");
    for (int c = 0; c < N; ++c) A(row, c) = pow(t, c);
    K nh = S.nu_hat(i);
    rhs[row] = (nh * nh - f11(t) * f11(t)) / ft;
  }
  A(row, N - 1) = f21.coeff(bound21(n, k));
  rhs[row] = detail::infinity_rhs(S, f11.coeff(n - 2), k, false);
  ++row;
  Poly<K> d11 = f11.derivative(), d21 = f21.derivative();
  for (const auto& sd : sigma) {
    K r0 = f21(sd.q), r1 = d21(sd.q), a0 = f11(sd.q), a1 = d11(sd.q);
    for (int c = 0; c < N; ++c) {
      A(row, c) = pow(sd.q, c) * r0;
      A(row + 1, c) = pow(sd.q, c) * r1 + (c > 0 ? K(c) * pow(sd.q, c - 1) * r0 : K(0));
    }
    rhs[row] = sd.p * sd.p - a0 * a0;
    rhs[row + 1] = K(2) * sd.p * sd.lambda - K(2) * a0 * a1;
    row += 2;
  }
  FieldMatrix<K> F;
  F.k = k;
  F.f11 = f11;
  F.f21 = f21;
  F.f12 = Poly<K>(linear_solve(A, rhs));
  return F;
}

}  // namespace ph
