#pragma once

#include <string>
#include <vector>

#include "higgs/eigen_support.hpp"
#include "higgs/linalg.hpp"
#include "higgs/poly.hpp"
#include "higgs/rational.hpp"

namespace ph {

enum class Flavor { Higgs, Connection };

// Poles t_1..t_{n-1} finite, t_n = infinity. Indices are 0-based in code.
template <class K>
struct SpectralData {
  int n = 0;
  std::vector<K> t;   // n-1 finite poles
  std::vector<K> nu;  // n values
  Flavor flavor = Flavor::Higgs;

  bool is_inf(int i) const { return i == n - 1; }
  K nu_plus(int i) const { return nu[i]; }
  K nu_minus(int i) const {
    if (flavor == Flavor::Connection && is_inf(i)) return K(1) - nu[i];
    return -nu[i];
  }
  // prod_{j != i, j <= n-1} (t_i - t_j)
  K scale(int i) const {
    K s(1);
    for (int j = 0; j < n - 1; ++j)
      if (j != i) s = s * (t[i] - t[j]);
    return s;
  }
  K nu_hat(int i) const { return nu[i] * scale(i); }
  // z(z-1)(z-x_1)... : the denominator of omega_z
  Poly<K> omega_den() const {
    Poly<K> w(K(1));
    for (const auto& ti : t) w = w * Poly<K>::linear(ti);
    return w;
  }

  template <class K2, class F>
  SpectralData<K2> map(F f) const {
    SpectralData<K2> s;
    s.n = n;
    s.flavor = flavor;
    for (const auto& a : t) s.t.push_back(f(a));
    for (const auto& a : nu) s.nu.push_back(f(a));
    return s;
  }
};

using Spectral = SpectralData<Rational>;

// The reference instance: n = 5, t = (0, 1, 2, 3, inf).
Spectral reference_spectral(Flavor fl = Flavor::Higgs);
Spectral make_spectral(std::vector<Rational> t, std::vector<Rational> nu, Flavor fl);

inline int bound11(int n, int) { return n - 2; }
inline int bound12(int n, int k) { return n + 2 * k - 1; }
inline int bound21(int n, int k) { return n - 2 * k - 3; }
inline int max_k(int n) { return (n - 3) / 2; }

// Aᶻ_k = [[f11, f12], [f21, -f11]] ⊗ ω_z on U_0.
template <class K>
struct FieldMatrix {
  int k = 0;
  Poly<K> f11, f12, f21;
  bool connection = false;

  Mat2<Poly<K>> matrix() const { return mat2<Poly<K>>(f11, f12, f21, -f11); }
  Mat2<K> at(const K& z) const { return mat2<K>(f11(z), f12(z), f21(z), -f11(z)); }

  template <class K2, class F>
  FieldMatrix<K2> map(F f) const {
    return FieldMatrix<K2>{k, f11.map(f), f12.map(f), f21.map(f), connection};
  }
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.k == b.k && a.connection == b.connection && a.f11 == b.f11 && a.f12 == b.f12 &&
           a.f21 == b.f21;
  }
};

// Residue at pole i. Finite poles: A(t_i)/prod_{j!=i}(t_i - t_j). At infinity,
// w = 1/z pulls ω_z back to -w^{n-3}dw/prod(1 - t_j w), so the R_k-conjugate
// has residue minus the matrix of coefficients at the degree bounds; a
// connection adds R_k^{-1}dR_k, whose residue is diag(-k, k+1).
template <class K>
Mat2<K> residue(const FieldMatrix<K>& F, const SpectralData<K>& S, int i) {
  if (!S.is_inf(i)) {
    K s = S.scale(i);
    Mat2<K> a = F.at(S.t[i]);
    return mat2<K>(a(0, 0) / s, a(0, 1) / s, a(1, 0) / s, a(1, 1) / s);
  }
  int n = S.n, k = F.k;
  K a = F.f11.coeff(bound11(n, k)), b = F.f12.coeff(bound12(n, k));
  K c = bound21(n, k) >= 0 ? F.f21.coeff(bound21(n, k)) : K(0);
  Mat2<K> r = mat2<K>(-a, -b, -c, a);
  if (F.connection) {
    r(0, 0) = r(0, 0) - K(k);
    r(1, 1) = r(1, 1) + K(k + 1);
  }
  return r;
}

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  std::string failures() const {
    std::string s;
    for (const auto& c : checks)
      if (!c.ok) s += c.name + (c.detail.empty() ? "" : " (" + c.detail + ")") + "; ";
    return s;
  }
};

// Degree bounds, k-range, f21 != 0, and trace/det of every residue against
// the flavor's eigenvalue pair.
template <class K>
Report validate(const FieldMatrix<K>& F, const SpectralData<K>& S) {
  Report r;
  int n = S.n, k = F.k;
  bool krange = k >= 0 && k <= max_k(n);
  r.checks.push_back({"k_range", krange, "k=" + std::to_string(k)});
  r.checks.push_back({"bound_f11", F.f11.deg() <= bound11(n, k), ""});
  r.checks.push_back({"bound_f12", F.f12.deg() <= bound12(n, k), ""});
  r.checks.push_back({"bound_f21", F.f21.deg() <= bound21(n, k), ""});
  r.checks.push_back({"f21_nonzero", !F.f21.zero(), ""});
  r.checks.push_back({"flavor", F.connection == (S.flavor == Flavor::Connection), ""});
  if (!krange) return r;
  for (int i = 0; i < n; ++i) {
    Mat2<K> res = residue(F, S, i);
    K tr = trace2(res) - (S.nu_plus(i) + S.nu_minus(i));
    K dt = det2(res) - S.nu_plus(i) * S.nu_minus(i);
    r.checks.push_back({"residue_" + std::to_string(i + 1), is_zero(tr) && is_zero(dt),
                        "trace-offset " + to_str(tr) + ", det-offset " + to_str(dt)});
  }
  return r;
}

// g = f11^2 + f12 f21; the spectral curve is eta^2 = g(z).
template <class K>
Poly<K> spectral_curve(const FieldMatrix<K>& F) {
  return F.f11 * F.f11 + F.f12 * F.f21;
}

// Gauge by P = [[1, p], [0, t]] with deg p <= 2k+1 and t = lc(f21): clears
// the f11 coefficients at positions d..d+2k+1 (d = deg f21) and makes f21
// monic. Connections pick up P^{-1}dP in the (1,2) slot.
template <class K>
FieldMatrix<K> normalize_auto(const FieldMatrix<K>& F, const SpectralData<K>& S) {
  if (F.f21.zero()) fail(Err::NoPivot, "f21 vanishes identically; no automorphism pivot");
  const Poly<K>& r = F.f21;
  int d = r.deg();
  K lead = r.lc();
  Poly<K> f = F.f11, pt;
  for (int pos = d + 2 * F.k + 1; pos >= d; --pos) {
    K c = f.coeff(pos);
    if (is_zero(c)) continue;
    Poly<K> step = Poly<K>::monomial(c / lead, pos - d);
    pt = pt + step;
    f = f - step * r;
  }
  FieldMatrix<K> G = F;
  G.f11 = f;
  Poly<K> g = F.f12 + K(2) * (F.f11 * pt) - r * pt * pt;
  if (F.connection) g = g + pt.derivative() * S.omega_den();
  G.f12 = lead * g;
  G.f21 = r / lead;
  return G;
}

struct GenericityResult {
  bool ok;
  std::string reason;
};

// nu_1...nu_n != 0 and no signed sum is an integer.
GenericityResult genericity(const std::vector<Rational>& nu);

// gl_2 exponents (xi_i^+, xi_i^-) of degree d -> connection-flavor nu.
// check_generic = false skips both integrality screens (the map itself is
// defined regardless).
std::vector<Rational> normalize_gl_to_sl(const std::vector<std::pair<Rational, Rational>>& xi, int d,
                                        bool check_generic = true);

}  // namespace ph
