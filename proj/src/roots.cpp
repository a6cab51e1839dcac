#include "higgs/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace ph {

namespace {

using LCplx = std::complex<long double>;

LCplx horner(const std::vector<LCplx>& c, LCplx x) {
  LCplx r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

// primitive integer coefficients of a rational polynomial
std::vector<mpz_class> integer_coeffs(const Poly<Rational>& f) {
  mpz_class l = 1;
  for (const auto& a : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& a : f.coeffs()) {
    mpq_class t = a.q() * l;
    z.push_back(t.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return z;
}

}  // namespace

std::vector<Cplx> float_roots(const Poly<Cplx>& f) {
  int n = f.deg();
  if (n <= 0) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  Cplx lead = f.lc();
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -f.coeff(i) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<LCplx> c;
  for (int i = 0; i <= n; ++i) c.emplace_back(f.coeff(i).real(), f.coeff(i).imag());
  std::vector<LCplx> dc;
  for (int i = 1; i <= n; ++i) dc.push_back(c[i] * static_cast<long double>(i));
  std::vector<Cplx> out;
  for (int i = 0; i < n; ++i) {
    LCplx x(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
    for (int it = 0; it < 8; ++it) {
      LCplx d = horner(dc, x);
      if (std::abs(d) == 0) break;
      LCplx step = horner(c, x) / d;
      x -= step;
      if (std::abs(step) <= 1e-30L * (1 + std::abs(x))) break;
    }
    out.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  }
  std::sort(out.begin(), out.end(), [](const Cplx& a, const Cplx& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::vector<Cplx> float_roots(const Poly<Rational>& f) { return float_roots(to_cplx(f)); }

std::vector<std::pair<Rational, int>> rational_roots(const Poly<Rational>& f) {
  std::vector<std::pair<Rational, int>> out;
  if (f.deg() <= 0) return out;
  Poly<Rational> rest = f;
  // zero roots first: exact and cheap
  int v = rest.valuation();
  if (v > 0) {
    out.push_back({Rational(0), v});
    rest = Poly<Rational>(std::vector<Rational>(rest.coeffs().begin() + v, rest.coeffs().end()));
  }
  while (rest.deg() >= 1) {
    Poly<Rational> sf = exact_div(rest, gcd(rest, rest.derivative()));
    auto zc = integer_coeffs(sf);
    mpz_class lead = zc.back();
    bool found = false;
    for (const auto& r : float_roots(sf)) {
      if (std::abs(r.imag()) > 1e-6 * (1 + std::abs(r.real()))) continue;
      // a rational root a/b in lowest terms has b | lead, so lead*root is an integer
      mpz_class m;
      mpz_set_d(m.get_mpz_t(), std::nearbyint(r.real() * lead.get_d()));
      for (int off : {0, -1, 1}) {
        Rational cand(mpq_class(m + off, lead));
        if (!is_zero(sf(cand))) continue;
        int mult = 0;
        Poly<Rational> lin = Poly<Rational>::linear(cand);
        while (true) {
          auto [q, rem] = divmod(rest, lin);
          if (!rem.zero()) break;
          rest = q;
          ++mult;
        }
        out.push_back({cand, mult});
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

RootSet poly_roots(const Poly<Rational>& f, int bound, bool allow_float) {
  if (f.zero()) fail(Err::FactorizationUnavailable, "roots of the zero polynomial");
  RootSet rs;
  if (bound < 0) bound = f.deg();
  rs.at_infinity = std::max(0, bound - f.deg());
  Poly<Rational> rest = f;
  for (const auto& [r, m] : rational_roots(f)) {
    for (int i = 0; i < m; ++i) {
      rs.exact.push_back(r);
      rest = exact_div(rest, Poly<Rational>::linear(r));
    }
  }
  if (rest.deg() > 0) {
    if (!allow_float)
      fail(Err::FactorizationUnavailable,
           "polynomial does not split over the rationals (degree " + std::to_string(rest.deg()) +
               " factor left)");
    rs.used_float = true;
    rs.approx = float_roots(rest);
    for (const auto& x : rs.approx) {
      Cplx val = to_cplx(f).eval<Cplx>(x);
      if (std::abs(val) > float_tol() * (1 + std::pow(std::abs(x), f.deg())))
        fail(Err::FactorizationUnavailable, "float root failed the residual check");
    }
  }
  return rs;
}

}  // namespace ph
