#include "doctest.h"
#include "higgs/limits.hpp"
#include "higgs/linalg.hpp"
#include "higgs/roots.hpp"
#include "test_util.hpp"

using namespace ph;
using testutil::R;

TEST_CASE("rational parse and arithmetic") {
  CHECK(Rational::parse("6/4") == R(3, 2));
  CHECK(Rational::parse("-7") == R(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK(R(1, 3) + R(1, 6) == R(1, 2));
  CHECK(pow(R(2, 3), -2) == R(9, 4));
  CHECK(*try_sqrt(R(9, 49)) == R(3, 7));
  CHECK(!try_sqrt(R(2)).has_value());
  try {
    (void)(R(1) / R(0));
    FAIL("expected ZeroDivision");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ZeroDivision);
  }
}

TEST_CASE("poly_eval") {
  CHECK(Poly<Rational>({-1, 1})(R(1)) == R(0));
  CHECK(Poly<Rational>({-1, 2})(R(4)) == R(7));
  CHECK(Poly<Rational>()(R(123, 7)) == R(0));
}

TEST_CASE("poly arithmetic") {
  Poly<Rational> a({1, 2, 3}), b({-1, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.deg() <= 0);
  CHECK(gcd(a * b, b * b) == monic(b));
  CHECK(compose(a, b) == Poly<Rational>({2, -4, 3}));
  // taylor expansion around 2: a(z) = 17 + 14 (z-2) + 3 (z-2)^2
  auto t = taylor(a, R(2));
  CHECK(t[0] == R(17));
  CHECK(t[1] == R(14));
  CHECK(t[2] == R(3));
}

TEST_CASE("poly_roots") {
  auto f = from_roots<Rational>({R(4), R(5)});
  auto rs = poly_roots(f);
  REQUIRE(rs.exact.size() == 2);
  CHECK(rs.exact[0] == R(4));
  CHECK(rs.exact[1] == R(5));
  CHECK(rs.at_infinity == 0);

  auto z = poly_roots(Poly<Rational>::x(), 2);
  REQUIRE(z.exact.size() == 1);
  CHECK(z.exact[0] == R(0));
  CHECK(z.at_infinity == 1);

  Poly<Rational> s2({-2, 0, 1});
  CHECK_THROWS_AS(poly_roots(s2), Error);
  auto fl = poly_roots(s2, -1, true);
  CHECK(fl.used_float);
  REQUIRE(fl.approx.size() == 2);
  CHECK(std::abs(fl.approx[0] - Cplx(-std::sqrt(2.0), 0)) < 1e-9);
  CHECK(std::abs(fl.approx[1] - Cplx(std::sqrt(2.0), 0)) < 1e-9);

  // multiplicities and re-expansion up to the leading coefficient
  auto g = R(3, 2) * from_roots<Rational>({R(1, 3), R(1, 3), R(-2), R(7, 5)});
  auto gr = poly_roots(g);
  CHECK(g.lc() * from_roots(gr.exact) == g);
}

TEST_CASE("quadratic roots live in the quadratic extension") {
  auto [r1, r2] = quadratic_roots(Poly<Rational>({-2, 0, 1}));
  CHECK(r1 * r1 == QuadExt<Rational>(R(2)));
  CHECK(r1 + r2 == QuadExt<Rational>(R(0)));
  CHECK_THROWS_AS(quadratic_roots(Poly<Rational>({1, 1})), Error);
}

TEST_CASE("vandermonde_inverse_apply") {
  auto a = vandermonde_inverse_apply<Rational>({R(2), R(5)}, {R(3), R(9)});
  REQUIRE(a.size() == 2);
  CHECK(a[0] == R(-1));
  CHECK(a[1] == R(2));
  auto c = vandermonde_inverse_apply<Rational>({R(7, 3)}, {R(-4)});
  CHECK(c == std::vector<Rational>{R(-4)});
  CHECK_THROWS_AS(vandermonde_inverse_apply<Rational>({R(1), R(1)}, {R(0), R(2)}), Error);

  testutil::RandQ rq(11);
  for (int m = 1; m <= 8; ++m) {
    auto q = rq.distinct(m);
    std::vector<Rational> p;
    for (int i = 0; i < m; ++i) p.push_back(rq());
    auto coeffs = vandermonde_inverse_apply(q, p);
    Poly<Rational> f(coeffs);
    for (int i = 0; i < m; ++i) CHECK(f(q[i]) == p[i]);
    // same answer from the explicit Vandermonde system
    MatX<Rational> V(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) V(i, j) = pow(q[i], j);
    auto sol = linear_solve(V, p);
    for (int j = 0; j < m; ++j) CHECK(sol[j] == coeffs[j]);
  }
}

TEST_CASE("linear_solve") {
  MatX<Rational> I = MatX<Rational>::Identity(3, 3);
  std::vector<Rational> b{R(1), R(-2), R(5, 3)};
  CHECK(linear_solve(I, b) == b);
  MatX<Rational> A(2, 2);
  A << R(1), R(1), R(1), R(-1);
  CHECK(linear_solve(A, {R(2), R(0)}) == std::vector<Rational>{R(1), R(1)});
  MatX<Rational> Z = MatX<Rational>::Constant(2, 2, R(0));
  try {
    linear_solve(Z, {R(0), R(0)});
    FAIL("expected SingularSystem");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SingularSystem);
    CHECK(std::string(e.what()).find("rank defect 2") != std::string::npos);
  }
}

TEST_CASE("limit_h0") {
  Qh h = hvar();
  CHECK(limit_h0(h / h) == R(1));
  CHECK(limit_h0((R(3) * h * h + h) / h) == R(1));
  CHECK_THROWS_AS(limit_h0(Qh(R(1)) / h), Error);
  // reduced storage
  Qh x = (h * h - Qh(R(1))) / (h - Qh(R(1)));
  CHECK(x.den().deg() == 0);
  CHECK(x == h + Qh(R(1)));

  // QuadExt: even elements pass, odd ones raise
  QuadExt<Qh> e(h + Qh(R(2)), Qh(), h);
  CHECK(limit_h0(e) == R(2));
  QuadExt<Qh> o(Qh(R(1)), Qh(R(1)), h);
  CHECK_THROWS_AS(limit_h0(o), Error);
  CHECK(limit_h0_any(o) == R(1));

  // float cross-check: evaluate near 0
  Qh y = (R(2) * h + Qh(R(5))) * (h + Qh(R(1))) / (R(3) * h * h + Qh(R(4)));
  double at = y.eval(R(1, 1000000000)).to_double();
  CHECK(std::abs(at - limit_h0(y).to_double()) < 1e-6);
}
