#include "higgs/charts.hpp"

namespace ph {

namespace {

ProjValue slope(const Rational& num, const Rational& den) {
  if (!den.zero()) return ProjValue::finite(num / den);
  return num.zero() ? ProjValue::undetermined() : ProjValue::infinite();
}

ApparentPair finite_chart(const ApparentPair& a, const Spectral& S) {
  ApparentPair c = canonical(a, S.n);
  if (c.inf) fail(Err::UsageError, "pair over the pole at infinity has no finite chart");
  return c;
}

const Rational& need_finite(const ProjValue& v, const char* what) {
  if (!v.is_finite()) fail(Err::UsageError, std::string(what) + " must be finite here");
  return v.v;
}

}  // namespace

Rational pair_p(const ApparentPair& x, const Spectral& S) {
  if (!x.blow) return x.p;
  const auto& b = *x.blow;
  return detail::eps_nuhat(S, b.pole, b.eps) + b.v * (x.q - S.t[b.pole]);
}

HilbPoint5 hilb_coords(const ApparentPair& a0, const ApparentPair& b0, const Spectral& S) {
  HilbPoint5 h;
  h.a = finite_chart(a0, S);
  h.b = finite_chart(b0, S);
  Rational p1 = pair_p(h.a, S), p2 = pair_p(h.b, S);
  Rational dq = h.b.q - h.a.q;
  h.lam_plus = slope(p2 - p1, dq);
  h.lam_minus = slope(p1 + p2, dq);
  if (h.a.blow && h.b.blow && h.a.blow->pole == h.b.blow->pole) {
    const auto &ba = *h.a.blow, &bb = *h.b.blow;
    if (ba.eps == bb.eps)
      h.lam_plus_i = slope(ba.v - bb.v, -dq);
    else
      h.lam_minus_i = slope(ba.v + bb.v, -dq);
  }
  return h;
}

Poly<Rational> solve_b4b5(const HilbPoint5& pt, const Spectral& S) {
  if (S.n != 5 || S.flavor != Flavor::Higgs) fail(Err::UsageError, "solve_b4b5 needs n = 5, Higgs flavor");
  const int N = 7;
  MatX<Rational> A = MatX<Rational>::Constant(N, N, Rational(0));
  std::vector<Rational> rhs(N, Rational(0));
  int row = 0;
  // value, first and second derivative rows at x
  auto value = [&](const Rational& x, const Rational& y) {
    for (int c = 0; c < N; ++c) A(row, c) = pow(x, c);
    rhs[row++] = y;
  };
  auto deriv1 = [&](const Rational& x, const Rational& y) {
    for (int c = 1; c < N; ++c) A(row, c) = Rational(c) * pow(x, c - 1);
    rhs[row++] = y;
  };
  auto deriv2 = [&](const Rational& x, const Rational& y) {
    for (int c = 2; c < N; ++c) A(row, c) = Rational(c * (c - 1)) * pow(x, c - 2);
    rhs[row++] = y;
  };
  for (int i = 0; i < 4; ++i) {
    Rational nh = S.nu_hat(i);
    value(S.t[i], nh * nh);
  }
  A(row, N - 1) = Rational(1);
  rhs[row++] = S.nu[4] * S.nu[4];

  const ApparentPair &a = pt.a, &b = pt.b;
  if (a.inf || b.inf) fail(Err::UsageError, "solve_b4b5 takes finite-chart pairs");
  int ha = detail::pole_hit(S, a.q), hb = detail::pole_hit(S, b.q);
  if ((ha >= 0 && !a.blow) || (hb >= 0 && !b.blow))
    fail(Err::MissingBlowup, "pair on a finite pole needs its blow-up coordinate");

  // on a pole the value row is implied; the blow-up slope gives G'
  auto pole_row = [&](const ApparentPair& x, int hit) {
    const auto& bl = *x.blow;
    if (bl.pole != hit) fail(Err::PoleCollision, "blow-up data names another pole");
    deriv1(S.t[hit], Rational(2) * detail::eps_nuhat(S, hit, bl.eps) * bl.v);
  };

  if (a.q != b.q) {
    for (auto [x, hit] : {std::pair{&a, ha}, std::pair{&b, hb}}) {
      if (hit >= 0)
        pole_row(*x, hit);
      else {
        Rational p = pair_p(*x, S);
        value(x->q, p * p);
      }
    }
  } else if (ha >= 0) {
    const auto &ba = *a.blow, &bb = *b.blow;
    if (ba.pole != ha || bb.pole != ha) fail(Err::PoleCollision, "blow-up data names another pole");
    const Rational* lam;
    if (ba.eps == bb.eps) {
      if (ba.v != bb.v) fail(Err::UsageError, "coincident blown pairs need equal v");
      if (!pt.lam_plus_i) fail(Err::UsageError, "lambda_plus^i required");
      lam = &need_finite(*pt.lam_plus_i, "lambda_plus^i");
    } else {
      if (ba.v != -bb.v) fail(Err::UsageError, "opposite-branch blown pairs need v1 = -v2");
      if (!pt.lam_minus_i) fail(Err::UsageError, "lambda_minus^i required");
      lam = &need_finite(*pt.lam_minus_i, "lambda_minus^i");
    }
    Rational en = detail::eps_nuhat(S, ha, ba.eps);
    deriv1(a.q, Rational(2) * en * ba.v);
    deriv2(a.q, Rational(4) * en * *lam + Rational(2) * ba.v * ba.v);
  } else {
    Rational p1 = pair_p(a, S), p2 = pair_p(b, S);
    value(a.q, p1 * p1);
    if (p2 == -p1 && !p1.zero())
      deriv1(a.q, Rational(-2) * p1 * need_finite(pt.lam_minus, "lambda_minus"));
    else if (p2 == p1)
      deriv1(a.q, Rational(2) * p1 * need_finite(pt.lam_plus, "lambda_plus"));
    else
      fail(Err::UsageError, "coincident abscissae need p2 = +-p1");
  }
  if (row != N) fail(Err::UsageError, "internal: wrong number of conditions");
  return Poly<Rational>(linear_solve(A, rhs));
}

FieldMatrix<Rational> typek1_from_curve(const Poly<Rational>& G) {
  FieldMatrix<Rational> F;
  F.k = 1;
  F.f11 = Poly<Rational>();
  F.f12 = G;
  F.f21 = Poly<Rational>(Rational(1));
  return F;
}

ChainLimits chain_limits(const ChainPoint<Qh>& cp) {
  auto even = [](const QuadExt<Qh>& x, const char* name) {
    if (!x.even()) fail(Err::OddPart, std::string(name) + " has a nonzero odd part");
    return limit_h0(x);
  };
  auto odd = [](const QuadExt<Qh>& x, const char* name) {
    if (!x.odd()) fail(Err::OddPart, std::string(name) + " has a nonzero even part");
    return limit_h0_any(x);
  };
  ChainLimits L;
  L.s = even(cp.s, "s");
  L.t1 = odd(cp.t1, "t1");
  L.t2 = odd(cp.t2, "t2");
  L.u1 = even(cp.u1, "u1");
  L.u2 = even(cp.u2, "u2");
  L.v = odd(cp.v, "v");
  L.w = even(cp.w, "w");
  return L;
}

ChainLimits chain_limits_at(const Rational& q1, const Rational& p1, const Rational& lambda, const Rational& e0,
                            const Rational& e1, const Spectral& S, std::array<int, 4> eps) {
  auto C = [](const Rational& a) { return Qh(a); };
  SpectralData<Qh> Sh = S.map<Qh>(C);
  ConnJumpParams<Qh> P{C(q1), C(p1), C(q1) + hvar(), C(lambda), C(e0), C(e1), eps};
  auto fam = assemble(P, Sh);
  return chain_limits(chain(apparent_of_conn_jump(fam, Sh), Sh));
}

Rational lim_s_closed(const Rational& q1, const Spectral& S) {
  Rational Q = S.omega_den()(q1);
  if (Q.zero()) fail(Err::PreconditionViolation, "q1 on a pole");
  return Rational(1) / Q;
}

Rational lim_u2_closed(const Rational& q1, const Spectral& S) {
  const Rational &x1 = S.t[2], &x2 = S.t[3];
  Rational Q = S.omega_den()(q1);
  if (Q.zero()) fail(Err::PreconditionViolation, "q1 on a pole");
  Rational num = Rational(-4) * pow(q1, 3) + Rational(3) * q1 * q1 * (Rational(1) + x1 + x2) -
                 Rational(2) * q1 * (x1 + x2 + x1 * x2) + x1 * x2;
  return num / (Rational(4) * Q * Q);
}

Rational u1_lambda_coeff_closed(const Rational& q1, const Spectral& S) {
  Rational Q = S.omega_den()(q1);
  if (Q.zero()) fail(Err::PreconditionViolation, "q1 on a pole");
  return Rational(-1) / (Rational(4) * Q * Q);
}

Rational w_lambda_coeff_closed(const Rational& q1, const Spectral& S) {
  const Rational &x1 = S.t[2], &x2 = S.t[3];
  Rational Q = S.omega_den()(q1);
  if (Q.zero()) fail(Err::PreconditionViolation, "q1 on a pole");
  Rational num = Rational(4) * pow(q1, 3) - Rational(3) * q1 * q1 * (Rational(1) + x1 + x2) +
                 Rational(2) * q1 * (x1 + x2 + x1 * x2) - x1 * x2;
  return num / (Rational(8) * Q * Q * Q);
}

namespace {

// grid offsets chosen so that p1 never hits 0
std::array<Rational, 3> grid(const Rational& c, bool avoid_zero) {
  std::array<Rational, 3> g{c - Rational(1), c, c + Rational(1)};
  if (avoid_zero) {
    Rational shift(0);
    auto bad = [&](const Rational& s) {
      for (auto& x : g)
        if ((x + s).zero()) return true;
      return false;
    };
    while (bad(shift)) shift = shift + Rational(1, 2);
    for (auto& x : g) x = x + shift;
  }
  return g;
}

QuadModel fit(const std::array<Rational, 3>& ls, const std::array<Rational, 3>& ps,
              const std::array<std::array<Rational, 3>, 3>& val) {
  // six of the nine points determine the model; the rest verify it
  const int pick[6][2] = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}};
  MatX<Rational> A(6, 6);
  std::vector<Rational> b;
  for (int r = 0; r < 6; ++r) {
    const Rational &l = ls[pick[r][0]], &p = ps[pick[r][1]];
    Rational mono[6] = {Rational(1), l, p, l * l, l * p, p * p};
    for (int c = 0; c < 6; ++c) A(r, c) = mono[c];
    b.push_back(val[pick[r][0]][pick[r][1]]);
  }
  auto c = linear_solve(A, b);
  QuadModel m{c[0], c[1], c[2], c[3], c[4], c[5], true};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m.eval(ls[i], ps[j]) != val[i][j]) m.verified = false;
  return m;
}

}  // namespace

JacobianReport m1_coordinate_probe(const Rational& q1, const Rational& lambda, const Rational& p1,
                                   const Rational& e0, const Rational& e1, const Spectral& S) {
  if (p1.zero()) fail(Err::ParamOutsideX, "p1 = 0");
  if (S.omega_den()(q1).zero()) fail(Err::PreconditionViolation, "q1 on a pole");
  auto ls = grid(lambda, false), ps = grid(p1, true);
  std::array<std::array<Rational, 3>, 3> u1, w;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto L = chain_limits_at(q1, ps[j], ls[i], e0, e1, S);
      u1[i][j] = L.u1;
      w[i][j] = L.w;
    }
  JacobianReport r;
  r.q1 = q1;
  r.lambda = lambda;
  r.p1 = p1;
  r.u1 = fit(ls, ps, u1);
  r.w = fit(ls, ps, w);
  r.models_verified = r.u1.verified && r.w.verified;
  auto dl = [&](const QuadModel& m) { return m.cl + Rational(2) * m.cll * lambda + m.clp * p1; };
  auto dp = [&](const QuadModel& m) { return m.cp + m.clp * lambda + Rational(2) * m.cpp * p1; };
  r.jacobian = mat2<Rational>(dl(r.u1), dp(r.u1), dl(r.w), dp(r.w));
  r.det = det2(r.jacobian);
  r.invertible = !r.det.zero();
  return r;
}

}  // namespace ph
