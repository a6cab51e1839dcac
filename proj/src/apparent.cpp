#include "higgs/apparent.hpp"

#include <algorithm>

namespace ph {

Rational blowup_coord(const Rational& q, const Rational& p, int pole, int eps, const Spectral& S) {
  Rational num = p - Rational(eps) * S.nu_hat(pole), den = q - S.t[pole];
  if (den.zero())
    fail(Err::Indeterminate, num.zero() ? "q = t_i and p = eps nuhat_i: v needs a deformation"
                                        : "q = t_i with p off the exceptional fiber");
  return num / den;
}

ApparentPair canonical(const ApparentPair& a, int n) {
  if (!a.inf || a.q.zero()) return a;
  Rational q = Rational(1) / a.q;
  ApparentPair r = ApparentPair::fin(q, a.p * pow(q, n - 2));
  r.blow = a.blow;
  return r;
}

std::vector<ApparentPair> canonical_sorted(std::vector<ApparentPair> v, int n) {
  for (auto& a : v) a = canonical(a, n);
  std::sort(v.begin(), v.end(), [](const ApparentPair& a, const ApparentPair& b) {
    if (a.inf != b.inf) return !a.inf;
    if (a.q != b.q) return a.q < b.q;
    return a.p < b.p;
  });
  return v;
}

namespace {

void attach_blowup(ApparentPair& pr, const FieldMatrix<Rational>& F, const Spectral& S, int mult) {
  int i = detail::pole_hit(S, pr.q);
  if (i < 0) return;
  Rational nh = S.nu_hat(i);
  if (nh.zero() || mult != 1) return;  // higher multiplicity: Hilbert data, not a single v
  int eps = pr.p == nh ? 1 : -1;
  if (pr.p != Rational(eps) * nh) return;
  // f12(t_i) R(t_i) = 2 eps nuhat (v - f11'(t_i)) with f21 = (z - t_i) R
  Poly<Rational> R = exact_div(F.f21, Poly<Rational>::linear(pr.q));
  Rational v = F.f11.derivative()(pr.q) + F.f12(pr.q) * R(pr.q) / (Rational(2 * eps) * nh);
  pr.blow = Blowup<Rational>{i, eps, v};
}

}  // namespace

ExtractResult extract(const FieldMatrix<Rational>& F, const Spectral& S,
                      const std::vector<Rational>& sigma_zeros, bool allow_float) {
  const int n = S.n, k = F.k;
  if (F.f21.zero()) fail(Err::NoPivot, "f21 vanishes identically");
  if (k == 0 && !sigma_zeros.empty()) fail(Err::UsageError, "k = 0 takes no sigma-zeros");
  if (k > 0 && static_cast<int>(sigma_zeros.size()) != k)
    fail(Err::UsageError, "type k = " + std::to_string(k) + " needs exactly k sigma-zeros");
  ExtractResult out;
  RootSet rs = poly_roots(F.f21, bound21(n, k), allow_float);
  for (size_t a = 0; a < rs.exact.size();) {
    size_t b = a;
    while (b < rs.exact.size() && rs.exact[b] == rs.exact[a]) ++b;
    for (size_t j = a; j < b; ++j) {
      ApparentPair pr = ApparentPair::fin(rs.exact[j], F.f11(rs.exact[j]));
      attach_blowup(pr, F, S, static_cast<int>(b - a));
      out.pairs.push_back(pr);
    }
    a = b;
  }
  for (int j = 0; j < rs.at_infinity; ++j)
    out.pairs.push_back(ApparentPair::at_inf(Rational(0), F.f11.coeff(n - 2)));
  if (rs.used_float) {
    out.used_float = true;
    auto f11c = to_cplx(F.f11);
    for (const auto& x : rs.approx) out.approx.push_back({x, f11c.eval<Cplx>(x), "root of f21 outside Q"});
  }
  Poly<Rational> g = spectral_curve(F);
  for (const auto& q : sigma_zeros) {
    Rational g0 = g(q);
    if (auto r = try_sqrt(g0)) {
      out.pairs.push_back(ApparentPair::fin(q, *r));
      out.pairs.push_back(ApparentPair::fin(q, -*r));
    } else if (allow_float) {
      out.used_float = true;
      Cplx root = std::sqrt(Cplx(g0.to_double(), 0));
      std::string quad = "p^2 - (" + g0.str() + ") = 0";
      out.approx.push_back({to_cplx(q), root, quad});
      out.approx.push_back({to_cplx(q), -root, quad});
    } else {
      fail(Err::NonSemisimple, "dual at sigma-zero q = " + q.str() + " solves p^2 - (" + g0.str() +
                                   ") = 0, not expressible over Q (witness p ~ " +
                                   to_str(std::sqrt(Cplx(g0.to_double(), 0))) + ")");
    }
  }
  return out;
}

Rational sigma_lambda(const FieldMatrix<Rational>& F, const Rational& q, const Rational& p) {
  if (p.zero()) fail(Err::Indeterminate, "lambda undefined at p = 0");
  return spectral_curve(F).derivative()(q) / (Rational(2) * p);
}

FieldMatrix<Rational> reconstruct_hilb(const HilbChart& H, const Spectral& S) {
  int total = 0;
  for (const auto& c : H.clusters) {
    if (c.mult < 1) fail(Err::UsageError, "cluster multiplicity must be positive");
    if (static_cast<int>(c.lambda.size()) != c.mult - 1)
      fail(Err::UsageError, "cluster needs mult - 1 lambda parameters");
    total += c.mult;
  }
  if (total != S.n - 3) fail(Err::UsageError, "cluster multiplicities must sum to n-3");
  for (size_t a = 0; a < H.clusters.size(); ++a)
    for (size_t b = a + 1; b < H.clusters.size(); ++b) {
      auto xa = H.clusters[a].exceptional ? S.t[H.clusters[a].pole] : H.clusters[a].x;
      auto xb = H.clusters[b].exceptional ? S.t[H.clusters[b].pole] : H.clusters[b].x;
      if (xa == xb)
        fail(Err::SingularSystem, "clusters " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                      " share an abscissa");
    }

  // Simple clusters keep exact data; multiple ones spread along q = x + c h
  // with p on the cluster's curve, and the family is limited at h = 0.
  bool needs_h = false;
  for (const auto& c : H.clusters) needs_h |= c.mult > 1;
  if (!needs_h) {
    std::vector<ApparentPair> pairs;
    for (const auto& c : H.clusters)
      pairs.push_back(c.exceptional ? ApparentPair::blown(S.t[c.pole], c.pole, c.eps, c.a)
                                    : ApparentPair::fin(c.x, c.y));
    return reconstruct(pairs, S);
  }

  SpectralData<Qh> Sh = S.map<Qh>([](const Rational& a) { return Qh(a); });
  Qh h = hvar();
  std::vector<Pair<Qh>> pairs;
  for (size_t ci = 0; ci < H.clusters.size(); ++ci) {
    const auto& c = H.clusters[ci];
    Rational base = c.exceptional ? S.t[c.pole] : c.x;
    Rational y0 = c.exceptional ? Rational(c.eps) * S.nu_hat(c.pole) : c.y;
    // p(z) = y0 + (z - base)(a + (z - base)(lambda_0 + ...)) for exceptional,
    // y0 + (z - base)(lambda_0 + ...) otherwise
    Poly<Rational> tail;
    for (int j = static_cast<int>(c.lambda.size()) - 1; j >= 0; --j)
      tail = tail * Poly<Rational>::linear(base) + Poly<Rational>(c.lambda[j]);
    Poly<Rational> curve = c.exceptional ? Poly<Rational>(c.a) + Poly<Rational>::linear(base) * tail : tail;
    curve = Poly<Rational>(y0) + Poly<Rational>::linear(base) * curve;
    for (int j = 0; j < c.mult; ++j) {
      int off = c.exceptional ? j + 1 : j;
      Qh q = Qh(base) + Qh(Rational(off)) * h;
      if (c.mult == 1 && !c.exceptional) q = Qh(base);
      Qh p = curve.eval<Qh>(q);
      pairs.push_back(Pair<Qh>::fin(q, p));
    }
  }
  FieldMatrix<Qh> Fh;
  try {
    Fh = reconstruct(pairs, Sh);
  } catch (const Error& e) {
    fail(Err::SingularSystem, std::string("deformed Hilbert-chart system degenerates: ") + e.what());
  }
  FieldMatrix<Rational> F;
  F.k = 0;
  F.connection = Fh.connection;
  try {
    F.f11 = limit_h0(Fh.f11);
    F.f12 = limit_h0(Fh.f12);
    F.f21 = limit_h0(Fh.f21);
  } catch (const Error& e) {
    fail(Err::SingularSystem, std::string("Hilbert-chart limit degenerates: ") + e.what());
  }
  return F;
}

}  // namespace ph
