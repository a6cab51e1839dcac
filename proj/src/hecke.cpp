#include "higgs/hecke.hpp"

namespace ph {

FieldMatrix<Rational> renormalize_q(const GluedFamily<Rational>& fam, const JumpParams<Rational>& jp,
                                    const Spectral& S) {
  check_in_X(jp);
  using RF = RatFunc<Rational>;
  // c is the (2,1) entry of the modification gauge at the second stage
  Rational c = (jp.q1 - jp.q2) / (Rational(2) * jp.p1);
  RF zq = zpoly(Poly<Rational>::linear(jp.q1));
  ZMat<Rational> Q1 = mat2<RF>(zq, RF(Rational(1) / c), RF(-c), RF(Rational(0)));
  ZMat<Rational> Q2 =
      mat2<RF>(RF(1), (zq * zpoly(Poly<Rational>::x())).inv() * RF(Rational(1) / c), RF(0), RF(1));
  ZMat<Rational> glued = zmul(zmul(inv2(Q1), fam.transition), Q2);
  if (glued != R0<Rational>())
    fail(Err::Indeterminate, "Q1^{-1} T Q2 does not reduce to the standard transition");
  ZMat<Rational> M = zmul(zmul(inv2(Q1), zmat(fam.u0.matrix())), Q1);
  FieldMatrix<Rational> F;
  F.k = 0;
  F.f11 = as_poly(M(0, 0), "renormalize_q");
  F.f12 = as_poly(M(0, 1), "renormalize_q");
  F.f21 = as_poly(M(1, 0), "renormalize_q");
  return normalize_auto(F, S);
}

ChainStep jump_chain(const Spectral& S, int k, const std::vector<SigmaDatum<Rational>>& sigma,
                     const std::vector<ApparentPair>& roots, int pivot, int collide, const Rational& lambda) {
  const int n = S.n;
  if (k + 1 > max_k(n))
    fail(Err::BundleBoundExceeded, "k+1 = " + std::to_string(k + 1) + " exceeds [(n-3)/2] = " +
                                       std::to_string(max_k(n)));
  if (static_cast<int>(sigma.size()) != k) fail(Err::UsageError, "need k sigma data");
  const int m = static_cast<int>(roots.size());
  if (m != n - 2 * k - 3) fail(Err::UsageError, "need n-2k-3 root pairs");
  if (pivot < 0 || pivot >= m || collide < 0 || collide >= m || pivot == collide)
    fail(Err::UsageError, "pivot/collide indices out of range");
  const Rational qa = roots[pivot].q, pa = roots[pivot].p;
  if (pa.zero()) fail(Err::ParamOutsideX, "pivot dual p = 0");
  for (const auto& sd : sigma)
    if (sd.q == qa) fail(Err::SingularSystem, "pivot abscissa is already a sigma-zero");
  for (int j = 0; j < m; ++j)
    if (j != pivot && j != collide && roots[j].q == qa)
      fail(Err::SingularSystem, "pivot abscissa repeats among the remaining pairs");

  auto C = [](const Rational& a) { return Qh(a); };
  SpectralData<Qh> Sh = S.map<Qh>(C);
  Qh h = hvar();
  std::vector<Pair<Qh>> rh;
  for (int j = 0; j < m; ++j) {
    if (j == collide)
      rh.push_back(Pair<Qh>::fin(C(qa) + h, C(pa) + C(lambda) * h));
    else
      rh.push_back(Pair<Qh>::fin(C(roots[j].q), C(roots[j].p)));
  }
  GluedFamily<Qh> fam;
  std::vector<Qh> sq;
  if (k == 0) {
    fam.u0 = reconstruct(rh, Sh);
  } else {
    std::vector<SigmaDatum<Qh>> sh;
    for (const auto& sd : sigma) {
      sh.push_back({C(sd.q), C(sd.p), C(sd.lambda)});
      sq.push_back(C(sd.q));
    }
    fam.u0 = reconstruct_typek(rh, sh, Sh, k);
  }
  fam.k = k;
  fam.sigma = sq;
  fam.transition = transition_for(sq);
  fam.gauge = mat2<RatFunc<Qh>>(Qh(1), Qh(0), Qh(0), Qh(1));
  GluedFamily<Qh> mod = hecke_step(fam, C(qa), C(pa));

  ChainStep out;
  out.limit = jump_limit_h(mod);
  out.sigma = sigma;
  out.sigma.push_back({qa, pa, lambda});
  for (int j = 0; j < m; ++j)
    if (j != pivot && j != collide) out.roots.push_back(roots[j]);
  out.normalized = normalize_auto(out.limit.u0, S);
  return out;
}

}  // namespace ph
