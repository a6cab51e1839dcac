#include "higgs/model.hpp"

#include <set>

namespace ph {

Spectral make_spectral(std::vector<Rational> t, std::vector<Rational> nu, Flavor fl) {
  Spectral s;
  s.n = static_cast<int>(nu.size());
  if (s.n < 4) fail(Err::UsageError, "need n >= 4 poles");
  if (static_cast<int>(t.size()) != s.n - 1)
    fail(Err::UsageError, "expected n-1 finite poles (t_n is infinity)");
  std::set<Rational> seen(t.begin(), t.end());
  if (seen.size() != t.size()) fail(Err::UsageError, "poles must be pairwise distinct");
  s.t = std::move(t);
  s.nu = std::move(nu);
  s.flavor = fl;
  return s;
}

Spectral reference_spectral(Flavor fl) {
  return make_spectral({0, 1, 2, 3},
                       {Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(1, 11), Rational(1, 13)},
                       fl);
}

GenericityResult genericity(const std::vector<Rational>& nu) {
  for (size_t i = 0; i < nu.size(); ++i)
    if (nu[i].zero()) return {false, "nu_" + std::to_string(i + 1) + " = 0"};
  // all 2^n signed sums; n stays small
  const size_t n = nu.size();
  if (n > 24) fail(Err::UsageError, "too many poles for exhaustive sign check");
  for (unsigned long m = 0; m < (1ul << n); ++m) {
    Rational s(0);
    for (size_t i = 0; i < n; ++i) s = (m >> i & 1) ? s - nu[i] : s + nu[i];
    if (s.den() == 1) {
      std::string sg;
      for (size_t i = 0; i < n; ++i) sg += (m >> i & 1) ? '-' : '+';
      return {false, "signed sum " + sg + " equals integer " + s.str()};
    }
  }
  return {true, ""};
}

// Tensoring by the rank-1 connection shifts the exponents at t_i (i < n) by
// -(xi_i^+ + xi_i^-)/2 and at t_n by the opposite total.
std::vector<Rational> normalize_gl_to_sl(const std::vector<std::pair<Rational, Rational>>& xi, int d,
                                        bool check_generic) {
  const size_t n = xi.size();
  if (n < 4) fail(Err::UsageError, "need n >= 4 exponent pairs");
  Rational total(0);
  for (const auto& [a, b] : xi) total = total + a + b;
  if (total != Rational(-d))
    fail(Err::PreconditionViolation,
         "Fuchs relation fails: exponent sum " + total.str() + " != -d = " + std::to_string(-d));
  // sum_i xi_i^{eps_i} not an integer for every sign pattern
  for (unsigned long m = 0; check_generic && m < (1ul << n); ++m) {
    Rational s(0);
    for (size_t i = 0; i < n; ++i) s = s + ((m >> i & 1) ? xi[i].second : xi[i].first);
    if (s.den() == 1) fail(Err::NonGeneric, "a choice of exponents sums to the integer " + s.str());
  }
  for (size_t i = 0; i < n; ++i)
    if (xi[i].first == xi[n - 1].second)
      fail(Err::NonGeneric, "xi_" + std::to_string(i + 1) + "^+ equals xi_n^-");
  std::vector<Rational> nu(n);
  Rational shift(0);
  for (size_t i = 0; i + 1 < n; ++i) {
    nu[i] = (xi[i].first - xi[i].second) / Rational(2);
    shift = shift + (xi[i].first + xi[i].second) / Rational(2);
  }
  nu[n - 1] = xi[n - 1].first + shift;
  auto g = genericity(nu);
  if (check_generic && !g.ok) fail(Err::NonGeneric, g.reason);
  return nu;
}

}  // namespace ph
