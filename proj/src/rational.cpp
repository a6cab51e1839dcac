#include "higgs/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace ph {

const char* err_name(Err e) {
  switch (e) {
    case Err::FactorizationUnavailable: return "FactorizationUnavailable";
    case Err::DuplicateNode: return "DuplicateNode";
    case Err::SingularSystem: return "SingularSystem";
    case Err::PoleAtLimit: return "PoleAtLimit";
    case Err::OddPart: return "OddPart";
    case Err::NonGeneric: return "NonGeneric";
    case Err::NoPivot: return "NoPivot";
    case Err::PoleCollision: return "PoleCollision";
    case Err::MissingBlowup: return "MissingBlowup";
    case Err::Indeterminate: return "Indeterminate";
    case Err::NonSemisimple: return "NonSemisimple";
    case Err::ParamOutsideX: return "ParamOutsideX";
    case Err::BundleBoundExceeded: return "BundleBoundExceeded";
    case Err::DegenerateEigenSolve: return "DegenerateEigenSolve";
    case Err::DegenerateQuadratic: return "DegenerateQuadratic";
    case Err::ZeroDivision: return "ZeroDivision";
    case Err::UsageError: return "UsageError";
    case Err::ParseError: return "ParseError";
    case Err::PreconditionViolation: return "PreconditionViolation";
  }
  return "Unknown";
}

Rational::Rational(long n, long d) {
  if (d == 0) fail(Err::ZeroDivision, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.zero()) fail(Err::ZeroDivision, "division by zero");
  v_ /= o.v_;
  return *this;
}

size_t Rational::height() const {
  return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
}

Rational Rational::parse(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string t(s.substr(b, e - b));
  if (t.empty()) fail(Err::ParseError, "empty rational");
  size_t slash = t.find('/');
  auto int_ok = [](const std::string& u, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && i < u.size() && (u[i] == '-' || u[i] == '+')) ++i;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!int_ok(num, true) || !int_ok(den, false))
    fail(Err::ParseError, "malformed rational '" + t + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) fail(Err::ParseError, "zero denominator in '" + t + "'");
  return Rational(mpq_class(n, d));
}

Rational pow(const Rational& a, int e) {
  if (e < 0) return pow(Rational(1) / a, -e);
  Rational r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::optional<Rational> try_sqrt(const Rational& a) {
  if (a.sign() < 0) return std::nullopt;
  mpz_class n = a.num(), d = a.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

double& float_tol() {
  static double tol = 1e-9;
  return tol;
}

std::string to_str(const Cplx& a) {
  std::ostringstream os;
  os.precision(17);
  os << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i";
  return os.str();
}

}  // namespace ph
