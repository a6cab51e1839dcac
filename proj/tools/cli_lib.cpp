#include "cli_lib.hpp"

#include <gmp.h>
#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ph::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& msg) {
  fail(Err::ParseError, where + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, size_t i) { return where + "/" + std::to_string(i); }

int int_from(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<int>();
}

bool flag(const json& in, const char* key) {
  auto it = in.find(key);
  if (it == in.end()) return false;
  if (!it->is_boolean()) parse_fail(std::string("/") + key, "expected a boolean");
  return it->get<bool>();
}

template <class F>
auto optional_field(const json& in, const char* key, F parse) -> std::optional<decltype(parse(in, std::string()))> {
  auto it = in.find(key);
  if (it == in.end() || it->is_null()) return std::nullopt;
  return parse(*it, std::string("/") + key);
}

Rational rat_or(const json& in, const char* key, Rational dflt) {
  auto v = optional_field(in, key, rat);
  return v ? *v : dflt;
}

std::vector<Rational> rats(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  std::vector<Rational> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(rat(j[i], at(where, i)));
  return out;
}

json quad_json(const QuadExt<Rational>& x) { return {{"a", to_json(x.a)}, {"b", to_json(x.b)}, {"d", to_json(x.d)}}; }

json cplx_json(const Cplx& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json zmat_json(const ZMat<Rational>& m) {
  return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"ok", r.ok()}, {"checks", checks}};
}

json pairs_json(const std::vector<ApparentPair>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(to_json(p));
  return a;
}

std::array<int, 4> eps_from(const json& j, const std::string& where) {
  if (!j.is_string() || j.get<std::string>().size() != 4) parse_fail(where, "expected a 4-character sign string");
  std::array<int, 4> e{};
  std::string s = j.get<std::string>();
  for (int i = 0; i < 4; ++i) {
    if (s[i] == '+')
      e[i] = 1;
    else if (s[i] == '-')
      e[i] = -1;
    else
      parse_fail(where, "signs must be '+' or '-'");
  }
  return e;
}

Spectral spectral_or(const json& in, Flavor dflt) {
  auto it = in.find("spectral");
  if (it == in.end()) return reference_spectral(dflt);
  return spectral_from(*it, "/spectral");
}

bool float_backend(const Options& o) { return o.backend == "float"; }

// ---------------------------------------------------------------- commands

json cmd_validate(const json& in, const Options&) {
  FieldMatrix<Rational> F = field_from(field(in, "field", ""), "/field");
  Spectral S = spectral_or(in, F.connection ? Flavor::Connection : Flavor::Higgs);
  return report_json(validate(F, S));
}

json extract_json(const ExtractResult& r, const FieldMatrix<Rational>& F, const Options& opt) {
  json approx = json::array();
  auto f21 = to_cplx(F.f21);
  for (const auto& a : r.approx) {
    double resid = std::abs(f21.eval<Cplx>(a.q));
    approx.push_back({{"q", cplx_json(a.q)}, {"p", cplx_json(a.p)}, {"note", a.note},
                      {"within_tol", a.note.rfind("p^2", 0) == 0 || resid <= opt.tol}});
  }
  return {{"pairs", pairs_json(r.pairs)}, {"approx", approx}, {"used_float", r.used_float}};
}

json cmd_extract(const json& in, const Options& opt) {
  FieldMatrix<Rational> F = field_from(field(in, "field", ""), "/field");
  Spectral S = spectral_or(in, F.connection ? Flavor::Connection : Flavor::Higgs);
  std::vector<Rational> sz;
  if (in.contains("sigma_zeros")) sz = rats(in["sigma_zeros"], "/sigma_zeros");
  return extract_json(extract(F, S, sz, float_backend(opt)), F, opt);
}

json cmd_reconstruct(const json& in, const Options&) {
  Spectral S = spectral_or(in, Flavor::Higgs);
  auto pairs = pairs_from(field(in, "pairs", ""), "/pairs");
  auto F = reconstruct_blown(pairs, S);
  if (flag(in, "normalize")) F = normalize_auto(F, S);
  return {{"field", to_json(F)}, {"valid", validate(F, S).ok()}};
}

json cmd_reconstruct_hilb(const json& in, const Options&) {
  Spectral S = spectral_or(in, Flavor::Higgs);
  auto F = reconstruct_hilb(hilb_from(field(in, "hilb", ""), "/hilb"), S);
  return {{"field", to_json(F)}, {"valid", validate(F, S).ok()}};
}

json cmd_spectral_curve(const json& in, const Options& opt) {
  FieldMatrix<Rational> F = field_from(field(in, "field", ""), "/field");
  Spectral S = spectral_or(in, F.connection ? Flavor::Connection : Flavor::Higgs);
  Poly<Rational> g = spectral_curve(F);
  json out = {{"curve", to_json(g)}, {"degree", g.deg()}};
  if (auto it = in.find("plot"); it != in.end()) {
    if (!float_backend(opt)) fail(Err::UsageError, "plot data needs --backend float");
    double from = rat(field(*it, "from", "/plot"), "/plot/from").to_double();
    double to = rat(field(*it, "to", "/plot"), "/plot/to").to_double();
    int steps = int_from(field(*it, "steps", "/plot"), "/plot/steps");
    std::vector<Rational> app;
    for (const auto& p : extract(F, S, {}, true).pairs)
      if (!p.inf) app.push_back(p.q);
    out["plot_csv"] = emit_plot(g, from, to, steps, S.t, app);
  }
  return out;
}

JumpParams<Rational> jump_from(const json& j) {
  const std::string w = "/jump";
  Rational q1 = rat(field(j, "q1", w), at(w, "q1")), p1 = rat(field(j, "p1", w), at(w, "p1"));
  Rational lam = rat(field(j, "lambda", w), at(w, "lambda"));
  Rational q2 = j.contains("q2") ? rat(j["q2"], at(w, "q2")) : q1;
  auto jp = make_jump(q1, p1, q2, lam);
  if (j.contains("p2") && rat(j["p2"], at(w, "p2")) != jp.p2)
    fail(Err::ParamOutsideX, "p2 - p1 != lambda (q2 - q1)");
  return jp;
}

json cmd_jump_higgs(const json& in, const Options&) {
  Spectral S = spectral_or(in, Flavor::Higgs);
  auto jp = jump_from(field(in, "jump", ""));
  if (flag(in, "deform")) {
    auto C = [](const Rational& a) { return Qh(a); };
    auto fam = jump_family_h(make_jump<Qh>(C(jp.q1), C(jp.p1), C(jp.q1) + hvar(), C(jp.lambda)), S.map<Qh>(C));
    auto lim = jump_limit_h(fam);
    Poly<Rational> g = spectral_curve(lim.u0);
    return {{"limit", {{"u0", to_json(lim.u0)}, {"transition", zmat_json(lim.transition)}, {"k", lim.k}}},
            {"valid", validate(lim.u0, S).ok()},
            {"glue_ok", check_glue(lim, S).ok()},
            {"curve", to_json(g)},
            {"curve_through_q1", g(jp.q1) == jp.p1 * jp.p1},
            {"lambda", to_json(sigma_lambda(lim.u0, jp.q1, jp.p1))}};
  }
  auto fam = jump_family_h(jp, S);
  auto F = renormalize_q(fam, jp, S);
  return {{"family", {{"u0", to_json(fam.u0)}, {"transition", zmat_json(fam.transition)},
                      {"gauge", zmat_json(fam.gauge)}, {"k", fam.k}}},
          {"glue_ok", check_glue(fam, S).ok()},
          {"renormalized", to_json(F)},
          {"pairs", pairs_json(canonical_sorted(extract(F, S).pairs, S.n))}};
}

ConnJumpParams<Rational> conn_from(const json& j, bool deform) {
  const std::string w = "/connjump";
  Rational q1 = rat(field(j, "q1", w), at(w, "q1"));
  Rational q2 = deform ? q1 : rat(field(j, "q2", w), at(w, "q2"));
  std::array<int, 4> eps{1, 1, 1, 1};
  if (j.contains("eps")) eps = eps_from(j["eps"], at(w, "eps"));
  return {q1, rat(field(j, "p1", w), at(w, "p1")), q2, rat(field(j, "lambda", w), at(w, "lambda")),
          rat_or(j, "e0", Rational(0)), rat_or(j, "e1", Rational(0)), eps};
}

// q2 = q1 + h
ConnJumpParams<Qh> deformed(const ConnJumpParams<Rational>& P) {
  auto C = [](const Rational& a) { return Qh(a); };
  return {C(P.q1), C(P.p1), C(P.q1) + hvar(), C(P.lambda), C(P.e0), C(P.e1), P.eps};
}

json cmd_jump_conn(const json& in, const Options&) {
  Spectral S = spectral_or(in, Flavor::Connection);
  const json& j = field(in, "connjump", "");
  if (flag(in, "deform")) {
    SpectralData<Qh> Sh = S.map<Qh>([](const Rational& a) { return Qh(a); });
    auto fam = assemble(deformed(conn_from(j, true)), Sh);
    auto lim = jump_frame_limit(jump_frame(fam, Sh));
    json nup = json::array();
    for (const auto& x : fam.nu_prime) nup.push_back(to_json(limit_h0(x)));
    return {{"limit", to_json(lim)}, {"valid", validate(lim, S).ok()}, {"nu_prime_limit", nup},
            {"pipeline_agrees", fam.field == fam.pipeline}};
  }
  auto fam = assemble(conn_from(j, false), S);
  json nup = json::array();
  for (const auto& x : fam.nu_prime) nup.push_back(to_json(x));
  json out = {{"field", to_json(fam.field)}, {"valid", validate(fam.field, S).ok()},
              {"pipeline_agrees", fam.field == fam.pipeline}, {"nu_prime", nup}};
  auto A = apparent_of_conn_jump(fam, S);
  out["apparent"] = {{"a1", to_json(A.a1)}, {"a2", to_json(A.a2)}, {"a3", to_json(A.a3)},
                     {"q1p", quad_json(A.q1p)}, {"q2p", quad_json(A.q2p)},
                     {"p1p", quad_json(A.p1p)}, {"p2p", quad_json(A.p2p)}};
  return out;
}

json cmd_chain_limits(const json& in, const Options&) {
  Spectral base = reference_spectral(Flavor::Connection);
  std::vector<Rational> t = base.t, nu = base.nu;
  if (auto x = optional_field(in, "x", rats)) {
    if (x->size() != 2) parse_fail("/x", "expected [x1, x2]");
    t = {Rational(0), Rational(1), (*x)[0], (*x)[1]};
  }
  if (auto v = optional_field(in, "nu", rats)) nu = *v;
  Spectral S = make_spectral(t, nu, Flavor::Connection);
  Rational q1 = rat(field(in, "q1", ""), "/q1");
  Rational p1 = rat_or(in, "p1", Rational(1)), lam = rat_or(in, "lambda", Rational(0));
  Rational e0 = rat_or(in, "e0", Rational(0)), e1 = rat_or(in, "e1", Rational(0));
  std::array<int, 4> eps{1, 1, 1, 1};
  if (in.contains("eps")) eps = eps_from(in["eps"], "/eps");
  auto L = chain_limits_at(q1, p1, lam, e0, e1, S, eps);
  json out = {{"lim_s", to_json(L.s)},   {"lim_t1", to_json(L.t1)}, {"lim_t2", to_json(L.t2)},
              {"lim_u1", to_json(L.u1)}, {"lim_u2", to_json(L.u2)}, {"lim_v", to_json(L.v)},
              {"lim_w", to_json(L.w)}};
  out["closed_form"] = {{"lim_s", to_json(lim_s_closed(q1, S))},
                        {"lim_u2", to_json(lim_u2_closed(q1, S))},
                        {"u1_lambda_coeff", to_json(u1_lambda_coeff_closed(q1, S))},
                        {"w_lambda_coeff", to_json(w_lambda_coeff_closed(q1, S))}};
  if (flag(in, "probe")) {
    auto r = m1_coordinate_probe(q1, lam, p1, e0, e1, S);
    auto model = [](const QuadModel& m) {
      return json{{"1", to_json(m.c0)},         {"lambda", to_json(m.cl)},    {"p1", to_json(m.cp)},
                  {"lambda^2", to_json(m.cll)}, {"lambda*p1", to_json(m.clp)}, {"p1^2", to_json(m.cpp)},
                  {"verified", m.verified}};
    };
    out["probe"] = {{"u1", model(r.u1)},
                    {"w", model(r.w)},
                    {"jacobian", json::array({json::array({to_json(r.jacobian(0, 0)), to_json(r.jacobian(0, 1))}),
                                              json::array({to_json(r.jacobian(1, 0)), to_json(r.jacobian(1, 1))})})},
                    {"det", to_json(r.det)},
                    {"invertible", r.invertible}};
  }
  return out;
}

json cmd_solve_b4b5(const json& in, const Options&) {
  Spectral S = spectral_or(in, Flavor::Higgs);
  auto pairs = pairs_from(field(in, "pairs", ""), "/pairs");
  if (pairs.size() != 2) parse_fail("/pairs", "expected two pairs");
  HilbPoint5 pt = hilb_coords(pairs[0], pairs[1], S);
  auto fin = [](const json& j, const std::string& w) { return ProjValue::finite(rat(j, w)); };
  if (auto v = optional_field(in, "lambda_plus", fin)) pt.lam_plus = *v;
  if (auto v = optional_field(in, "lambda_minus", fin)) pt.lam_minus = *v;
  if (auto v = optional_field(in, "lambda_plus_i", fin)) pt.lam_plus_i = *v;
  if (auto v = optional_field(in, "lambda_minus_i", fin)) pt.lam_minus_i = *v;
  Poly<Rational> G = solve_b4b5(pt, S);
  json h = {{"lambda_plus", to_json(pt.lam_plus)}, {"lambda_minus", to_json(pt.lam_minus)}};
  if (pt.lam_plus_i) h["lambda_plus_i"] = to_json(*pt.lam_plus_i);
  if (pt.lam_minus_i) h["lambda_minus_i"] = to_json(*pt.lam_minus_i);
  return {{"curve", to_json(G)}, {"hilb", h}, {"k1_valid", validate(typek1_from_curve(G), S).ok()}};
}

json cmd_roundtrip(const json& in, const Options&) {
  Spectral S = spectral_or(in, Flavor::Higgs);
  auto pairs = pairs_from(field(in, "pairs", ""), "/pairs");
  auto F = reconstruct_blown(pairs, S);
  auto got = canonical_sorted(extract(F, S).pairs, S.n);
  // extraction reports the resolved dual on blown-up pairs
  for (auto& a : pairs)
    if (a.blow && !a.inf) a.p = pair_p(a, S);
  bool ok = got == canonical_sorted(pairs, S.n);
  return {{"ok", ok}, {"extracted", pairs_json(got)}};
}

json cmd_genericity(const json& in, const Options&) {
  auto nu = rats(field(in, "nu", ""), "/nu");
  auto r = genericity(nu);
  if (!r.ok) fail(Err::NonGeneric, r.reason);
  return {{"ok", true}, {"generic", true}};
}

}  // namespace

// ---------------------------------------------------------------- scalars

json to_json(const Rational& a) { return a.str(); }

Rational rat(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      parse_fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_fail(where, "expected a rational string \"p/q\"");
}

json to_json(const Poly<Rational>& p) {
  json a = json::array();
  for (int i = 0; i <= p.deg(); ++i) a.push_back(to_json(p.coeff(i)));
  return a;
}

json to_json(const FieldMatrix<Rational>& F) {
  return {{"k", F.k}, {"f11", to_json(F.f11)}, {"f12", to_json(F.f12)}, {"f21", to_json(F.f21)},
          {"connection", F.connection}};
}

json to_json(const ApparentPair& a) {
  json j = a.inf ? json{{"chart", "inf"}, {"s", to_json(a.q)}, {"u", to_json(a.p)}}
                 : json{{"q", to_json(a.q)}, {"p", to_json(a.p)}};
  if (a.blow) j["blowup"] = {{"pole", a.blow->pole + 1}, {"eps", a.blow->eps}, {"v", to_json(a.blow->v)}};
  return j;
}

json to_json(const Spectral& S) {
  json t = json::array();
  for (const auto& x : S.t) t.push_back(to_json(x));
  t.push_back("inf");
  json nu = json::array();
  for (const auto& x : S.nu) nu.push_back(to_json(x));
  return {{"n", S.n}, {"t", t}, {"nu", nu}, {"flavor", S.flavor == Flavor::Higgs ? "higgs" : "connection"}};
}

json to_json(const RatFunc<Rational>& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const ProjValue& v) { return v.str(); }

Poly<Rational> poly_from(const json& j, const std::string& where) { return Poly<Rational>(rats(j, where)); }

FieldMatrix<Rational> field_from(const json& j, const std::string& where) {
  FieldMatrix<Rational> F;
  F.k = j.contains("k") ? int_from(j["k"], at(where, "k")) : 0;
  F.f11 = poly_from(field(j, "f11", where), at(where, "f11"));
  F.f12 = poly_from(field(j, "f12", where), at(where, "f12"));
  F.f21 = poly_from(field(j, "f21", where), at(where, "f21"));
  if (j.contains("connection")) {
    if (!j["connection"].is_boolean()) parse_fail(at(where, "connection"), "expected a boolean");
    F.connection = j["connection"].get<bool>();
  }
  return F;
}

ApparentPair pair_from(const json& j, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected a pair object");
  ApparentPair a;
  if (j.contains("chart")) {
    if (j["chart"] != "inf") parse_fail(at(where, "chart"), "only \"inf\" is a named chart");
    a = ApparentPair::at_inf(rat(field(j, "s", where), at(where, "s")), rat(field(j, "u", where), at(where, "u")));
  } else {
    Rational q = rat(field(j, "q", where), at(where, "q"));
    Rational p = j.contains("p") ? rat(j["p"], at(where, "p")) : Rational(0);
    a = ApparentPair::fin(q, p);
  }
  if (j.contains("blowup")) {
    const json& b = j["blowup"];
    std::string w = at(where, "blowup");
    int pole = int_from(field(b, "pole", w), at(w, "pole"));
    int eps = b.contains("eps") ? int_from(b["eps"], at(w, "eps")) : 1;
    if (eps != 1 && eps != -1) parse_fail(at(w, "eps"), "eps must be 1 or -1");
    a.blow = Blowup<Rational>{pole - 1, eps, rat(field(b, "v", w), at(w, "v"))};
  } else if (!j.contains("chart") && !j.contains("p")) {
    parse_fail(where, "missing key \"p\"");
  }
  return a;
}

std::vector<ApparentPair> pairs_from(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of pairs");
  std::vector<ApparentPair> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(pair_from(j[i], at(where, i)));
  return out;
}

Spectral spectral_from(const json& j, const std::string& where) {
  const json& tj = field(j, "t", where);
  if (!tj.is_array() || tj.empty() || tj.back() != "inf")
    parse_fail(at(where, "t"), "expected finite poles followed by \"inf\"");
  std::vector<Rational> t;
  for (size_t i = 0; i + 1 < tj.size(); ++i) t.push_back(rat(tj[i], at(at(where, "t"), i)));
  auto nu = rats(field(j, "nu", where), at(where, "nu"));
  Flavor fl = Flavor::Higgs;
  if (j.contains("flavor")) {
    if (j["flavor"] == "connection")
      fl = Flavor::Connection;
    else if (j["flavor"] != "higgs")
      parse_fail(at(where, "flavor"), "expected \"higgs\" or \"connection\"");
  }
  Spectral S = make_spectral(t, nu, fl);
  if (j.contains("n") && int_from(j["n"], at(where, "n")) != S.n)
    parse_fail(at(where, "n"), "n disagrees with the number of poles");
  return S;
}

HilbChart hilb_from(const json& j, const std::string& where) {
  const json& cj = field(j, "clusters", where);
  if (!cj.is_array()) parse_fail(at(where, "clusters"), "expected an array");
  HilbChart H;
  for (size_t i = 0; i < cj.size(); ++i) {
    const json& c = cj[i];
    std::string w = at(at(where, "clusters"), i);
    HilbCluster h;
    h.exceptional = c.contains("pole");
    if (h.exceptional) {
      h.pole = int_from(c["pole"], at(w, "pole")) - 1;
      h.eps = c.contains("eps") ? int_from(c["eps"], at(w, "eps")) : 1;
      h.a = rat(field(c, "a", w), at(w, "a"));
    } else {
      h.x = rat(field(c, "x", w), at(w, "x"));
      h.y = rat(field(c, "y", w), at(w, "y"));
    }
    h.mult = c.contains("mult") ? int_from(c["mult"], at(w, "mult")) : 1;
    if (c.contains("lambda")) h.lambda = rats(c["lambda"], at(w, "lambda"));
    H.clusters.push_back(h);
  }
  return H;
}

std::string emit_plot(const Poly<Rational>& g, double from, double to, int steps,
                      const std::vector<Rational>& poles, const std::vector<Rational>& apparent) {
  std::ostringstream os;
  os << "z,plus,minus,mark\n";
  if (!(from <= to) || steps < 1) return os.str();
  struct Row {
    double z;
    std::string mark;
  };
  std::vector<Row> rows;
  for (int i = 0; i <= steps; ++i) rows.push_back({from + (to - from) * i / steps, ""});
  for (size_t i = 0; i < poles.size(); ++i) {
    double z = poles[i].to_double();
    if (z >= from && z <= to) rows.push_back({z, "t" + std::to_string(i + 1)});
  }
  for (const auto& q : apparent) {
    double z = q.to_double();
    if (z >= from && z <= to) rows.push_back({z, "apparent"});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.z < b.z; });
  auto gc = to_cplx(g);
  char buf[128];
  for (const auto& r : rows) {
    double v = gc.eval<Cplx>(Cplx(r.z, 0)).real();
    if (v >= 0) {
      double s = std::sqrt(v);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,", r.z, s, -s);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g,,,", r.z);
    }
    os << buf << r.mark << "\n";
  }
  return os.str();
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"validate",       "extract",      "reconstruct", "reconstruct-hilb",
                                             "spectral-curve", "jump-higgs",   "jump-conn",   "chain-limits",
                                             "solve-b4b5",     "roundtrip",    "genericity"};
  return c;
}

json run(const std::string& cmd, const json& in, const Options& opt) {
  if (opt.backend != "exact" && opt.backend != "float") fail(Err::UsageError, "backend must be exact or float");
  if (!in.is_object()) fail(Err::ParseError, "/: input must be a JSON object");
  if (cmd == "validate") return cmd_validate(in, opt);
  if (cmd == "extract") return cmd_extract(in, opt);
  if (cmd == "reconstruct") return cmd_reconstruct(in, opt);
  if (cmd == "reconstruct-hilb") return cmd_reconstruct_hilb(in, opt);
  if (cmd == "spectral-curve") return cmd_spectral_curve(in, opt);
  if (cmd == "jump-higgs") return cmd_jump_higgs(in, opt);
  if (cmd == "jump-conn") return cmd_jump_conn(in, opt);
  if (cmd == "chain-limits") return cmd_chain_limits(in, opt);
  if (cmd == "solve-b4b5") return cmd_solve_b4b5(in, opt);
  if (cmd == "roundtrip") return cmd_roundtrip(in, opt);
  if (cmd == "genericity") return cmd_genericity(in, opt);
  fail(Err::UsageError, "unknown subcommand " + cmd);
}

json manifest(const std::string& cmd, const std::string& input_text, const Options& opt) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(input_text.data(), input_text.size(), md, &len, EVP_sha256(), nullptr);
  std::string hex;
  char b[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(b, sizeof b, "%02x", md[i]);
    hex += b;
  }
  return {{"command", cmd},
          {"input_sha256", hex},
          {"backend", opt.backend},
          {"tol", opt.tol},
          {"versions",
           {{"artifact", "1.0.0"},
            {"gmp", gmp_version},
            {"json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                         "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
            {"compiler", __VERSION__}}}};
}

int exit_code(Err e) {
  switch (e) {
    case Err::UsageError: return 2;
    case Err::ParseError: return 4;
    default: return 3;
  }
}

}  // namespace ph::cli
