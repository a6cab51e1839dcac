#pragma once

#include <string>
#include <vector>

#include "higgs/charts.hpp"
#include "json.hpp"

namespace ph::cli {

using json = nlohmann::json;

struct Options {
  std::string backend = "exact";  // exact | float
  double tol = 1e-9;
  bool manifest = false;
};

// Scalars
json to_json(const Rational& a);
Rational rat(const json& j, const std::string& where);

// Domain values
json to_json(const Poly<Rational>& p);
json to_json(const FieldMatrix<Rational>& F);
json to_json(const ApparentPair& a);
json to_json(const Spectral& S);
json to_json(const RatFunc<Rational>& f);
json to_json(const ProjValue& v);

Poly<Rational> poly_from(const json& j, const std::string& where);
FieldMatrix<Rational> field_from(const json& j, const std::string& where);
ApparentPair pair_from(const json& j, const std::string& where);
std::vector<ApparentPair> pairs_from(const json& j, const std::string& where);
Spectral spectral_from(const json& j, const std::string& where);
HilbChart hilb_from(const json& j, const std::string& where);

// CSV with columns z,plus,minus,mark: a uniform grid on [from, to] merged
// with the poles and apparent abscissae inside the range. Empty range or
// steps < 1 gives a header-only table; negative g leaves the branches empty.
std::string emit_plot(const Poly<Rational>& g, double from, double to, int steps,
                      const std::vector<Rational>& poles, const std::vector<Rational>& apparent);

const std::vector<std::string>& commands();

// Runs one subcommand on a parsed input document; throws ph::Error.
json run(const std::string& cmd, const json& in, const Options& opt);

json manifest(const std::string& cmd, const std::string& input_text, const Options& opt);

// 2 usage, 4 parse, 3 any other domain error
int exit_code(Err e);

}  // namespace ph::cli
