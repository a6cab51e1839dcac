#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "cli_lib.hpp"

using namespace ph;
using ph::cli::json;

namespace {

int emit(const json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    os << text;
  }
  return 0;
}

json diagnostics(const std::string& name, const std::string& msg) {
  return {{"ok", false}, {"diagnostics", {{"error", name}, {"message", msg}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank-2 parabolic Higgs/connection calculus on P^1"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  cli::Options opt;
  std::string in_path, out_path;
  app.add_option("--backend", opt.backend, "exact | float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", opt.tol, "tolerance for float-backend checks");
  app.add_option("--in", in_path, "input JSON (default: standard input)");
  app.add_option("--out", out_path, "output JSON (default: standard output)");
  app.add_flag("--manifest", opt.manifest, "attach a run manifest");
  for (const auto& c : cli::commands()) app.add_subcommand(c, "");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : 2;
  }
  std::string cmd = app.get_subcommands().front()->get_name();

  std::string text;
  if (in_path.empty() || in_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream is(in_path, std::ios::binary);
    if (!is) {
      emit(diagnostics("UsageError", "cannot read " + in_path), out_path);
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(is), {});
  }

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    emit(diagnostics("ParseError", std::string("byte ") + std::to_string(e.byte) + ": " + e.what()), out_path);
    return 4;
  }
  int rc = 0;
  json out;
  try {
    out = cli::run(cmd, doc, opt);
  } catch (const Error& e) {
    out = diagnostics(e.name(), e.what());
    rc = cli::exit_code(e.code());
  } catch (const json::exception& e) {
    out = diagnostics("ParseError", e.what());
    rc = 4;
  }
  if (opt.manifest) out["manifest"] = cli::manifest(cmd, text, opt);
  int wrc = emit(out, out_path);
  return rc ? rc : wrc;
}
