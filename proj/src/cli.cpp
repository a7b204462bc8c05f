#include "newtonspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "newtonspec/ehrhart.hpp"
#include "newtonspec/error.hpp"
#include "newtonspec/graded_ring.hpp"
#include "newtonspec/invariants.hpp"
#include "newtonspec/poly.hpp"
#include "newtonspec/polytope.hpp"
#include "newtonspec/spectrum.hpp"

namespace newtonspec::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string file;
  bool local = false;
  bool as_json = false;
  std::vector<std::string> vars;
  std::vector<std::string> basis;
  std::optional<std::int64_t> max_truncation;
  unsigned threads = 1;
};

struct Command {
  const char* name;
  const char* help;
  const char* formula;
};

const Command kCommands[] = {
    {"spectrum", "toric Newton spectrum and the route used", "toric spectrum"},
    {"spec-infinity", "spectrum at infinity (local singularity spectrum with --local)", "spectrum at infinity"},
    {"milnor", "Milnor number, global or local", "Milnor number"},
    {"delta", "Ehrhart delta-vector", "delta vector"},
    {"ehrhart", "Ehrhart polynomial in the binomial basis", "Ehrhart polynomial"},
    {"orbifold", "orbifold cohomology dimensions", "orbifold dimensions"},
    {"product-table", "product table of the graded quotient ring", "product table"},
    {"volume", "normalized volume of the Newton polytope", "normalized volume"},
    {"check", "run the invariant suite and report each check", "invariant suite"},
    {"model", "dump the polytope model as JSON", "polytope model"},
};

std::string formula_name(const RunConfig& cfg) {
  if (cfg.subcommand == "spec-infinity" && cfg.local) return "local singularity spectrum";
  if (cfg.subcommand == "milnor" && cfg.local) return "local Milnor number";
  for (const auto& c : kCommands)
    if (cfg.subcommand == c.name) return c.formula;
  return cfg.subcommand;
}

std::string read_input(const RunConfig& cfg) {
  if (cfg.file.empty()) return cfg.input;
  std::ifstream in(cfg.file, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read input file " + cfg.file);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
  return text;
}

json series_json(const Series& s) { return {{"text", s.to_string()}, {"terms", s.to_json()}}; }

// Produces the report for one subcommand as JSON; `text` receives the
// human-readable rendering. Returns the exit code.
int execute(const RunConfig& cfg, const Poly& p, json& j, std::string& text) {
  SpectrumOptions opts;
  opts.max_truncation = cfg.max_truncation;
  opts.threads = cfg.threads;
  const PolytopeModel model = PolytopeModel::build(p);
  const std::string& cmd = cfg.subcommand;

  if (cmd == "spectrum") {
    auto ts = toric_spectrum(model, opts);
    j["spectrum"] = series_json(ts.series);
    j["route"] = to_string(ts.route);
    text = ts.series.to_string() + "\nroute: " + to_string(ts.route) + "\n";
  } else if (cmd == "spec-infinity") {
    auto s = spectrum_at_infinity(p, opts);
    j["spectrum"] = series_json(s);
    text = s.to_string() + "\n";
  } else if (cmd == "milnor") {
    auto r = milnor_routes(p, opts);
    if (r.from_spectrum != r.from_volumes)
      throw Error(ErrorKind::InternalMismatch, "spectrum gives " + std::to_string(r.from_spectrum) +
                                                   " but the volume formula gives " + std::to_string(r.from_volumes));
    j["milnor"] = r.from_spectrum;
    text = std::to_string(r.from_spectrum) + "\n";
  } else if (cmd == "delta") {
    auto d = delta_from_counts(model);
    auto from_spec = delta_from_spectrum(toric_spectrum(model, opts).series, model.dim());
    if (!(d == from_spec))
      throw Error(ErrorKind::InternalMismatch,
                  "lattice counts give " + d.to_string() + " but the spectrum gives " + from_spec.to_string());
    j["delta"] = d.entries;
    j["text"] = d.to_string();
    text = d.to_string() + "\n";
  } else if (cmd == "ehrhart") {
    auto poly = ehrhart_polynomial(delta_from_counts(model));
    j["ehrhart"] = poly.to_json();
    text = poly.to_string() + "\n";
  } else if (cmd == "orbifold") {
    auto s = orbifold_dimensions(model);
    j["dimensions"] = series_json(s);
    text = s.to_string() + "\n";
  } else if (cmd == "product-table") {
    std::optional<std::vector<ExpVec>> hint;
    if (!cfg.basis.empty()) {
      hint.emplace();
      for (const auto& b : cfg.basis) hint->push_back(parse_monomial(b, p.vars));
    }
    auto spectrum = toric_spectrum(model, opts).series;
    auto gb = quotient_basis(p, model, spectrum, hint);
    auto table = product_table(gb);
    j["table"] = table.to_json(p.vars);
    text = table.to_text(p.vars);
  } else if (cmd == "volume") {
    j["normalized_volume"] = model.normalized_volume();
    text = std::to_string(model.normalized_volume()) + "\n";
  } else if (cmd == "check") {
    auto results = run_invariants(p, opts);
    std::size_t counts[3] = {0, 0, 0};
    auto rows = json::array();
    std::ostringstream out;
    for (const auto& r : results) {
      ++counts[static_cast<int>(r.status)];
      rows.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
      out << '[' << to_string(r.status) << "] " << r.name;
      if (!r.detail.empty()) out << " (" << r.detail << ')';
      out << '\n';
    }
    out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
    j["checks"] = rows;
    j["passed"] = all_passed(results);
    text = out.str();
    return all_passed(results) ? 0 : 2;
  } else if (cmd == "model") {
    j["model"] = model.to_json(p.vars);
    text = j["model"].dump(2) + "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Newton spectra, Milnor numbers and Ehrhart data of convenient polynomials", "newtonspec"};
  app.require_subcommand(1);
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    auto* inline_opt = sub->add_option("input", cfg.input, "polynomial, e.g. \"u^2 + u^2*v^2 + v^2\"");
    auto* file_opt = sub->add_option("--file", cfg.file, "read the polynomial from a UTF-8 file");
    inline_opt->excludes(file_opt);
    sub->add_flag("--local", cfg.local, "use the Newton polyhedron of a germ at the origin");
    sub->add_flag("--json", cfg.as_json, "emit JSON");
    sub->add_option("--vars", cfg.vars, "variable order, e.g. a,b,c")->delimiter(',')->allow_extra_args(false);
    sub->add_option("--max-truncation", cfg.max_truncation, "largest truncation level for the series route")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
    if (std::string(c.name) == "product-table")
      sub->add_option("--basis", cfg.basis, "basis monomials, e.g. 1,u*v,u")->delimiter(',')->allow_extra_args(false);
    sub->callback([&cfg, name = c.name] { cfg.subcommand = name; });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "newtonspec: " << e.what() << '\n';
    return 1;
  }
  if (cfg.input.empty() && cfg.file.empty()) {
    err << "newtonspec " << cfg.subcommand << ": no input polynomial given\n";
    return 1;
  }

  json j;
  j["schema"] = 1;
  j["command"] = cfg.subcommand;
  j["mode"] = cfg.local ? "local" : "global";
  try {
    std::optional<std::vector<std::string>> order;
    if (!cfg.vars.empty()) order = cfg.vars;
    Poly p = parse_polynomial(read_input(cfg), cfg.local ? Mode::Local : Mode::Global, order);
    j["variables"] = p.vars;
    std::string text;
    int code = execute(cfg, p, j, text);
    if (cfg.as_json)
      out << j.dump(2) << '\n';
    else
      out << text;
    return code;
  } catch (const Error& e) {
    const int code = is_consistency_failure(e.kind()) ? 2 : 1;
    err << "newtonspec " << cfg.subcommand << ": " << formula_name(cfg) << ": " << to_string(e.kind()) << ": "
        << e.what() << '\n';
    if (cfg.as_json) {
      json error{{"kind", to_string(e.kind())}, {"formula", formula_name(cfg)}, {"message", e.what()}};
      if (auto* nc = dynamic_cast<const NotConvenientError*>(&e)) error["missing_axes"] = nc->missing_axes();
      if (auto* pe = dynamic_cast<const ParseError*>(&e)) error["offset"] = pe->offset();
      j["error"] = error;
      out << j.dump(2) << '\n';
    }
    return code;
  } catch (const std::exception& e) {
    err << "newtonspec " << cfg.subcommand << ": " << formula_name(cfg) << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace newtonspec::cli
