// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

#include "loewy/cli.hpp"

#include "loewy/binlucas.hpp"
#include "loewy/formulas.hpp"
#include "loewy/oracle.hpp"
#include "loewy/spec_text.hpp"
#include "loewy/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <optional>
#include <ostream>

namespace loewy {

namespace {

using nlohmann::json;

struct CliConfig {
  std::size_t q{2};
  std::string field{"gf:2"};
  std::string method{"formula"};
  std::string output{"json"};
};

unsigned parse_field(const std::string& text) {
  unsigned e = 0;
  const char* first = text.data() + 3;
  const char* last = text.data() + text.size();
  if (text.rfind("gf:", 0) != 0 || std::from_chars(first, last, e).ptr != last || first == last || e < 1 ||
      e > 8) {
    throw std::domain_error("field must be gf:<e> with 1 <= e <= 8, got '" + text + "'");
  }
  return e;
}

void add_common(CLI::App& cmd, CliConfig& cfg, bool with_method) {
  cmd.add_option("--q", cfg.q, "group order is 4q; q a power of 2, at least 2")->capture_default_str();
  cmd.add_option("--field", cfg.field, "coefficient field GF(2^e), written gf:<e>")->capture_default_str();
  if (with_method) {
    cmd.add_option("--method", cfg.method, "engine to run")
        ->check(CLI::IsMember({"formula", "oracle", "both"}))
        ->capture_default_str();
  }
  cmd.add_option("--output", cfg.output, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void emit(const json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && value.front().is_string()) {
      out << key << ":\n";
      for (const auto& line : value) out << "  " << line.get<std::string>() << '\n';
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

json nullable(std::optional<std::size_t> v) { return v ? json(*v) : json(nullptr); }

int cmd_loewy(const std::string& left_text, const std::string& right_text, const CliConfig& cfg,
              std::ostream& out) {
  const FieldDesc& field = FieldDesc::gf(parse_field(cfg.field));
  const ModuleSpec left = parse_module_spec(left_text, cfg.q, field);
  const ModuleSpec right = parse_module_spec(right_text, cfg.q, field);

  std::optional<std::size_t> formula;
  std::optional<std::size_t> oracle;
  json trace = json::array();
  if (cfg.method != "oracle") {
    const LoewyReport report = loewy_general(left, right, cfg.q, field);
    formula = report.length;
    for (const auto& line : report.trace) trace.push_back(line);
  }
  if (cfg.method != "formula") oracle = oracle_loewy(left, right, cfg.q, field);

  const bool disagree = formula && oracle && *formula != *oracle;
  json doc;
  doc["left"] = format_module_spec(left);
  doc["right"] = format_module_spec(right);
  doc["q"] = cfg.q;
  doc["field"] = field.name();
  doc["method"] = cfg.method;
  doc["loewy_formula"] = nullable(formula);
  doc["loewy_oracle"] = nullable(oracle);
  doc["agree"] = formula && oracle ? json(!disagree) : json(nullptr);
  doc["projective_summand"] = projective_summand(left, right, cfg.q, field);
  doc["trace"] = trace;
  emit(doc, cfg.output, out);
  return disagree ? kExitMismatch : kExitOk;
}

struct VerifyArgs {
  Nat max_l{3};
  Nat max_m{3};
  std::string grid{"all"};
  unsigned jobs{1};
  bool inject_fault{false};
};

int cmd_verify(const VerifyArgs& args, const CliConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.q = cfg.q;
  options.field_e = parse_field(cfg.field);
  options.max_l = args.max_l;
  options.max_m = args.max_m;
  options.max_dim = max_oracle_dim();
  options.jobs = args.jobs;
  if (args.grid != "all") {
    options.grids = {args.grid == "uniserial"     ? Grid::uniserial
                     : args.grid == "band_string" ? Grid::band_string
                                                  : Grid::band_band};
  }
  if (args.inject_fault) {
    options.formula = [](const ModuleSpec& a, const ModuleSpec& b, std::size_t q, const FieldDesc& f) {
      return loewy_general(a, b, q, f).length + 1;
    };
  }
  require_valid_q(cfg.q);
  const VerifySummary summary = run_verify(options);

  json doc;
  doc["q"] = cfg.q;
  doc["field"] = FieldDesc::gf(options.field_e).name();
  doc["max_l"] = args.max_l;
  doc["max_m"] = args.max_m;
  json grids = json::array();
  json per_grid = json::object();
  for (Grid g : options.grids) {
    grids.push_back(grid_name(g));
    const auto it = summary.checked_per_grid.find(g);
    per_grid[grid_name(g)] = it == summary.checked_per_grid.end() ? 0 : it->second;
  }
  doc["grids"] = grids;
  doc["cells_checked"] = summary.checked;
  doc["cells_skipped"] = summary.skipped;
  doc["checked_per_grid"] = per_grid;
  doc["mismatch_count"] = summary.mismatch_count;
  doc["projective_exceptions"] = summary.projective_exceptions;
  json cases = json::object();
  for (char c : {'a', 'b', 'c', 'd', 'e'}) {
    const auto it = summary.band_band_cases.find(c);
    cases[std::string(1, c)] = it == summary.band_band_cases.end() ? 0 : it->second;
  }
  doc["band_band_cases"] = cases;
  json mismatches = json::array();
  for (const auto& m : summary.mismatches) {
    mismatches.push_back({{"grid", grid_name(m.grid)},
                          {"left", m.left},
                          {"right", m.right},
                          {"formula", m.formula},
                          {"oracle", m.oracle},
                          {"projective_summand", m.projective_formula}});
  }
  doc["mismatches"] = mismatches;
  doc["ok"] = summary.ok();
  emit(doc, cfg.output, out);
  return summary.ok() ? kExitOk : kExitMismatch;
}

json perp_shifted(Nat l, Nat m) {
  if (m == 0) return nullptr;
  return binlucas::perp(l, m - 1);
}

int cmd_hash(Nat l, Nat m, const CliConfig& cfg, std::ostream& out) {
  json doc;
  doc["l"] = l;
  doc["m"] = m;
  doc["hash"] = binlucas::hash(l, m);
  doc["perp"] = binlucas::perp(l, m);
  doc["perp_l_minus_1_m"] = perp_shifted(m, l);
  doc["perp_l_m_minus_1"] = perp_shifted(l, m);
  emit(doc, cfg.output, out);
  return kExitOk;
}

int cmd_paths(Nat t, Nat l, Nat m, const CliConfig& cfg, std::ostream& out) {
  json doc;
  doc["t"] = t;
  doc["l"] = l;
  doc["m"] = m;
  doc["count"] = binlucas::q_count(t, l, m).str();
  doc["parity"] = binlucas::q_parity(t, l, m);
  emit(doc, cfg.output, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loewy lengths of tensor products of modules of dihedral 2-groups", "loewy"};
  app.require_subcommand(1);

  CliConfig cfg;

  auto* loewy_cmd = app.add_subcommand("loewy", "Loewy length of a tensor product");
  std::string left;
  std::string right;
  loewy_cmd->add_option("left", left, "left module spec (A:<l>, B:<l>, S:<word>, N:..., W:..., P)")->required();
  loewy_cmd->add_option("right", right, "right module spec")->required();
  add_common(*loewy_cmd, cfg, true);

  auto* verify_cmd = app.add_subcommand("verify", "compare the formulas with the matrix oracle on grids");
  VerifyArgs vargs;
  verify_cmd->add_option("--max-l", vargs.max_l, "largest left length")->capture_default_str();
  verify_cmd->add_option("--max-m", vargs.max_m, "largest right length")->capture_default_str();
  verify_cmd->add_option("--grid", vargs.grid, "grid to run")
      ->check(CLI::IsMember({"all", "uniserial", "band_string", "band_band"}))
      ->capture_default_str();
  verify_cmd->add_option("--jobs", vargs.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  verify_cmd->add_flag("--inject-fault", vargs.inject_fault, "add 1 to every formula value (harness self-test)");
  add_common(*verify_cmd, cfg, false);

  auto* hash_cmd = app.add_subcommand("hash", "l#m and the disjointness predicates");
  Nat hl = 0;
  Nat hm = 0;
  hash_cmd->add_option("l", hl)->required();
  hash_cmd->add_option("m", hm)->required();
  hash_cmd->add_option("--output", cfg.output)->check(CLI::IsMember({"json", "text"}));

  auto* paths_cmd = app.add_subcommand("paths", "number of paths of length t to (l, m) and its parity");
  Nat pt = 0;
  Nat pl = 0;
  Nat pm = 0;
  paths_cmd->add_option("t", pt)->required();
  paths_cmd->add_option("l", pl)->required();
  paths_cmd->add_option("m", pm)->required();
  paths_cmd->add_option("--output", cfg.output)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*loewy_cmd) return cmd_loewy(left, right, cfg, out);
    if (*verify_cmd) return cmd_verify(vargs, cfg, out);
    if (*hash_cmd) return cmd_hash(hl, hm, cfg, out);
    return cmd_paths(pt, pl, pm, cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DimensionCapError& e) {
    err << "error: " << e.what() << " (set LOEWY_MAX_DIM to raise it)\n";
    return kExitInput;
  }
}

}  // namespace loewy
