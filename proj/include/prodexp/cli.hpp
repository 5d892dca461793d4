// Copyright 2026 The prodexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prodexp/harness.hpp"

namespace prodexp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitTheory = 3;
inline constexpr int kExitUsage = 64;

namespace cli {

inline LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  detail::require(in.good(), "cannot open code file " + path);
  return read_code(in);
}

inline TensorWord load_word(const std::string& path, std::uint64_t cell_cap) {
  std::ifstream in(path);
  detail::require(in.good(), "cannot open word file " + path);
  return read_tensor_word(in, cell_cap);
}

struct CodeArgs {
  std::string c1, c2;
  std::vector<std::string> codes;

  void attach(CLI::App* sub) {
    sub->add_option("--c1", c1, "first code file");
    sub->add_option("--c2", c2, "second code file");
    sub->add_option("--code", codes, "code file, once per axis (alternative to --c1/--c2)");
  }

  std::vector<LinearCode> load() const {
    std::vector<LinearCode> out;
    if (!codes.empty()) {
      detail::require(c1.empty() && c2.empty(), "use either --code or --c1/--c2");
      for (const std::string& p : codes) out.push_back(load_code(p));
    } else {
      detail::require(!c1.empty() && !c2.empty(), "both --c1 and --c2 are required");
      out = {load_code(c1), load_code(c2)};
    }
    return out;
  }

  std::pair<LinearCode, LinearCode> load_pair() const {
    auto v = load();
    detail::require(v.size() == 2, "this command takes exactly two codes");
    return {v[0], v[1]};
  }
};

// Single-row CSV for reports that are not tables.
inline std::string object_csv(const Json& j) {
  Json rows = Json::array();
  rows.push_back(j);
  return rows_csv(rows);
}

}  // namespace cli

/// Command-line entry point. Reports go to `out` (or the --out file) and
/// diagnostics to `err`. Returns 0, 2 (precondition or cap), 3 (theory
/// violation or failed statistical check) or 64 (usage).
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact computations for product-expansion of linear codes", "prodexp"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string format = "json", out_path;
  std::uint64_t cap_cells = kDefaultCellCap, cap_enum = kDefaultEnumCap;
  CLI::Option* seed_opt = app.add_option("--seed", seed, "seed for randomized commands");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cap-cells", cap_cells, "maximum number of grid cells")->check(CLI::PositiveNumber);
  app.add_option("--cap-enum", cap_enum, "maximum enumeration size")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write the report to this file");

  cli::CodeArgs rho_args, robust_args, agree_args, cheeger_args, decompose_args;
  CLI::App* rho = app.add_subcommand("rho", "exact expansion factor");
  rho_args.attach(rho);

  CLI::App* robust = app.add_subcommand("robust", "exact robustness constant of a pair");
  robust_args.attach(robust);

  bool direct = false;
  CLI::App* agree = app.add_subcommand("agree", "agreement-test constant of a pair");
  agree_args.attach(agree);
  agree->add_flag("--direct", direct, "enumerate codeword pairs instead of the decomposition reduction");

  std::optional<std::size_t> degree;
  CLI::App* cheeger = app.add_subcommand("cheeger", "Cheeger constant of the tensor complex");
  cheeger_args.attach(cheeger);
  cheeger->add_option("--degree", degree, "cochain degree (default m - 1)");

  ExperimentConfig census_cfg;
  CLI::App* census = app.add_subcommand("census", "random-ensemble census of expansion factors");
  census->add_option("--q", census_cfg.q, "field order");
  census->add_option("--n", census_cfg.n, "code length");
  census->add_option("--k1", census_cfg.k1, "dimension of the first code");
  census->add_option("--k2", census_cfg.k2, "dimension of the second code");
  census->add_option("--trials", census_cfg.trials, "number of sampled pairs");
  census->add_option("--samples", census_cfg.samples, "heuristic samples per trial");
  census->add_flag("--heuristic", census_cfg.heuristic, "skip exact enumeration");

  std::uint32_t mc_q = 2;
  std::size_t mc_n = 8, mc_u = 4, mc_v = 4, mc_k = 2, mc_r1 = 3, mc_r2 = 3, mc_r = 4;
  std::size_t mc_trials3 = 10000, mc_trials4 = 10000, mc_trials5 = 1000;
  std::string mc_word;
  CLI::App* mc3 = app.add_subcommand("mc-lemma3", "Monte Carlo: random subspace meeting a fixed subspace");
  mc3->add_option("--q", mc_q);
  mc3->add_option("--n", mc_n);
  mc3->add_option("--u", mc_u, "dimension of the random subspace");
  mc3->add_option("--v", mc_v, "dimension of the fixed subspace");
  mc3->add_option("--k", mc_k, "meet dimension threshold");
  mc3->add_option("--trials", mc_trials3);
  std::size_t mc4_n = 6;
  CLI::App* mc4 = app.add_subcommand("mc-lemma4", "Monte Carlo: fixed word in a random dual tensor code");
  mc4->add_option("--q", mc_q);
  mc4->add_option("--n", mc4_n);
  mc4->add_option("--r1", mc_r1);
  mc4->add_option("--r2", mc_r2);
  mc4->add_option("--word", mc_word, "word file (default: identity matrix)");
  mc4->add_option("--trials", mc_trials4);
  CLI::App* mc5 = app.add_subcommand("mc-lemma5", "Monte Carlo: property (*) failure rate");
  mc5->add_option("--q", mc_q);
  mc5->add_option("--n", mc_n);
  mc5->add_option("--r", mc_r);
  mc5->add_option("--trials", mc_trials5);

  std::size_t css_max_n = 7;
  CLI::App* demo_css = app.add_subcommand("demo-css", "CSS pairs are not product-expanding");
  demo_css->add_option("--max-n", css_max_n);
  std::vector<std::uint32_t> rs_orders{5, 7, 8};
  CLI::App* demo_rs = app.add_subcommand("demo-rs", "Reed-Solomon dual containment and identity witness");
  demo_rs->add_option("--orders", rs_orders);

  std::string word_path, method = "min-cost";
  CLI::App* decompose = app.add_subcommand("decompose", "decompose a word of the dual tensor code");
  decompose_args.attach(decompose);
  decompose->add_option("--word", word_path, "word file")->required();
  decompose->add_option("--method", method)->check(CLI::IsMember({"min-cost", "greedy"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const bool randomized = census->parsed() || mc3->parsed() || mc4->parsed() || mc5->parsed();
  if (randomized && !seed_opt->count()) {
    err << "error: --seed is required for randomized commands\n\n" << app.help();
    return kExitUsage;
  }

  Json report;
  std::string csv;
  int code = kExitOk;
  try {
    if (rho->parsed()) {
      const auto codes = rho_args.load();
      report = report_json(expansion_factor(CodeCollection(codes), cap_enum));
    } else if (robust->parsed()) {
      const auto [c1, c2] = robust_args.load_pair();
      const RobustnessResult r = robustness_constant(c1, c2, cap_enum);
      report = Json{{"robustness", r.value ? Json(to_string(*r.value)) : Json(nullptr)},
                    {"argmin", r.argmin ? Json(word_to_compact(*r.argmin)) : Json(nullptr)}};
    } else if (agree->parsed()) {
      const auto [c1, c2] = agree_args.load_pair();
      const Rational a = direct ? agreement_test_constant_direct(c1, c2, cap_enum) : agreement_test_constant(c1, c2, cap_enum);
      report = Json{{"agreement", to_string(a)}, {"path", direct ? "direct" : "reduction"}};
    } else if (cheeger->parsed()) {
      const CodeCollection coll(cheeger_args.load());
      const BasedComplex cx = collection_complex(coll, cap_cells);
      const std::size_t deg = degree.value_or(coll.m() - 1);
      const auto h = cheeger_constant(cx, deg, cap_enum);
      report = Json{{"degree", deg}, {"cheeger", h ? Json(to_string(*h)) : Json(nullptr)}, {"complex", complex_json(cx)}};
      if (deg + 1 == coll.m()) {
        const CheegerIdentity id = verify_expansion_cheeger_identity(coll, cap_enum);
        report["rho"] = to_string(id.rho);
        report["identity_holds"] = id.holds;
        if (!id.holds) code = kExitTheory;
      }
    } else if (census->parsed()) {
      census_cfg.seed = seed;
      census_cfg.cap_cells = cap_cells;
      census_cfg.cap_enum = cap_enum;
      const CensusReport r = run_expansion_census(census_cfg);
      report = census_json(r);
      csv = rows_csv(report["trials"]);
      if (r.violations.total() > 0) code = kExitTheory;
    } else if (mc3->parsed() || mc4->parsed() || mc5->parsed()) {
      MonteCarloReport r;
      if (mc3->parsed()) {
        r = run_subspace_meet_montecarlo(mc_q, mc_n, mc_u, mc_v, mc_k, mc_trials3, seed);
      } else if (mc4->parsed()) {
        const Field f = Field::of_order(mc_q);
        Matrix x = mc_word.empty() ? Matrix::identity(f, mc4_n) : cli::load_word(mc_word, cap_cells).to_matrix();
        r = run_boxplus_membership_montecarlo(x, mc_r1, mc_r2, mc_trials4, seed);
      } else {
        r = run_property_star_montecarlo(mc_q, mc_n, mc_r, mc_trials5, seed);
      }
      report = monte_carlo_json(r);
      if (!r.within) code = kExitTheory;
    } else if (demo_css->parsed()) {
      const CssDemo d = run_css_demo(css_max_n, cap_enum);
      report = css_json(d);
      csv = rows_csv(report["rows"]);
      if (d.violations) code = kExitTheory;
    } else if (demo_rs->parsed()) {
      const RsDemo d = run_rs_demo(rs_orders);
      report = rs_json(d);
      csv = rows_csv(report["rows"]);
      if (d.violations) code = kExitTheory;
    } else if (decompose->parsed()) {
      const auto codes = decompose_args.load();
      const TensorWord x = cli::load_word(word_path, cap_cells);
      Decomposition d;
      if (method == "greedy") {
        detail::require(codes.size() == 2, "the greedy method takes exactly two codes");
        const GreedyResult g = greedy_decomposition(x, codes[0], codes[1], cap_enum);
        detail::require(g.success, "greedy decomposition stalled with residual " + word_to_compact(g.residual));
        d = *g.decomposition;
      } else {
        d = min_cost_decomposition(x, CodeCollection(codes), cap_enum);
      }
      Json parts = Json::array();
      for (const TensorWord& a : d.parts) parts.push_back(word_to_compact(a));
      report = Json{{"method", method},
                    {"word", word_to_compact(x)},
                    {"parts", parts},
                    {"raw_cost", d.raw_cost},
                    {"cost", to_string(d.cost)}};
    }
  } catch (const TheoryViolation& e) {
    err << "theory violation: " << e.what() << '\n';
    return kExitTheory;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }

  if (!report.contains("schema")) {
    Json wrapped{{"schema", kReportSchema}, {"command", app.get_subcommands().front()->get_name()}};
    for (auto it = report.begin(); it != report.end(); ++it) wrapped[it.key()] = it.value();
    report = std::move(wrapped);
  }
  const std::string text = format == "csv" ? (csv.empty() ? cli::object_csv(report) : csv) : report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << out_path << '\n';
      return kExitPrecondition;
    }
    file << text;
  }
  return code;
}

}  // namespace prodexp
