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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "prodexp/code.hpp"
#include "prodexp/complex.hpp"
#include "prodexp/entropy.hpp"
#include "prodexp/errors.hpp"
#include "prodexp/expansion.hpp"
#include "prodexp/lemmas.hpp"
#include "prodexp/random.hpp"
#include "prodexp/rational.hpp"
#include "prodexp/tensor.hpp"
#include "prodexp/testability.hpp"

namespace prodexp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "prodexp/1";

/// Parameters of a randomized run. The seed has no default.
struct ExperimentConfig {
  std::string experiment = "census";
  std::uint32_t q = 2;
  std::size_t n = 4;
  std::size_t k1 = 2, k2 = 2;
  std::size_t trials = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t cap_cells = kDefaultCellCap;
  std::uint64_t cap_enum = kDefaultEnumCap;
  /// Forces the heuristic census even when exact enumeration fits.
  bool heuristic = false;
  /// Heuristic mode: dual tensor codewords sampled per trial.
  std::size_t samples = 16;

  void validate() const {
    detail::require(seed.has_value(), "a seed is required");
    detail::require(cap_cells > 0 && cap_enum > 0, "caps must be positive");
    detail::require(n >= 1, "length must be positive");
    detail::require(k1 <= n && k2 <= n, "code dimension exceeds length");
    detail::require(static_cast<std::uint64_t>(n) * n <= cap_cells, "grid exceeds the cell cap");
    Field::of_order(q);
  }
};

/// (1/2) min(a1 a2 / 4, H_q^{-1}(e1 e2 / 8)) with a_i = H_q^{-1}(r_i / 8n).
inline double rho_formula(std::uint32_t q, std::size_t n, std::size_t k1, std::size_t k2) {
  const double nn = static_cast<double>(n);
  const double r1 = static_cast<double>(n - k1), r2 = static_cast<double>(n - k2);
  const double a1 = entropy_q_inv(q, r1 / (8 * nn)), a2 = entropy_q_inv(q, r2 / (8 * nn));
  const double e = (r1 / nn) * (r2 / nn);
  return 0.5 * std::min(a1 * a2 / 4, entropy_q_inv(q, e / 8));
}

inline Json code_json(const LinearCode& c) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.k(); ++r) rows.push_back(format_word(c.generator_matrix().row(r), c.field().q()));
  return Json{{"n", c.n()}, {"k", c.k()}, {"generator", rows}};
}

inline Json report_json(const ExpansionReport& r) {
  Json j{{"rho", to_string(r.rho)}, {"method", r.method}, {"q", r.q}, {"lengths", r.lengths}, {"dims", r.dims}};
  j["argmin"] = r.argmin ? Json(word_to_compact(*r.argmin)) : Json(nullptr);
  if (r.decomposition) {
    Json parts = Json::array();
    for (const TensorWord& a : r.decomposition->parts) parts.push_back(word_to_compact(a));
    j["decomposition"] = {{"parts", parts}, {"raw_cost", r.decomposition->raw_cost}, {"cost", to_string(r.decomposition->cost)}};
  }
  return j;
}

// ---------------------------------------------------------------------------
// Census

struct CensusTrial {
  std::size_t index = 0;
  std::uint64_t sub_seed = 0;
  LinearCode c1, c2;
  /// "exact" or "heuristic".
  std::string mode;
  /// Exact mode only.
  std::optional<ExpansionReport> exact;
  /// Certified upper bound on rho from the diagonal witness.
  std::optional<Rational> witness_upper;
  std::string witness_method;
  /// Heuristic mode: min over sampled codewords of |x| / greedy cost.
  std::optional<Rational> greedy_estimate;
  std::size_t greedy_samples = 0, greedy_failures = 0;
  Rational prop1_bound;
  bool css = false;
};

struct CensusViolations {
  std::size_t prop1 = 0;
  std::size_t css_upper = 0;
  std::size_t rank_bound = 0;
  std::size_t smb_conversion = 0;
  std::size_t total() const { return prop1 + css_upper + rank_bound + smb_conversion; }
};

struct CensusReport {
  ExperimentConfig config;
  std::vector<CensusTrial> trials;
  CensusViolations violations;
  double formula_rho = 0;
  std::size_t exact_trials = 0, heuristic_trials = 0;
  std::size_t at_least_formula = 0, within_prop1 = 0;
  std::optional<Rational> min_rho, median_rho;
};

namespace detail {

inline Vec random_combination(const Subspace& s, Rng& rng) {
  Vec coeff(s.dim());
  for (Elem& c : coeff) c = random_element(s.field(), rng);
  return s.dim() ? s.combine(coeff) : Vec(s.ambient(), 0);
}

inline bool exact_fits(const CodeCollection& coll, std::uint64_t cap) {
  std::uint64_t exponent = 0;
  for (std::size_t i = 0; i < coll.m(); ++i) exponent += coll.shape().cells() / coll.code(i).n() * coll.code(i).k();
  try {
    checked_power(coll.field().q(), exponent, cap, "census");
    return true;
  } catch (const CapExceeded&) {
    return false;
  }
}

// Rigorous checks on one exact trial; increments the counters that fail.
inline void audit_exact_trial(const CensusTrial& t, std::uint64_t cap, Rng& rng, CensusViolations& v) {
  const Rational rho = t.exact->rho;
  const std::size_t n = t.c1.n();
  if (rho > t.prop1_bound) ++v.prop1;
  if (t.css && rho > Rational(1, static_cast<std::int64_t>(n))) ++v.css_upper;
  CodeCollection coll(t.c1, t.c2);
  const Subspace box = boxplus_basis(coll);
  std::vector<TensorWord> probes;
  if (t.exact->argmin) probes.push_back(*t.exact->argmin);
  for (int s = 0; s < 4; ++s) probes.emplace_back(coll.field(), coll.shape(), random_combination(box, rng));
  for (const TensorWord& x : probes)
    if (!rank_bound_check(x, t.c1, t.c2).holds) ++v.rank_bound;
  if (box.dim() == 0) return;
  const Rational nn = static_cast<std::int64_t>(n);
  const Rational s = rho * rho * nn * nn / 3, m = rho * rho * nn / 6, beta = rho / 3;
  const SmbResult smb = smb_expansion_check(t.c1, t.c2, s, m, beta, cap);
  if (!smb.holds) ++v.smb_conversion;
  if (smb.holds && rho < std::min(s / (2 * nn * nn), beta)) ++v.smb_conversion;
}

}  // namespace detail

/// Samples `trials` pairs from Gr(n, k1) x Gr(n, k2). Trial t uses the
/// generator Rng::for_trial(seed, t), so trials are independent of each
/// other and of evaluation order.
inline CensusReport run_expansion_census(const ExperimentConfig& cfg) {
  cfg.validate();
  const Field f = Field::of_order(cfg.q);
  CensusReport rep;
  rep.config = cfg;
  rep.formula_rho = rho_formula(cfg.q, cfg.n, cfg.k1, cfg.k2);
  std::vector<Rational> exact_values;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    CensusTrial tr;
    tr.index = t;
    tr.sub_seed = *cfg.seed ^ t;
    Rng rng = Rng::for_trial(*cfg.seed, t);
    tr.c1 = LinearCode(random_subspace(f, cfg.n, cfg.k1, rng));
    tr.c2 = LinearCode(random_subspace(f, cfg.n, cfg.k2, rng));
    tr.prop1_bound = tr.c1.epsilon() * tr.c2.epsilon() + Rational(1, static_cast<std::int64_t>(cfg.n));
    tr.css = is_css_pair(tr.c1, tr.c2);
    CodeCollection coll(tr.c1, tr.c2);

    if (tr.c1.k() >= 1 && tr.c2.k() >= 1) {
      try {
        const UpperBoundWitness w = upper_bound_witness(tr.c1, tr.c2, cfg.cap_enum);
        tr.witness_upper = w.certified;
        tr.witness_method = w.certified_by;
        if (w.certified > w.bound) ++rep.violations.prop1;
      } catch (const TheoryViolation&) {
        ++rep.violations.prop1;
      }
    }

    if (!cfg.heuristic && detail::exact_fits(coll, cfg.cap_enum)) {
      tr.mode = "exact";
      tr.exact = expansion_factor(coll, cfg.cap_enum);
      ++rep.exact_trials;
      exact_values.push_back(tr.exact->rho);
      if (to_double(tr.exact->rho) >= rep.formula_rho) ++rep.at_least_formula;
      if (tr.exact->rho <= tr.prop1_bound) ++rep.within_prop1;
      detail::audit_exact_trial(tr, cfg.cap_enum, rng, rep.violations);
    } else {
      tr.mode = "heuristic";
      ++rep.heuristic_trials;
      const Subspace box = boxplus_basis(coll);
      for (std::size_t s = 0; s < cfg.samples && box.dim() > 0; ++s) {
        TensorWord x(f, coll.shape(), detail::random_combination(box, rng));
        if (x.is_zero()) continue;
        ++tr.greedy_samples;
        const GreedyResult g = greedy_decomposition(x, tr.c1, tr.c2, cfg.cap_enum);
        if (!g.success) {
          ++tr.greedy_failures;
          continue;
        }
        const Rational est(static_cast<std::int64_t>(x.weight()), static_cast<std::int64_t>(g.decomposition->raw_cost));
        if (!tr.greedy_estimate || est < *tr.greedy_estimate) tr.greedy_estimate = est;
      }
    }
    rep.trials.push_back(std::move(tr));
  }
  if (!exact_values.empty()) {
    std::sort(exact_values.begin(), exact_values.end());
    rep.min_rho = exact_values.front();
    rep.median_rho = exact_values[(exact_values.size() - 1) / 2];
  }
  return rep;
}

inline Json config_json(const ExperimentConfig& c) {
  return Json{{"experiment", c.experiment}, {"q", c.q},           {"n", c.n},
              {"k1", c.k1},                 {"k2", c.k2},         {"trials", c.trials},
              {"seed", c.seed.value_or(0)}, {"cap_cells", c.cap_cells}, {"cap_enum", c.cap_enum},
              {"heuristic", c.heuristic},   {"samples", c.samples}};
}

inline Json census_json(const CensusReport& r) {
  Json trials = Json::array();
  for (const CensusTrial& t : r.trials) {
    Json certified{{"rho", t.exact ? Json(to_string(t.exact->rho)) : Json(nullptr)},
                   {"rho_upper", t.witness_upper ? Json(to_string(*t.witness_upper)) : Json(nullptr)},
                   {"rho_upper_method", t.witness_method}};
    if (t.exact) certified["argmin"] = t.exact->argmin ? Json(word_to_compact(*t.exact->argmin)) : Json(nullptr);
    Json estimated{{"greedy_rho", t.greedy_estimate ? Json(to_string(*t.greedy_estimate)) : Json(nullptr)},
                   {"greedy_samples", t.greedy_samples},
                   {"greedy_failures", t.greedy_failures}};
    trials.push_back(Json{{"trial", t.index},
                          {"sub_seed", t.sub_seed},
                          {"c1", code_json(t.c1)},
                          {"c2", code_json(t.c2)},
                          {"mode", t.mode},
                          {"css", t.css},
                          {"prop1_bound", to_string(t.prop1_bound)},
                          {"certified", certified},
                          {"estimated", estimated}});
  }
  auto opt = [](const std::optional<Rational>& x) { return x ? Json(to_string(*x)) : Json(nullptr); };
  auto frac = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
  Json aggregate{{"exact_trials", r.exact_trials},
                 {"heuristic_trials", r.heuristic_trials},
                 {"min_rho", opt(r.min_rho)},
                 {"median_rho", opt(r.median_rho)},
                 {"rho_formula", r.formula_rho},
                 {"fraction_at_least_formula", frac(r.at_least_formula, r.exact_trials)},
                 {"fraction_within_prop1", frac(r.within_prop1, r.exact_trials)}};
  Json violations{{"prop1", r.violations.prop1},
                  {"css_upper", r.violations.css_upper},
                  {"rank_bound", r.violations.rank_bound},
                  {"smb_conversion", r.violations.smb_conversion}};
  return Json{{"schema", kReportSchema}, {"experiment", "census"}, {"config", config_json(r.config)},
              {"trials", trials},        {"aggregate", aggregate}, {"violations", violations}};
}

inline std::string csv_field(const Json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

/// Flattens nested objects into dotted column names.
inline void flatten_json(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_json(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out.emplace_back(prefix, j);
  }
}

/// One CSV row per element of `rows`, columns from the flattened first row.
inline std::string rows_csv(const Json& rows) {
  std::ostringstream os;
  if (!rows.is_array() || rows.empty()) return "";
  std::vector<std::pair<std::string, Json>> head;
  flatten_json(rows[0], "", head);
  for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << head[i].first;
  os << '\n';
  for (const Json& row : rows) {
    std::vector<std::pair<std::string, Json>> cells;
    flatten_json(row, "", cells);
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i].second);
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Monte Carlo checks of probability bounds

struct MonteCarloReport {
  std::string name;
  Json params;
  std::size_t trials = 0, hits = 0;
  double frequency = 0, bound = 0, sigma = 0, limit = 0;
  bool within = true;
  /// Dual-path disagreements (only for the dual tensor membership run).
  std::size_t cross_check_mismatches = 0;
};

namespace detail {

inline void finish_monte_carlo(MonteCarloReport& r) {
  r.frequency = r.trials ? static_cast<double>(r.hits) / static_cast<double>(r.trials) : 0.0;
  const double p = std::min(1.0, r.bound);
  r.sigma = r.trials ? std::sqrt(p * (1 - p) / static_cast<double>(r.trials)) : 0.0;
  r.limit = r.bound + 3 * r.sigma;
  r.within = r.frequency <= r.limit && r.cross_check_mismatches == 0;
}

inline Subspace coordinate_subspace(const Field& f, std::size_t n, std::size_t v) {
  Matrix m(f, v, n);
  for (std::size_t i = 0; i < v; ++i) m(i, i) = 1;
  return Subspace::span_of(m);
}

}  // namespace detail

/// Frequency of dim(U meet V) >= k for uniform U in Gr(n, u) and the fixed
/// coordinate subspace V of dimension v, against 4 q^{-k(n + k - v - u)}.
inline MonteCarloReport run_subspace_meet_montecarlo(std::uint32_t q, std::size_t n, std::size_t u, std::size_t v,
                                                     std::size_t k, std::size_t trials, std::uint64_t seed) {
  detail::require(u <= n && v <= n, "subspace dimensions exceed n");
  const Field f = Field::of_order(q);
  MonteCarloReport r;
  r.name = "subspace-meet";
  r.params = Json{{"q", q}, {"n", n}, {"u", u}, {"v", v}, {"k", k}, {"trials", trials}, {"seed", seed}};
  const Subspace vs = detail::coordinate_subspace(f, n, v);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    if (subspace_intersection(random_subspace(f, n, u, rng), vs).dim() >= k) ++r.hits;
  }
  r.trials = trials;
  const double e = static_cast<double>(k) * (static_cast<double>(n + k) - static_cast<double>(v + u));
  r.bound = 4 * std::pow(static_cast<double>(q), -e);
  detail::finish_monte_carlo(r);
  return r;
}

/// Frequency of x in C_1 [+] C_2 for C_i = ker H_i with H_i a uniform
/// full-rank r_i x n matrix, against 5 q^{-r_1 r_2 / 4}. Membership is
/// tested as H_1 x H_2^T = 0; the first 100 trials are cross-checked by
/// subspace membership.
inline MonteCarloReport run_boxplus_membership_montecarlo(const Matrix& x, std::size_t r1, std::size_t r2,
                                                          std::size_t trials, std::uint64_t seed) {
  const Field& f = x.field();
  const std::size_t n = x.rows();
  detail::require(x.cols() == n, "the fixed word must be square");
  detail::require(r1 <= n && r2 <= n, "redundancies exceed n");
  detail::require(std::min(r1, r2) >= 2, "the bound needs min(r1, r2) >= 2");
  detail::require(rank(x) >= std::min(r1, r2), "the fixed word needs rank at least min(r1, r2)");
  MonteCarloReport r;
  r.name = "boxplus-membership";
  r.params = Json{{"q", f.q()}, {"n", n}, {"r1", r1}, {"r2", r2}, {"trials", trials}, {"seed", seed},
                  {"word", format_word(x.data(), f.q())}};
  const TensorWord xw = TensorWord::from_matrix(x);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    const Matrix h1 = random_subspace(f, n, r1, rng).basis();
    const Matrix h2 = random_subspace(f, n, r2, rng).basis();
    const bool in = (h1 * x * h2.transpose()).is_zero();
    if (in) ++r.hits;
    if (t < 100) {
      const bool by_span = boxplus_membership(xw, LinearCode::from_parity(h1), LinearCode::from_parity(h2));
      if (by_span != in) ++r.cross_check_mismatches;
    }
  }
  r.trials = trials;
  r.bound = 5 * std::pow(static_cast<double>(f.q()), -static_cast<double>(r1 * r2) / 4);
  detail::finish_monte_carlo(r);
  return r;
}

/// Failure frequency of property (*) for uniform U in Gr(n, n - r), against
/// 4 q^{-r/8} / (1 - q^{-r/8}).
inline MonteCarloReport run_property_star_montecarlo(std::uint32_t q, std::size_t n, std::size_t r, std::size_t trials,
                                                     std::uint64_t seed, std::uint64_t cap = std::uint64_t{1} << 20) {
  detail::require(r >= 1 && r <= n, "property (*) runs need 1 <= r <= n");
  const Field f = Field::of_order(q);
  MonteCarloReport out;
  out.name = "property-star";
  const std::size_t threshold = property_star_threshold(q, n, r);
  out.params = Json{{"q", q}, {"n", n}, {"r", r}, {"trials", trials}, {"seed", seed}, {"sparsity_threshold", threshold}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    if (!has_property_star_threshold(random_subspace(f, n, n - r, rng), r, threshold, cap).holds) ++out.hits;
  }
  out.trials = trials;
  const double z = std::pow(static_cast<double>(q), -static_cast<double>(r) / 8);
  out.bound = 4 * z / (1 - z);
  detail::finish_monte_carlo(out);
  return out;
}

inline Json monte_carlo_json(const MonteCarloReport& r) {
  return Json{{"schema", kReportSchema},
              {"experiment", r.name},
              {"params", r.params},
              {"trials", r.trials},
              {"hits", r.hits},
              {"frequency", r.frequency},
              {"bound", r.bound},
              {"sigma", r.sigma},
              {"limit", r.limit},
              {"cross_check_mismatches", r.cross_check_mismatches},
              {"within", r.within}};
}

// ---------------------------------------------------------------------------
// Demonstrations

struct CssRow {
  std::size_t n = 0;
  LinearCode c1, c2;
  bool css = false;
  std::optional<Rational> rho;
  /// |I_n| / (n * line cover of I_n), valid whenever I_n is a codeword.
  Rational identity_bound;
  bool identity_in_boxplus = false;
  bool within = false;
};

struct CssDemo {
  std::vector<CssRow> rows;
  std::size_t violations = 0;
};

/// (Rep_n, E_n) for n in [3, max_n]: exact rho where the enumeration fits
/// the cap, and the identity-matrix bound always.
inline CssDemo run_css_demo(std::size_t max_n = 7, std::uint64_t cap = kDefaultEnumCap) {
  const Field f = Field::of_order(2);
  CssDemo demo;
  for (std::size_t n = 3; n <= max_n; ++n) {
    CssRow row;
    row.n = n;
    row.c1 = repetition_code(f, n);
    row.c2 = parity_code(f, n);
    row.css = is_css_pair(row.c1, row.c2);
    CodeCollection coll(row.c1, row.c2);
    const TensorWord id = TensorWord::from_matrix(Matrix::identity(f, n));
    row.identity_in_boxplus = boxplus_membership(id, row.c1, row.c2);
    row.identity_bound = line_cover_bound(id);
    if (detail::exact_fits(coll, cap)) row.rho = expansion_factor(coll, cap).rho;
    const Rational limit(1, static_cast<std::int64_t>(n));
    row.within = row.css && row.identity_in_boxplus && row.identity_bound <= limit && (!row.rho || *row.rho <= limit);
    if (!row.within) ++demo.violations;
    demo.rows.push_back(std::move(row));
  }
  return demo;
}

struct RsRow {
  std::uint32_t q = 0;
  std::size_t k1 = 0, k2 = 0;
  bool predicted = false, contained = false;
  std::optional<Rational> identity_bound;
};

struct RsDemo {
  std::vector<RsRow> rows;
  std::size_t violations = 0;
};

/// For every 1 <= k1, k2 < q: checks (RS^{k1})^perp in RS^{k2} against the
/// prediction k1 + k2 >= q, and when it holds, that I_q lies in the dual
/// tensor code with line-cover bound 1/q.
inline RsDemo run_rs_demo(const std::vector<std::uint32_t>& orders = {5, 7, 8}) {
  RsDemo demo;
  for (std::uint32_t q : orders) {
    const Field f = Field::of_order(q);
    for (std::size_t k1 = 1; k1 < q; ++k1)
      for (std::size_t k2 = 1; k2 < q; ++k2) {
        RsRow row{q, k1, k2, k1 + k2 >= q, false, std::nullopt};
        const LinearCode a = reed_solomon(f, k1), b = reed_solomon(f, k2);
        row.contained = b.generator().contains(dual(a).generator());
        if (row.contained != row.predicted) ++demo.violations;
        if (row.contained) {
          const TensorWord id = TensorWord::from_matrix(Matrix::identity(f, q));
          if (!boxplus_membership(id, a, b)) ++demo.violations;
          row.identity_bound = line_cover_bound(id);
          if (*row.identity_bound > Rational(1, static_cast<std::int64_t>(q))) ++demo.violations;
        }
        demo.rows.push_back(row);
      }
  }
  return demo;
}

inline Json css_json(const CssDemo& d) {
  Json rows = Json::array();
  for (const CssRow& r : d.rows)
    rows.push_back(Json{{"n", r.n},
                        {"pair", "Rep" + std::to_string(r.n) + ",E" + std::to_string(r.n)},
                        {"css", r.css},
                        {"rho", r.rho ? Json(to_string(*r.rho)) : Json(nullptr)},
                        {"identity_in_boxplus", r.identity_in_boxplus},
                        {"identity_bound", to_string(r.identity_bound)},
                        {"one_over_n", to_string(Rational(1, static_cast<std::int64_t>(r.n)))},
                        {"within", r.within}});
  return Json{{"schema", kReportSchema}, {"experiment", "demo-css"}, {"rows", rows}, {"violations", d.violations}};
}

inline Json rs_json(const RsDemo& d) {
  Json rows = Json::array();
  for (const RsRow& r : d.rows)
    rows.push_back(Json{{"q", r.q},
                        {"k1", r.k1},
                        {"k2", r.k2},
                        {"predicted", r.predicted},
                        {"contained", r.contained},
                        {"identity_bound", r.identity_bound ? Json(to_string(*r.identity_bound)) : Json(nullptr)}});
  return Json{{"schema", kReportSchema}, {"experiment", "demo-rs"}, {"rows", rows}, {"violations", d.violations}};
}

inline Json complex_json(const BasedComplex& cx) {
  const ComplexSummary s = summarize(cx);
  return Json{{"term_dims", s.term_dims}, {"block_counts", s.block_counts}, {"cohomology", s.cohomology}};
}

}  // namespace prodexp
