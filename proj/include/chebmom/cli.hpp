#pragma once

#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chebmom/argmax.hpp"
#include "chebmom/errors.hpp"
#include "chebmom/moments.hpp"
#include "chebmom/montecarlo.hpp"
#include "chebmom/planner.hpp"
#include "chebmom/rational.hpp"
#include "chebmom/recurrence.hpp"

// Command-line front end. Everything the library computes is reachable from
// here, with exact rationals ("num/den") plus decimal renderings in table,
// CSV and JSON output.

namespace chebmom::cli {

using nlohmann::json;

inline constexpr int kDefaultMCap = 25;
inline constexpr int kDefaultMnLimit = 200;

inline const char* usage_text() {
  return
      "usage: chebmom <command> [flags]\n"
      "\n"
      "commands:\n"
      "  moment      --n N --m M [--p NUM/DEN] [--method composition|binomsum|recurrence|bruteforce|general]\n"
      "              even central moment E S_n^{2m}(p); p defaults to 1/2\n"
      "  bound       --n N --eps NUM/DEN --m M\n"
      "              Chebyshev bound of order 2m at sample size n\n"
      "  profile     --n N --eps NUM/DEN [--m-cap K] [--no-strict] [--mn-limit L]\n"
      "              bound for every order up to the cap, best order marked\n"
      "  plan        --eps NUM/DEN --delta NUM/DEN [--m M | --m-cap K] [--strict] [--mn-limit L]\n"
      "              minimal sample size meeting risk delta at tolerance eps\n"
      "  argmax      --n N --m M [--width NUM/DEN]\n"
      "              where p |-> E S_n^{2m}(p) is maximized, exactly\n"
      "  mn-table    --n-min A --n-max B [--m-cap K]\n"
      "              largest valid order threshold m_n for each n\n"
      "  tail        --n N --p NUM/DEN --eps NUM/DEN [--mc --samples S --seed SEED]\n"
      "              exact tail P(|S_n/n| > eps), or a seeded Monte Carlo estimate\n"
      "  asymptotic  --ntilde NUM/DEN [--m-cap K]\n"
      "              large-n bound profile through the effective sample size\n"
      "\n"
      "common flags:\n"
      "  --format table|csv|json   output format (default table)\n"
      "  --digits D                decimal rendering places (default 12)\n"
      "\n"
      "numbers accept \"num/den\", integers, and decimal literals (converted\n"
      "exactly via powers of ten). A 95% confidence estimate within +-5\n"
      "percentage points is --eps 1/20 --delta 1/20.\n";
}

namespace detail {

struct Options {
  std::string command;
  std::map<std::string, std::string> values;
  std::set<std::string> switches;
};

// value-taking vs boolean flags, per command
struct FlagSchema {
  std::set<std::string> valued;
  std::set<std::string> boolean;
};

inline const std::map<std::string, FlagSchema>& schemas() {
  static const std::map<std::string, FlagSchema> s = {
      {"moment", {{"--n", "--m", "--p", "--method", "--format", "--digits"}, {}}},
      {"bound", {{"--n", "--eps", "--m", "--format", "--digits"}, {}}},
      {"profile",
       {{"--n", "--eps", "--m-cap", "--mn-limit", "--format", "--digits"}, {"--no-strict"}}},
      {"plan",
       {{"--eps", "--delta", "--m", "--m-cap", "--mn-limit", "--format", "--digits"},
        {"--strict"}}},
      {"argmax", {{"--n", "--m", "--width", "--format", "--digits"}, {}}},
      {"mn-table", {{"--n-min", "--n-max", "--m-cap", "--format", "--digits"}, {}}},
      {"tail",
       {{"--n", "--p", "--eps", "--samples", "--seed", "--format", "--digits"}, {"--mc"}}},
      {"asymptotic", {{"--ntilde", "--m-cap", "--format", "--digits"}, {}}},
  };
  return s;
}

inline Options parse_args(const std::vector<std::string>& args) {
  if (args.empty()) throw std::invalid_argument("missing command");
  Options opt;
  opt.command = args[0];
  const auto it = schemas().find(opt.command);
  if (it == schemas().end()) throw std::invalid_argument("unknown command '" + opt.command + "'");
  const FlagSchema& schema = it->second;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& flag = args[i];
    if (schema.boolean.count(flag)) {
      opt.switches.insert(flag);
      continue;
    }
    if (schema.valued.count(flag)) {
      if (i + 1 >= args.size()) throw std::invalid_argument("flag " + flag + " needs a value");
      if (opt.values.count(flag)) throw std::invalid_argument("duplicate flag " + flag);
      opt.values[flag] = args[++i];
      continue;
    }
    throw std::invalid_argument("unknown flag '" + flag + "' for command '" + opt.command + "'");
  }
  return opt;
}

inline std::string require(const Options& opt, const std::string& flag) {
  const auto it = opt.values.find(flag);
  if (it == opt.values.end())
    throw std::invalid_argument(opt.command + ": missing required flag " + flag);
  return it->second;
}

inline std::optional<std::string> maybe(const Options& opt, const std::string& flag) {
  const auto it = opt.values.find(flag);
  if (it == opt.values.end()) return std::nullopt;
  return it->second;
}

inline int parse_int(const std::string& text, const std::string& what) {
  const Rational r = parse_rational(text);
  if (denominator(r) != 1) throw std::invalid_argument(what + " must be an integer, got " + text);
  if (numerator(r) > 1000000000 || numerator(r) < -1000000000)
    throw std::invalid_argument(what + " out of range: " + text);
  return static_cast<int>(numerator(r));
}

inline std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  const Rational r = parse_rational(text);
  if (denominator(r) != 1 || numerator(r) < 0)
    throw std::invalid_argument(what + " must be a nonnegative integer, got " + text);
  if (numerator(r) > BigInt("18446744073709551615"))
    throw std::invalid_argument(what + " out of range: " + text);
  return numerator(r).convert_to<std::uint64_t>();
}

// One invocation's worth of output.
struct Record {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, json>> results;  // scalars
  std::string rows_key = "rows";
  std::vector<std::string> row_columns;
  std::vector<std::vector<json>> rows;
  std::vector<std::pair<std::string, std::string>> decimals;
  std::vector<std::string> notes;
};

inline std::string plain(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void render_table(const Record& rec, std::ostream& out) {
  out << "command: " << rec.command << "\n";
  for (const auto& [k, v] : rec.inputs) out << "  " << k << " = " << v << "\n";
  std::size_t keywidth = 0;
  for (const auto& [k, v] : rec.results) keywidth = std::max(keywidth, k.size());
  for (const auto& [k, v] : rec.results) {
    out << "  " << k << std::string(keywidth - k.size() + 2, ' ') << plain(v);
    for (const auto& [dk, dv] : rec.decimals)
      if (dk == k) out << "  (" << dv << ")";
    out << "\n";
  }
  if (!rec.rows.empty()) {
    std::vector<std::size_t> width(rec.row_columns.size());
    for (std::size_t c = 0; c < rec.row_columns.size(); ++c) width[c] = rec.row_columns[c].size();
    for (const auto& row : rec.rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], plain(row[c]).size());
    out << "  ";
    for (std::size_t c = 0; c < rec.row_columns.size(); ++c) {
      const std::string& h = rec.row_columns[c];
      out << h << std::string(width[c] - h.size() + 2, ' ');
    }
    out << "\n";
    for (const auto& row : rec.rows) {
      out << "  ";
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string v = plain(row[c]);
        out << v << std::string(width[c] - v.size() + 2, ' ');
      }
      out << "\n";
    }
  }
  for (const auto& note : rec.notes) out << "  note: " << note << "\n";
}

inline void render_csv(const Record& rec, std::ostream& out) {
  if (!rec.rows.empty()) {
    for (std::size_t c = 0; c < rec.row_columns.size(); ++c)
      out << (c ? "," : "") << rec.row_columns[c];
    out << "\n";
    for (const auto& row : rec.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << plain(row[c]);
      out << "\n";
    }
    return;
  }
  bool first = true;
  for (const auto& [k, v] : rec.results) {
    out << (first ? "" : ",") << k;
    first = false;
  }
  for (const auto& [k, v] : rec.decimals) out << "," << k << "_decimal";
  out << "\n";
  first = true;
  for (const auto& [k, v] : rec.results) {
    out << (first ? "" : ",") << plain(v);
    first = false;
  }
  for (const auto& [k, v] : rec.decimals) out << "," << v;
  out << "\n";
}

inline void render_json(const Record& rec, std::ostream& out) {
  json j;
  j["command"] = rec.command;
  json inputs = json::object();
  for (const auto& [k, v] : rec.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  json results = json::object();
  for (const auto& [k, v] : rec.results) results[k] = v;
  if (!rec.rows.empty()) {
    json rows = json::array();
    for (const auto& row : rec.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < row.size(); ++c) obj[rec.row_columns[c]] = row[c];
      rows.push_back(obj);
    }
    results[rec.rows_key] = rows;
  }
  j["results"] = results;
  if (!rec.decimals.empty()) {
    json decimals = json::object();
    for (const auto& [k, v] : rec.decimals) decimals[k] = v;
    j["decimals"] = decimals;
  }
  if (!rec.notes.empty()) j["notes"] = rec.notes;
  out << j.dump() << "\n";
}

struct Context {
  int digits = 12;
};

inline void add_rational(Record& rec, Context ctx, const std::string& key, const Rational& x) {
  rec.results.emplace_back(key, render_rational(x));
  rec.decimals.emplace_back(key, to_decimal_string(x, ctx.digits));
}

// ---- command handlers ----

inline Record cmd_moment(const Options& opt, Context ctx) {
  const int n = parse_int(require(opt, "--n"), "--n");
  const int m = parse_int(require(opt, "--m"), "--m");
  const auto ptext = maybe(opt, "--p");
  const Rational p = ptext ? parse_rational(*ptext) : Rational(1, 2);
  std::string method = maybe(opt, "--method").value_or(p == Rational(1, 2) ? "binomsum" : "general");

  MomentValue mv;
  if (method == "composition" || method == "binomsum" || method == "recurrence") {
    if (p != Rational(1, 2))
      throw std::invalid_argument("method '" + method + "' evaluates at p = 1/2 only; use --method general");
    mv = method == "composition"  ? moment_half_composition(n, m)
         : method == "binomsum"   ? moment_half_binomsum(n, m)
                                  : moment_half_recurrence(n, m);
  } else if (method == "bruteforce") {
    mv = moment_bruteforce(n, m, p);
  } else if (method == "general") {
    mv = moment_general(n, m, p);
  } else {
    throw std::invalid_argument("unknown method '" + method + "'");
  }

  Record rec;
  rec.command = "moment";
  rec.inputs = {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"p", render_rational(p)},
                {"method", method}};
  rec.results.emplace_back("n", n);
  rec.results.emplace_back("m", m);
  rec.results.emplace_back("p", render_rational(p));
  rec.results.emplace_back("method", method);
  add_rational(rec, ctx, "value", mv.value);
  return rec;
}

inline Record cmd_bound(const Options& opt, Context ctx) {
  const int n = parse_int(require(opt, "--n"), "--n");
  const int m = parse_int(require(opt, "--m"), "--m");
  const Rational eps = parse_rational(require(opt, "--eps"));
  const Rational bound = cheb_bound(n, eps, m);

  Record rec;
  rec.command = "bound";
  rec.inputs = {{"n", std::to_string(n)}, {"epsilon", render_rational(eps)},
                {"m", std::to_string(m)}};
  rec.results.emplace_back("n", n);
  rec.results.emplace_back("epsilon", render_rational(eps));
  rec.results.emplace_back("m", m);
  add_rational(rec, ctx, "bound", bound);
  return rec;
}

inline Record cmd_profile(const Options& opt, Context ctx) {
  const int n = parse_int(require(opt, "--n"), "--n");
  const Rational eps = parse_rational(require(opt, "--eps"));
  const int m_cap = maybe(opt, "--m-cap") ? parse_int(*maybe(opt, "--m-cap"), "--m-cap")
                                          : kDefaultMCap;
  const int mn_limit = maybe(opt, "--mn-limit")
                           ? parse_int(*maybe(opt, "--mn-limit"), "--mn-limit")
                           : kDefaultMnLimit;
  const bool strict = !opt.switches.count("--no-strict");

  std::optional<int> cap;
  std::string validity = "off";
  std::string note;
  if (strict) {
    if (n <= mn_limit) {
      const MnResult mn = compute_mn(n, m_cap);
      validity = "computed";
      if (!mn.capped) cap = mn.m_n;
    } else {
      validity = "assumed";
      note = "validity cap m_n not computed: n exceeds the exact-analysis limit (--mn-limit " +
             std::to_string(mn_limit) + "); rows assume order validity";
    }
  }

  const BoundProfile profile = bound_profile(n, eps, m_cap, cap);

  Record rec;
  rec.command = "profile";
  rec.inputs = {{"n", std::to_string(n)},
                {"epsilon", render_rational(eps)},
                {"m_cap", std::to_string(m_cap)},
                {"strict", strict ? "true" : "false"}};
  rec.results.emplace_back("n", n);
  rec.results.emplace_back("epsilon", render_rational(eps));
  rec.results.emplace_back("validity", validity);
  rec.results.emplace_back("validity_cap", cap ? json(*cap) : json());
  rec.results.emplace_back("best_m", profile.best_m);
  add_rational(rec, ctx, "best_bound", profile.best_bound);
  rec.row_columns = {"m", "bound", "bound_decimal", "selectable", "is_best"};
  for (const auto& row : profile.rows)
    rec.rows.push_back({row.m, render_rational(row.bound),
                        to_decimal_string(row.bound, ctx.digits), row.selectable,
                        row.m == profile.best_m});
  if (!note.empty()) rec.notes.push_back(note);
  return rec;
}

inline Record cmd_plan(const Options& opt, Context ctx) {
  const Rational eps = parse_rational(require(opt, "--eps"));
  const Rational delta = parse_rational(require(opt, "--delta"));
  const auto m_text = maybe(opt, "--m");
  const auto cap_text = maybe(opt, "--m-cap");
  if (m_text && cap_text) throw std::invalid_argument("plan: give --m or --m-cap, not both");
  const bool strict = opt.switches.count("--strict") > 0;
  const int mn_limit = maybe(opt, "--mn-limit")
                           ? parse_int(*maybe(opt, "--mn-limit"), "--mn-limit")
                           : kDefaultMnLimit;

  PlanQuery query;
  query.epsilon = eps;
  query.delta = delta;
  if (m_text) query.m = parse_int(*m_text, "--m");
  query.m_cap = cap_text ? parse_int(*cap_text, "--m-cap") : kDefaultMCap;

  auto validate = [&](const PlanResult& plan) {
    if (!strict) return true;
    if (plan.n_star > mn_limit)
      throw ResourceLimitError(
          "plan --strict: n_star = " + std::to_string(plan.n_star) +
          " exceeds the exact m_n analysis limit (--mn-limit " + std::to_string(mn_limit) + ")");
    return compute_mn(static_cast<int>(plan.n_star), plan.m_used).m_n >= plan.m_used;
  };

  PlanResult plan;
  if (query.m) {
    plan = min_sample_size(eps, delta, *query.m);
    if (!validate(plan))
      throw std::invalid_argument("plan --strict: order 2m = " + std::to_string(2 * *query.m) +
                                  " is not maximized at p = 1/2 for n = " +
                                  std::to_string(plan.n_star));
  } else {
    if (delta >= 1 || delta <= 0) throw std::invalid_argument("delta must lie in (0, 1)");
    std::optional<PlanResult> best;
    for (int m = 1; m <= query.m_cap; ++m) {
      PlanResult cand = min_sample_size(eps, delta, m);
      if (!validate(cand)) continue;
      if (!best || cand.n_star < best->n_star) best = std::move(cand);
    }
    if (!best) throw std::invalid_argument("plan: no valid order within --m-cap");
    plan = *best;
  }

  Record rec;
  rec.command = "plan";
  rec.inputs = {{"epsilon", render_rational(eps)}, {"delta", render_rational(delta)}};
  if (query.m) rec.inputs.emplace_back("m", std::to_string(*query.m));
  else rec.inputs.emplace_back("m_cap", std::to_string(query.m_cap));
  rec.inputs.emplace_back("strict", strict ? "true" : "false");
  rec.results.emplace_back("n_star", plan.n_star);
  rec.results.emplace_back("m_used", plan.m_used);
  add_rational(rec, ctx, "achieved_bound", plan.achieved_bound);
  add_rational(rec, ctx, "effective_sample_size", plan.effective_sample_size);
  return rec;
}

inline json interval_json(const RootInterval& iv) {
  json j = json::object();
  j["lo"] = render_rational(iv.lo);
  j["hi"] = render_rational(iv.hi);
  j["multiplicity_note"] = to_string(iv.note);
  if (iv.exact_root) j["exact_root"] = render_rational(*iv.exact_root);
  return j;
}

inline Record cmd_argmax(const Options& opt, Context ctx) {
  const int n = parse_int(require(opt, "--n"), "--n");
  const int m = parse_int(require(opt, "--m"), "--m");
  const Rational width = maybe(opt, "--width") ? parse_rational(*maybe(opt, "--width"))
                                               : default_argmax_width();
  const ArgmaxReport report = argmax_report(n, m, width);

  Record rec;
  rec.command = "argmax";
  rec.inputs = {{"n", std::to_string(n)}, {"m", std::to_string(m)},
                {"width", render_rational(width)}};
  rec.results.emplace_back("n", n);
  rec.results.emplace_back("m", m);
  rec.results.emplace_back("is_half_argmax", report.is_half_argmax);
  add_rational(rec, ctx, "max_value_lo", report.max_value_bounds.first);
  add_rational(rec, ctx, "max_value_hi", report.max_value_bounds.second);
  {
    json maxjs = json::array();
    for (const auto& iv : report.maximizers) maxjs.push_back(interval_json(iv));
    rec.results.emplace_back("maximizers", maxjs);
    json critjs = json::array();
    for (const auto& iv : report.critical_points) critjs.push_back(interval_json(iv));
    rec.results.emplace_back("critical_points", critjs);
  }
  rec.rows_key = "intervals";
  rec.row_columns = {"kind", "lo", "hi", "midpoint_decimal", "multiplicity_note"};
  for (const auto& iv : report.maximizers)
    rec.rows.push_back({"maximizer", render_rational(iv.lo), render_rational(iv.hi),
                        to_decimal_string(iv.midpoint(), ctx.digits), to_string(iv.note)});
  for (const auto& iv : report.critical_points)
    rec.rows.push_back({"critical", render_rational(iv.lo), render_rational(iv.hi),
                        to_decimal_string(iv.midpoint(), ctx.digits), to_string(iv.note)});
  rec.notes = report.notes;
  return rec;
}

inline Record cmd_mn_table(const Options& opt, Context) {
  const int n_min = parse_int(require(opt, "--n-min"), "--n-min");
  const int n_max = parse_int(require(opt, "--n-max"), "--n-max");
  const int m_cap = maybe(opt, "--m-cap") ? parse_int(*maybe(opt, "--m-cap"), "--m-cap")
                                          : kDefaultMCap;
  const MnTable table = mn_table(n_min, n_max, m_cap);

  Record rec;
  rec.command = "mn-table";
  rec.inputs = {{"n_min", std::to_string(n_min)}, {"n_max", std::to_string(n_max)},
                {"m_cap", std::to_string(m_cap)}};
  rec.results.emplace_back("n_min", n_min);
  rec.results.emplace_back("n_max", n_max);
  rec.results.emplace_back("m_cap", m_cap);
  rec.row_columns = {"n", "m_n", "capped"};
  for (const auto& row : table.rows) rec.rows.push_back({row.n, row.m_n, row.capped});
  return rec;
}

inline Record cmd_tail(const Options& opt, Context ctx) {
  const int n = parse_int(require(opt, "--n"), "--n");
  const Rational p = parse_rational(require(opt, "--p"));
  const Rational eps = parse_rational(require(opt, "--eps"));
  Record rec;
  rec.command = "tail";
  rec.inputs = {{"n", std::to_string(n)}, {"p", render_rational(p)},
                {"epsilon", render_rational(eps)}};
  rec.results.emplace_back("n", n);
  rec.results.emplace_back("p", render_rational(p));
  rec.results.emplace_back("epsilon", render_rational(eps));

  if (opt.switches.count("--mc")) {
    if (!maybe(opt, "--seed"))
      throw std::invalid_argument("tail --mc requires an explicit --seed (reproducibility)");
    if (!maybe(opt, "--samples")) throw std::invalid_argument("tail --mc requires --samples");
    const std::uint64_t samples = parse_u64(require(opt, "--samples"), "--samples");
    const std::uint64_t seed = parse_u64(require(opt, "--seed"), "--seed");
    const McTailResult mc = mc_tail(n, p, eps, samples, seed);
    rec.inputs.emplace_back("samples", std::to_string(samples));
    rec.inputs.emplace_back("seed", std::to_string(seed));
    rec.results.emplace_back("samples", samples);
    rec.results.emplace_back("seed", seed);
    rec.results.emplace_back("hits", mc.hits);
    // estimate and stderr are exact multiples/functions of hits/samples;
    // render them through the rational path so output is platform-stable
    const Rational est(BigInt(mc.hits), BigInt(samples));
    rec.results.emplace_back("estimate", to_decimal_string(est, ctx.digits));
    std::ostringstream se;
    se.precision(12);
    se << mc.standard_error;
    rec.results.emplace_back("standard_error", se.str());
  } else {
    if (maybe(opt, "--samples") || maybe(opt, "--seed"))
      throw std::invalid_argument("--samples/--seed only apply with --mc");
    add_rational(rec, ctx, "tail", exact_tail(n, p, eps));
  }
  return rec;
}

inline Record cmd_asymptotic(const Options& opt, Context ctx) {
  const Rational ntilde = parse_rational(require(opt, "--ntilde"));
  const int m_cap = maybe(opt, "--m-cap") ? parse_int(*maybe(opt, "--m-cap"), "--m-cap")
                                          : kDefaultMCap;
  const AsymptoticProfile profile = asymptotic_profile(ntilde, m_cap);
  const int order = rule_of_thumb_order(ntilde);

  Record rec;
  rec.command = "asymptotic";
  rec.inputs = {{"ntilde", render_rational(ntilde)}, {"m_cap", std::to_string(m_cap)}};
  rec.results.emplace_back("ntilde", render_rational(ntilde));
  rec.results.emplace_back("m_star", profile.m_star);
  rec.results.emplace_back("rule_of_thumb_order", order);
  add_rational(rec, ctx, "best_b", profile.rows[profile.m_star - 1].b);
  rec.row_columns = {"m", "b", "b_decimal", "is_min"};
  for (const auto& row : profile.rows)
    rec.rows.push_back({row.m, render_rational(row.b), to_decimal_string(row.b, ctx.digits),
                        row.m == profile.m_star});
  return rec;
}

}  // namespace detail

// Runs one invocation. argv excludes the program name. Returns the exit code:
// 0 success, 2 invalid arguments, 3 resource limit, 4 indistinguishable maxima.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  for (const auto& a : args)
    if (a == "--help" || a == "-h") {
      out << usage_text();
      return 0;
    }
  try {
    const detail::Options opt = detail::parse_args(args);
    detail::Context ctx;
    if (auto d = detail::maybe(opt, "--digits")) {
      ctx.digits = detail::parse_int(*d, "--digits");
      if (ctx.digits < 0 || ctx.digits > 10000)
        throw std::invalid_argument("--digits out of range");
    }
    const std::string format = detail::maybe(opt, "--format").value_or("table");
    if (format != "table" && format != "csv" && format != "json")
      throw std::invalid_argument("unknown format '" + format + "'");

    detail::Record rec;
    if (opt.command == "moment") rec = detail::cmd_moment(opt, ctx);
    else if (opt.command == "bound") rec = detail::cmd_bound(opt, ctx);
    else if (opt.command == "profile") rec = detail::cmd_profile(opt, ctx);
    else if (opt.command == "plan") rec = detail::cmd_plan(opt, ctx);
    else if (opt.command == "argmax") rec = detail::cmd_argmax(opt, ctx);
    else if (opt.command == "mn-table") rec = detail::cmd_mn_table(opt, ctx);
    else if (opt.command == "tail") rec = detail::cmd_tail(opt, ctx);
    else if (opt.command == "asymptotic") rec = detail::cmd_asymptotic(opt, ctx);
    else throw std::invalid_argument("unknown command '" + opt.command + "'");

    if (format == "json") detail::render_json(rec, out);
    else if (format == "csv") detail::render_csv(rec, out);
    else detail::render_table(rec, out);
    return 0;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const IndistinguishableMaximaError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << usage_text();
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace chebmom::cli
