#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "growthcodes/construct.hpp"
#include "growthcodes/errors.hpp"
#include "growthcodes/growth.hpp"
#include "growthcodes/io.hpp"
#include "growthcodes/reedmuller.hpp"
#include "growthcodes/seeds.hpp"

namespace growthcodes::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Common {
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::uint64_t field = 2;
  std::string out;
  std::string report;
};

SearchOptions search_options(const Common& c) {
  SearchOptions s = SearchOptions::from_environment();
  s.workers = c.workers;
  return s;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

json params_json(const CodeParams& p, bool verified) {
  json o;
  o["n"] = p.n.str();
  o["k"] = p.k.str();
  o["d"] = p.d.str();
  o["u"] = p.u ? json(p.u->str()) : json(nullptr);
  o["d_source"] = verified ? "verified" : "formula";
  return o;
}

std::optional<std::uint64_t> common_weight(const LinearCode& code) {
  const auto w = code.basis_weights();
  if (std::adjacent_find(w.begin(), w.end(), std::not_equal_to<>()) != w.end()) return std::nullopt;
  return w.front();
}

struct Check {
  std::string name;
  json expected;
  json actual;
  bool pass = false;
};

json make_report(const std::string& command, json inputs, json params, const std::vector<Check>& checks,
                 const std::vector<std::string>& notes, double seconds) {
  json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["params"] = std::move(params);
  r["checks"] = json::array();
  bool pass = true;
  for (const Check& c : checks) {
    r["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    pass = pass && c.pass;
  }
  r["pass"] = pass;
  r["notes"] = notes;
  r["timing"] = {{"seconds", seconds}};
  return r;
}

std::uint64_t parse_u64(const std::string& token, const std::string& context) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (token.empty() || used != token.size() || token.front() == '-') {
    throw UsageError("expected a non-negative integer in " + context + ", got '" + token + "'");
  }
  return v;
}

// distance | singleton | bounded:U | params:N,K,D
struct CheckRequest {
  std::string name;
  std::vector<std::uint64_t> values;
};

std::vector<CheckRequest> parse_checks(const std::string& spec) {
  std::vector<std::string> tokens;
  std::stringstream ss(spec);
  for (std::string t; std::getline(ss, t, ',');) tokens.push_back(t);
  std::vector<CheckRequest> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (t == "distance" || t == "singleton") {
      out.push_back({t, {}});
    } else if (t.rfind("bounded:", 0) == 0) {
      out.push_back({"bounded", {parse_u64(t.substr(8), "bounded:")}});
    } else if (t.rfind("params:", 0) == 0) {
      if (i + 2 >= tokens.size()) throw UsageError("params: needs three values n,k,d");
      out.push_back({"params",
                     {parse_u64(t.substr(7), "params:"), parse_u64(tokens[i + 1], "params:"),
                      parse_u64(tokens[i + 2], "params:")}});
      i += 2;
    } else {
      throw UsageError("unknown check '" + t + "'");
    }
  }
  if (out.empty()) throw UsageError("no checks requested");
  return out;
}

int finish_report(const json& report, const Common& c, std::ostream& out) {
  emit(c.report, report.dump(2) + "\n", out);
  return report["pass"].get<bool>() ? 0 : 1;
}

// ---- seed-matrix

int cmd_seed_matrix(std::uint64_t i, const Common& c, std::ostream& out) {
  if (i == 0) throw UsageError("--i must be at least 1");
  const SeedMatrices s = build_seed_matrices(PrimeField(c.field), i);
  emit(c.out, to_text(s.A), out);
  return 0;
}

// ---- build

struct BuildArgs {
  std::string family;
  std::optional<std::uint64_t> i, j, m, r;
};

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError("--family " + family + " needs " + flag);
  return *v;
}

int emit_params_only(const std::string& family, json inputs, const CodeParams& p, const Rational& kd,
                     const std::string& reason, json extra, const Common& c, std::ostream& out) {
  json o;
  o["family"] = family;
  o["inputs"] = std::move(inputs);
  o["materialized"] = false;
  o["reason"] = reason;
  o["params"] = params_json(p, false);
  o["kd_over_n"] = to_string(kd);
  for (auto& [key, value] : extra.items()) o[key] = value;
  emit(c.out, o.dump(2) + "\n", out);
  return 0;
}

int cmd_build(const BuildArgs& a, const Common& c, std::ostream& out) {
  const MaterializationOptions mat;
  const std::string reason = "length exceeds the materialization budget of " +
                             std::to_string(mat.max_coordinates) + " coordinates";
  if (a.family == "seed") {
    const std::uint64_t i = need(a.i, "--i", a.family);
    if (i == 0) throw UsageError("--i must be at least 1");
    emit(c.out, to_text(seed_code(PrimeField(c.field), i, SearchOptions{0, 1}).generator()), out);
    return 0;
  }
  FamilyOptions opts;
  opts.verify = false;
  if (a.family == "family") {
    const std::uint64_t i = need(a.i, "--i", a.family), j = need(a.j, "--j", a.family);
    const FamilyMember m = family_code(PrimeField(c.field), i, j, opts);
    if (m.code) {
      emit(c.out, to_text(m.code->generator()), out);
      return 0;
    }
    const CodeParams p = m.params.params();
    return emit_params_only(a.family, {{"i", i}, {"j", j}, {"field", c.field}}, p, kd_over_n(p), reason, json::object(),
                            c, out);
  }
  if (a.family == "series") {
    const std::uint64_t i = need(a.i, "--i", a.family);
    if (i == 0) throw UsageError("--i must be at least 1");
    const SeriesMember s = series_code(PrimeField(c.field), i, opts);
    if (s.code) {
      emit(c.out, to_text(s.code->generator()), out);
      return 0;
    }
    json extra{{"j", s.j},
               {"j_alternate", s.j_alternate},
               {"alternate_params", params_json(s.alternate_params.params(), false)},
               {"alternate_kd_over_n", to_string(s.alternate_kd_over_n)}};
    return emit_params_only(a.family, {{"i", i}, {"field", c.field}}, s.params.params(), s.kd_over_n, reason,
                            std::move(extra), c, out);
  }
  if (a.family == "rm") {
    const std::uint64_t m = need(a.m, "--m", a.family), r = need(a.r, "--r", a.family);
    if (c.field != 2) throw UsageError("Reed-Muller codes are binary; --field must be 2");
    if (r > m) throw UsageError("--r must not exceed --m");
    const RMParams p = rm_params(m, r);
    if (m < 64 && (std::uint64_t{1} << m) <= mat.max_coordinates) {
      emit(c.out, to_text(rm_generator(m, r, mat).generator()), out);
      return 0;
    }
    return emit_params_only(a.family, {{"m", m}, {"r", r}, {"field", 2}}, p.params, p.kd_over_n, reason,
                            json::object(), c, out);
  }
  throw UsageError("unknown --family '" + a.family + "' (expected seed, family, series or rm)");
}

// ---- verify

int cmd_verify(const std::string& in, const std::string& checks_spec, const Common& c, std::ostream& out) {
  const Stopwatch clock;
  const std::vector<CheckRequest> requests = parse_checks(checks_spec);
  LinearCode code = read_code_file(in);
  const SearchOptions search = search_options(c);
  const std::uint64_t d = min_distance_exhaustive(code, search);
  const std::uint64_t n = code.length(), k = code.dimension();

  std::vector<Check> checks;
  for (const CheckRequest& req : requests) {
    if (req.name == "distance") {
      checks.push_back({"distance", "exhaustive", d, true});
    } else if (req.name == "singleton") {
      checks.push_back({"singleton", {{"max_d", n - k + 1}}, d, d <= n - k + 1});
    } else if (req.name == "params") {
      const json want{{"n", req.values[0]}, {"k", req.values[1]}, {"d", req.values[2]}};
      const json got{{"n", n}, {"k", k}, {"d", d}};
      checks.push_back({"params", want, got, want == got});
    } else if (req.name == "bounded") {
      const std::uint64_t u = req.values[0];
      if (u == 0) throw UsageError("bounded: needs u >= 1");
      const BoundednessReport b = check_bounded(code, u, search);
      const json actual{{"basis_weights", b.basis_weights},
                        {"sum_weight", b.sum_weight},
                        {"d", b.d_used},
                        {"weights_equal_u", b.cond_weights_ok},
                        {"sum_weight_equals_d", b.cond_sum_ok},
                        {"inequality", b.cond_inequality_ok}};
      checks.push_back({"bounded", {{"u", u}}, actual, b.bounded()});
    }
  }

  const auto u = common_weight(code);
  const CodeParams p{n, k, d, u ? std::optional<BigInt>(*u) : std::nullopt};
  const json inputs{{"in", in}, {"checks", checks_spec}, {"field", code.field().modulus()}};
  return finish_report(make_report("verify", inputs, params_json(p, true), checks, {}, clock.seconds()), c, out);
}

// ---- construct

int cmd_construct(const std::string& in, std::uint64_t steps, const Common& c, std::ostream& out) {
  const Stopwatch clock;
  if (c.out.empty()) throw UsageError("construct needs --out for the generator file");
  LinearCode input = read_code_file(in);
  const SearchOptions search = search_options(c);
  const std::uint64_t d = min_distance_exhaustive(input, search);
  const BigInt n = input.length(), k = input.dimension();

  std::vector<std::string> notes;
  std::optional<ChainParams> exact;
  const auto u = common_weight(input);
  if (u) {
    const BoundednessReport b = check_bounded(input, *u, search);
    if (b.bounded()) {
      exact = predict_params(n, k, d, *u, steps);
      notes.push_back("input is " + std::to_string(*u) + "-bounded");
    } else {
      notes.push_back("input is not bounded; only the lower bound applies");
    }
  } else {
    notes.push_back("basis weights differ; only the lower bound applies");
  }

  LinearCode result = iterate(input, steps);
  write_text_file(c.out, to_text(result.generator()));

  std::vector<Check> checks;
  const BigInt want_n = iterated_length(n, k, steps);
  checks.push_back({"length", want_n.str(), std::to_string(result.length()), want_n == result.length()});
  const BigInt want_k = k + steps;
  checks.push_back({"dimension", want_k.str(), std::to_string(result.dimension()), want_k == result.dimension()});

  const BigInt lower = chain_distance_lower_bound(k, d, steps);
  std::optional<std::uint64_t> got;
  if (message_space_size(result) <= search.budget) {
    got = min_distance_exhaustive(result, search);
    checks.push_back({"lower_bound", {{"at_least", lower.str()}}, *got, lower <= *got});
  } else {
    notes.push_back("output distance not verified: message space exceeds the search budget");
  }
  if (exact) {
    if (!exact->d_exact) {
      notes.push_back("steps exceed the exact range " + max_exact_steps(k, d, *u).str() + "; formula is a lower bound");
    } else if (got) {
      checks.push_back({"exact_distance", exact->d.str(), *got, exact->d == *got});
    }
  }

  CodeParams p;
  if (got) {
    p = {BigInt(result.length()), BigInt(result.dimension()), BigInt(*got), std::nullopt};
    if (const auto w = common_weight(result)) p.u = BigInt(*w);
  } else if (exact && exact->d_exact) {
    p = exact->params();
  } else {
    p = {want_n, want_k, lower, std::nullopt};
  }
  const json inputs{{"in", in}, {"steps", steps}, {"out", c.out}, {"field", input.field().modulus()}};
  return finish_report(make_report("construct", inputs, params_json(p, got.has_value()), checks, notes, clock.seconds()),
                       c, out);
}

// ---- growth

struct GrowthArgs {
  std::string family;
  std::uint64_t min_index = 1;
  std::uint64_t max_index = 5;
  std::uint64_t seed_i = 2;
  std::string format = "csv";
  std::string in;
  bool no_verify = false;
};

int cmd_growth(const GrowthArgs& a, const Common& c, std::ostream& out) {
  GrowthQuery q;
  q.family = parse_family(a.family);
  q.first = a.min_index;
  q.last = a.max_index;
  q.seed_i = a.seed_i;
  q.field = c.field;
  q.options.search = search_options(c);
  q.options.verify = !a.no_verify;
  if (!a.in.empty()) q.base = read_code_file(a.in);
  const auto rows = growth_table(q);
  if (a.format == "json") {
    emit(c.out, growth_json(rows).dump(2) + "\n", out);
  } else {
    std::ostringstream csv;
    write_growth_csv(csv, rows);
    emit(c.out, csv.str(), out);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recursive linear code families: build, verify, iterate and tabulate kd/n."};
  app.name("growthcodes");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub, bool with_out) {
    sub->add_option("--workers", common.workers, "Threads for the distance search")->check(CLI::PositiveNumber);
    sub->add_option("--field", common.field, "Prime modulus q");
    if (with_out) sub->add_option("--out", common.out, "Output file (default: stdout)");
  };

  std::uint64_t seed_i = 0;
  auto* seed = app.add_subcommand("seed-matrix", "Write the seed matrix A_i");
  seed->add_option("--i", seed_i, "Seed index")->required();
  add_common(seed, true);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Materialize a code or print its parameters");
  build->add_option("--family", build_args.family, "seed | family | series | rm")->required();
  build->add_option("--i", build_args.i, "Seed index");
  build->add_option("--j", build_args.j, "Construction steps");
  build->add_option("--m", build_args.m, "Reed-Muller m");
  build->add_option("--r", build_args.r, "Reed-Muller r");
  add_common(build, true);

  std::string verify_in, verify_checks;
  auto* verify = app.add_subcommand("verify", "Run checks against a generator file");
  verify->add_option("--in", verify_in, "Generator file")->required();
  verify->add_option("--checks", verify_checks, "distance,singleton,bounded:U,params:N,K,D")->required();
  verify->add_option("--report", common.report, "Report file (default: stdout)");
  add_common(verify, false);

  GrowthArgs growth_args;
  auto* growth = app.add_subcommand("growth", "Emit a kd/n growth table");
  growth->add_option("--family", growth_args.family, "seed-series | seed-family | rm-diagonal | rm-third | direct-sum | repetition")
      ->required();
  growth->add_option("--min-index", growth_args.min_index, "First index");
  growth->add_option("--max-index", growth_args.max_index, "Last index");
  growth->add_option("--i", growth_args.seed_i, "Seed index for seed-family");
  growth->add_option("--in", growth_args.in, "Base code for direct-sum / repetition");
  growth->add_option("--format", growth_args.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  growth->add_flag("--no-verify", growth_args.no_verify, "Skip exhaustive searches");
  add_common(growth, true);

  std::string construct_in;
  std::uint64_t construct_steps = 1;
  auto* construct = app.add_subcommand("construct", "Apply construction steps to a generator file");
  construct->add_option("--in", construct_in, "Generator file")->required();
  construct->add_option("--steps", construct_steps, "Number of steps");
  construct->add_option("--report", common.report, "Report file (default: stdout)");
  add_common(construct, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "growthcodes: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*seed) return cmd_seed_matrix(seed_i, common, out);
    if (*build) return cmd_build(build_args, common, out);
    if (*verify) return cmd_verify(verify_in, verify_checks, common, out);
    if (*growth) return cmd_growth(growth_args, common, out);
    if (*construct) return cmd_construct(construct_in, construct_steps, common, out);
  } catch (const UsageError& e) {
    err << "growthcodes: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "growthcodes: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace growthcodes::cli
