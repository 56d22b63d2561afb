#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symapprox/errors.hpp"
#include "symapprox/influence.hpp"
#include "symapprox/reliability.hpp"
#include "symapprox/symmetric_approximation.hpp"

namespace symapprox::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Input documents

std::string describe(const json& doc) {
  const auto text = doc.dump();
  return text.size() > 60 ? text.substr(0, 57) + "..." : text;
}

template <typename T>
T field(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(where + ": missing field \"" + key + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(where + ": field \"" + key + "\" has the wrong type (" + e.what() + ")");
  }
}

int arity_field(const json& doc, const std::string& where) {
  const int n = field<int>(doc, "n", where);
  if (n < 1 || n > kMaxVariables) {
    throw InputError(where + ": \"n\" must lie in 1.." + std::to_string(kMaxVariables));
  }
  return n;
}

std::vector<double> split_reals(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw InputError(what + ": cannot parse '" + item + "' as a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InputError(what + ": empty list");
  return out;
}

// ---------------------------------------------------------------------------
// Output

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const CommandRequest& req, std::ostream& out, const std::string& text) {
  if (req.output_path) {
    std::ofstream file(*req.output_path);
    if (!file) throw InputError("cannot open output file '" + *req.output_path + "'");
    file << text;
  } else {
    out << text;
  }
}

void emit_json(const CommandRequest& req, std::ostream& out, json report, json meta) {
  if (!req.no_meta && !meta.is_null()) report["meta"] = std::move(meta);
  emit(req, out, report.dump(2) + "\n");
}

Format resolve_format(const CommandRequest& req, Format fallback, bool csv_supported) {
  const Format f = req.format.value_or(fallback);
  if (f == Format::kCsv && !csv_supported) {
    throw InputError("--format csv is only available for the reliability command");
  }
  return f;
}

struct LoadedFunction {
  PseudoBooleanFunction f;
  WeightDistribution w;
};

LoadedFunction load_function_and_weights(const CommandRequest& req) {
  if (!req.input) throw InputError("--input is required for this command");
  auto f = function_from_json(*req.input);
  auto w = weights_from_json(req.weights, f.arity());
  return {std::move(f), std::move(w)};
}

StructureFunction load_structure(const CommandRequest& req) {
  if (req.system && req.input) throw InputError("give either --system or --input, not both");
  if (req.system) return systems::parse(*req.system);
  if (req.input) return StructureFunction(function_from_json(*req.input));
  throw InputError("--system or --input is required for this command");
}

// ---------------------------------------------------------------------------
// Commands

int run_approximate(const CommandRequest& req, std::ostream& out) {
  resolve_format(req, Format::kJson, false);
  auto [f, w] = load_function_and_weights(req);
  const PseudoBooleanFunction target =
      req.degree ? symmetric_degree_k(f, w, *req.degree) : f;
  auto a = best_symmetric_approximation(target, w);
  a.mean = mean(f, w);
  const auto m = to_multilinear(a);
  json report = {{"n", a.n},
                 {"c", a.c},
                 {"levels", a.levels.values},
                 {"abar", m.abar},
                 {"mean", a.mean},
                 {"residual_norm", distance(f, to_function(a), w)}};
  if (req.degree) report["degree"] = *req.degree;
  json meta = {
      {"c", "coefficients of os_1..os_{n+1} in the best symmetric approximation"},
      {"levels", "conditional level expectations E(f | |x| = s), s = 0..n"},
      {"abar", "symmetric multilinear coefficients, s-th forward difference of levels"},
      {"mean", "weighted mean <f, 1>"},
      {"residual_norm", "weighted distance between f and its approximation"}};
  if (req.degree) meta["degree"] = "approximation restricted to symmetric functions of this degree";
  emit_json(req, out, std::move(report), std::move(meta));
  return kOk;
}

int run_influence(const CommandRequest& req, std::ostream& out) {
  resolve_format(req, Format::kJson, false);
  const auto [f, w] = load_function_and_weights(req);
  const auto I = influence_vector(f, w);
  json report = {{"n", f.arity()}, {"mean", mean(f, w)}};
  if (req.k) {
    report["k"] = *req.k;
    report["I_k"] = influence_index(f, w, *req.k);
  } else {
    report["I"] = I.values;
  }
  if (req.verify_kernel) {
    double worst = 0.0;
    for (int k = 1; k <= f.arity(); ++k) {
      if (req.k && k != *req.k) continue;
      worst = std::max(worst, std::abs(influence_via_kernel(f, w, k) - I(k)));
    }
    report["kernel_check_max_abs"] = worst;
  }
  json meta = {{"I", "influence of the k-th largest variable, k = 1..n"},
               {"mean", "weighted mean <f, 1>"}};
  if (req.verify_kernel) meta["kernel_check_max_abs"] = "max |<f, g_k> - I(f, k)|";
  emit_json(req, out, std::move(report), std::move(meta));
  return kOk;
}

int run_moebius(const CommandRequest& req, std::ostream& out) {
  resolve_format(req, Format::kJson, false);
  if (!req.input) throw InputError("--input is required for moebius");
  const auto f = function_from_json(*req.input);
  const auto m = moebius_transform(f);
  json coeffs = json::array();
  for (const auto& [mask, value] : m.by_cardinality()) {
    coeffs.push_back({{"members", members_of(mask)}, {"value", value}});
  }
  json report = {{"n", f.arity()}, {"degree", m.degree()}, {"coefficients", std::move(coeffs)}};
  json meta = {{"coefficients", "nonzero Moebius coefficients a(S), sorted by (|S|, mask)"}};
  emit_json(req, out, std::move(report), std::move(meta));
  return kOk;
}

int run_game(const CommandRequest& req, std::ostream& out) {
  resolve_format(req, Format::kJson, false);
  if (!req.input) throw InputError("--input is required for game");
  const auto f = function_from_json(*req.input);
  const std::vector<double> table(f.values().begin(), f.values().end());
  const CooperativeGame game(SetFunctionView(f.arity(), table));
  const auto w = weights_from_json(req.weights, f.arity());
  const auto I = game_influence(game, w);
  const auto closest = best_symmetric_approximation(game.as_function(), w);
  json report = {{"n", f.arity()},
                 {"I", I.values},
                 {"mean", mean(f, w)},
                 {"closest_symmetric_game", {{"n", f.arity()}, {"levels", closest.levels.values}}}};
  json meta = {{"I", "mean contribution of a player to a coalition of size n-k, k = 1..n"},
               {"closest_symmetric_game", "worth of a coalition of each size in the closest symmetric game"}};
  emit_json(req, out, std::move(report), std::move(meta));
  return kOk;
}

int run_signature(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  resolve_format(req, Format::kJson, false);
  if (req.weights_given) {
    err << "warning: signatures always use uniform weights; --weights ignored\n";
  }
  const auto phi = load_structure(req);
  json report;
  if (req.monte_carlo_trials) {
    const auto sig = signature_monte_carlo(phi, *req.monte_carlo_trials, req.seed);
    report = {{"n", sig.n},
              {"s", sig.s},
              {"method", {{"monte_carlo", {{"trials", *req.monte_carlo_trials}, {"seed", req.seed}}}}},
              {"stderr", sig.standard_error}};
  } else {
    const auto sig = signature_exact(phi);
    report = {{"n", sig.n}, {"s", sig.s}, {"method", "exact"}};
  }
  json meta = {{"s", "Pr(the i-th component failure brings the system down), i = 1..n"}};
  if (req.monte_carlo_trials) meta["stderr"] = "binomial standard error of each estimate";
  emit_json(req, out, std::move(report), std::move(meta));
  return kOk;
}

int run_reliability(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  const Format format = resolve_format(req, Format::kCsv, true);
  if (req.weights_given) {
    err << "warning: reliability always uses uniform weights; --weights ignored\n";
  }
  const auto phi = load_structure(req);
  const auto model = LifetimeModel::parse(req.lifetimes);
  const auto rows = reliability_curve(phi, model, req.t_grid);
  const int n = phi.components();

  if (format == Format::kCsv) {
    std::string text = "t,Fbar";
    for (int i = 1; i <= n; ++i) text += ",term_" + std::to_string(i);
    text += "\n";
    for (const auto& row : rows) {
      text += format_real(row.t) + "," + format_real(row.survival);
      for (double term : row.terms) text += "," + format_real(term);
      text += "\n";
    }
    emit(req, out, text);
    return kOk;
  }

  json table = json::array();
  for (const auto& row : rows) {
    table.push_back({{"t", row.t},
                     {"Fbar", row.survival},
                     {"order_statistic_survival", row.order_statistic_survival},
                     {"terms", row.terms}});
  }
  json report = {{"n", n}, {"s", signature_exact(phi).s}, {"rows", std::move(table)}};
  json meta = {{"Fbar", "system survival Pr(T > t)"},
               {"terms", "s_i Pr(X_{i:n} > t); these sum to Fbar"}};
  emit_json(req, out, std::move(report), std::move(meta));
  return kOk;
}

// ---------------------------------------------------------------------------
// check

struct PropertyResult {
  std::string name;
  std::string status;  // pass | fail | skipped
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string note;
};

double max_abs_diff(const PseudoBooleanFunction& a, const PseudoBooleanFunction& b) {
  double worst = 0.0;
  for (Mask x = 0; x < a.size(); ++x) worst = std::max(worst, std::abs(a(x) - b(x)));
  return worst;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

int run_check(const CommandRequest& req, std::ostream& out) {
  resolve_format(req, Format::kJson, false);
  const auto [f, w] = load_function_and_weights(req);
  const int n = f.arity();
  double scale = 1.0;
  for (double v : f.values()) scale = std::max(scale, std::abs(v));

  std::vector<PropertyResult> results;
  auto record = [&](std::string name, double tol, const std::function<double()>& measure) {
    const double err = measure();
    const double bound = tol * scale;
    results.push_back({std::move(name), err <= bound ? "pass" : "fail", err, bound, {}});
  };
  auto skip = [&](std::string name, std::string why) {
    results.push_back({std::move(name), "skipped", 0.0, 0.0, std::move(why)});
  };

  const auto a = best_symmetric_approximation(f, w);
  const auto af = to_function(a);

  record("moebius_round_trip", 1e-12,
         [&] { return max_abs_diff(inverse_moebius(moebius_transform(f)), f); });
  if (n <= 10) {
    record("oracle_equivalence", 1e-8, [&] {
      const auto basis = order_statistic_basis(n);
      return max_abs_diff(brute_force_projection(f, w, basis), af);
    });
  } else {
    skip("oracle_equivalence", "Gram oracle limited to n <= 10");
  }
  record("orthogonality", 1e-10, [&] {
    const auto residual = f - af;
    double worst = 0.0;
    for (int i = 1; i <= n + 1; ++i) {
      worst = std::max(worst, std::abs(inner_product(residual, order_statistic(n, i), w)));
    }
    return worst;
  });
  record("idempotence", 1e-12,
         [&] { return max_abs_diff(to_function(best_symmetric_approximation(af, w)), af); });
  record("level_preservation", 1e-12,
         [&] { return max_abs_diff(level_expectation(af, w).values, a.levels.values); });
  record("representation_agreement", 1e-12, [&] {
    const auto l_stat = evaluate_l_statistic(a);
    const auto centered = evaluate_centered(centered_form(a, w), w);
    const auto multilinear = evaluate_multilinear(to_multilinear(a));
    return std::max({max_abs_diff(l_stat, af), max_abs_diff(centered, af),
                     max_abs_diff(multilinear, af)});
  });
  const auto I = influence_vector(f, w);
  record("kernel_identity", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 1; k <= n; ++k) {
      worst = std::max(worst, std::abs(influence_via_kernel(f, w, k) - I(k)));
    }
    return worst;
  });
  record("covariance_reading", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 1; k <= n; ++k) worst = std::max(worst, std::abs(influence_as_covariance(f, w, k).check));
    return worst;
  });
  record("telescoping", 1e-12, [&] {
    double sum = 0.0;
    for (double v : I.values) sum += v;
    return std::abs(sum - (a.levels[n] - a.levels[0]));
  });
  record("characterization", 1e-9, [&] {
    const auto g = symmetric_from_mean_and_influence(mean(f, w), I, w);
    return max_abs_diff(g, af);
  });
  if (weight_is_symmetric(w)) {
    record("symmetrization", 1e-12, [&] { return max_abs_diff(symmetrize(f), af); });
  } else {
    skip("symmetrization", "weights are not symmetric");
  }
  if (weight_is_self_dual(w)) {
    record("duality", 1e-12, [&] {
      const auto lhs = level_expectation(dual(f), w);
      const auto rhs = dual_profile(level_expectation(f, w));
      return max_abs_diff(lhs.values, rhs.values);
    });
  } else {
    skip("duality", "weights are not self-dual");
  }
  if (is_symmetric(f, req.tol)) {
    record("symmetric_fixed_point", std::max(1e-12, req.tol), [&] { return max_abs_diff(af, f); });
  }

  bool all = true;
  json props = json::array();
  for (const auto& r : results) {
    json p = {{"name", r.name}, {"status", r.status}};
    if (r.status != "skipped") {
      p["max_error"] = r.max_error;
      p["tolerance"] = r.tolerance;
    } else {
      p["reason"] = r.note;
    }
    if (r.status == "fail") all = false;
    props.push_back(std::move(p));
  }
  json report = {{"n", n}, {"all_passed", all}, {"properties", std::move(props)}};
  emit_json(req, out, std::move(report), nullptr);
  return all ? kOk : kCheckFailed;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface

json load_document(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text_or_path[first] == '{') {
    try {
      return json::parse(text_or_path);
    } catch (const json::parse_error& e) {
      throw InputError("inline JSON: " + std::string(e.what()));
    }
  }
  std::ifstream file(text_or_path);
  if (!file) throw InputError("cannot open '" + text_or_path + "'");
  try {
    return json::parse(file);
  } catch (const json::parse_error& e) {
    throw InputError(text_or_path + ": " + e.what());
  }
}

PseudoBooleanFunction function_from_json(const json& doc) {
  const std::string where = "function " + describe(doc);
  const int n = arity_field(doc, where);
  if (doc.contains("values")) {
    auto values = field<std::vector<double>>(doc, "values", where);
    if (values.size() != cube_size(n)) {
      throw InputError(where + ": \"values\" needs " + std::to_string(cube_size(n)) +
                       " entries, got " + std::to_string(values.size()));
    }
    return {n, std::move(values)};
  }
  if (doc.contains("sets")) {
    const auto& sets = doc.at("sets");
    if (!sets.is_array()) throw InputError(where + ": \"sets\" must be an array");
    std::vector<std::pair<std::vector<int>, double>> entries;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::string at = where + " sets[" + std::to_string(i) + "]";
      auto members = field<std::vector<int>>(sets[i], "members", at);
      for (int m : members) {
        if (m < 1 || m > n) {
          throw InputError(at + ": member " + std::to_string(m) + " outside 1.." + std::to_string(n));
        }
      }
      entries.emplace_back(std::move(members), field<double>(sets[i], "value", at));
    }
    try {
      return from_set_function(SetFunctionView::from_sparse(n, entries));
    } catch (const ContractError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (doc.contains("levels")) {
    auto levels = field<std::vector<double>>(doc, "levels", where);
    if (levels.size() != static_cast<std::size_t>(n) + 1) {
      throw InputError(where + ": \"levels\" needs n+1 entries");
    }
    return from_profile({n, std::move(levels)});
  }
  throw InputError(where + ": expected one of \"values\", \"sets\" or \"levels\"");
}

WeightDistribution weights_from_json(const json& doc, int n) {
  const std::string where = "weights " + describe(doc);
  const auto kind = field<std::string>(doc, "kind", where);
  if (kind == "uniform") return uniform_weights(n);
  if (kind == "product") {
    const auto p = field<std::vector<double>>(doc, "p", where);
    if (p.size() != static_cast<std::size_t>(n)) {
      throw InputError(where + ": \"p\" needs " + std::to_string(n) + " entries");
    }
    return product_weights(p);
  }
  if (kind == "explicit") {
    const auto raw = field<std::vector<double>>(doc, "raw", where);
    if (raw.size() != cube_size(n)) {
      throw InputError(where + ": \"raw\" needs " + std::to_string(cube_size(n)) + " entries");
    }
    return explicit_weights(raw);
  }
  throw InputError(where + ": unknown kind '" + kind + "'");
}

CommandRequest parse_request(const std::vector<std::string>& args) {
  CLI::App app{"Best symmetric approximation of pseudo-Boolean functions", "symapprox"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  CommandRequest req;
  std::string weights_text, output_text, format_text, input_text;
  app.add_option("--weights", weights_text, "weight spec: file or inline JSON (default uniform)");
  app.add_option("--tol", req.tol, "symmetry tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--output,-o", output_text, "write the report to this file");
  app.add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", req.seed, "Monte Carlo seed");
  app.add_flag("--no-meta", req.no_meta, "omit the descriptive meta block");

  auto input_option = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input_text, "function: file or inline JSON");
  };

  auto* approximate = app.add_subcommand("approximate", "best symmetric approximation");
  input_option(approximate);
  approximate->add_option("--degree", req.degree, "restrict to symmetric functions of degree <= k");

  auto* influence = app.add_subcommand("influence", "influence of the k-th largest variable");
  input_option(influence);
  influence->add_option("--k", req.k, "report a single index");
  influence->add_flag("--verify-kernel", req.verify_kernel, "cross-check against <f, g_k>");

  auto* moebius = app.add_subcommand("moebius", "Moebius coefficients");
  input_option(moebius);

  auto* game = app.add_subcommand("game", "closest symmetric game and player influence");
  input_option(game);

  std::string system_text;
  auto* signature = app.add_subcommand("signature", "system signature");
  input_option(signature);
  signature->add_option("--system", system_text, "series:N | parallel:N | K-of-N | bridge");
  signature->add_option("--monte-carlo", req.monte_carlo_trials, "estimate with this many trials")
      ->check(CLI::PositiveNumber);

  std::string grid_text;
  auto* reliability = app.add_subcommand("reliability", "system survival curve (CSV)");
  input_option(reliability);
  reliability->add_option("--system", system_text, "series:N | parallel:N | K-of-N | bridge");
  reliability->add_option("--lifetimes", req.lifetimes, "exp:LAMBDA or weibull:SHAPE:SCALE");
  reliability->add_option("--t-grid", grid_text, "comma-separated increasing times");

  auto* check = app.add_subcommand("check", "run invariant checks on an input");
  input_option(check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  }

  const std::pair<CLI::App*, Command> table[] = {
      {approximate, Command::kApproximate}, {influence, Command::kInfluence},
      {moebius, Command::kMoebius},         {game, Command::kGame},
      {signature, Command::kSignature},     {reliability, Command::kReliability},
      {check, Command::kCheck}};
  for (const auto& [sub, cmd] : table) {
    if (sub->parsed()) req.command = cmd;
  }

  if (!input_text.empty()) req.input = load_document(input_text);
  if (!weights_text.empty()) {
    req.weights = load_document(weights_text);
    req.weights_given = true;
  }
  if (!system_text.empty()) req.system = system_text;
  if (!output_text.empty()) req.output_path = output_text;
  if (!format_text.empty()) req.format = format_text == "csv" ? Format::kCsv : Format::kJson;
  if (!grid_text.empty()) req.t_grid = split_reals(grid_text, "--t-grid");
  return req;
}

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  switch (req.command) {
    case Command::kApproximate: return run_approximate(req, out);
    case Command::kInfluence: return run_influence(req, out);
    case Command::kMoebius: return run_moebius(req, out);
    case Command::kGame: return run_game(req, out);
    case Command::kSignature: return run_signature(req, out, err);
    case Command::kReliability: return run_reliability(req, out, err);
    case Command::kCheck: return run_check(req, out);
  }
  return kInvalidInput;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto req = parse_request(args);
    return run(req, out, err);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const DegeneracyError& e) {
    err << "numerical degeneracy: " << e.what() << "\n";
    return kDegenerate;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace symapprox::cli
