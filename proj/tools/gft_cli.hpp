#pragma once

// Command-line front end. `run` takes the full argument list and explicit
// streams so it can be driven in-process by the tests.
//
// Exit codes: 0 success, 1 validation or input error, 2 internal error.
// Result JSON (or CSV with --emit-csv) goes to `out`; on failure `out`
// receives {"error": {code, message, field}} and `err` a one-line message.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gft/gft.hpp"

namespace gft::cli {

inline constexpr const char* kVersion = "0.1.0";

namespace detail {

struct ParamFlags {
  std::string file;
  std::optional<int> k;
  std::optional<double> tau, mu, delta, gamma;

  void attach(CLI::App* cmd) {
    cmd->add_option("--params", file, "class parameters JSON file ('-' for stdin)");
    cmd->add_option("--k", k, "gap index k >= 1");
    cmd->add_option("--tau", tau, "operator order tau in (0, 1]");
    cmd->add_option("--mu", mu, "operator order mu in (0, 1]");
    cmd->add_option("--delta", delta, "weight delta in [0, 1]");
    cmd->add_option("--gamma", gamma, "order gamma in [0, 1)");
  }
};

inline Json read_json(const std::string& path, std::istream& in, const char* field) {
  try {
    if (path.empty() || path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw Error(Errc::parse, "cannot open '" + path + "'", field);
    return Json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("malformed JSON: ") + e.what(), field);
  }
}

// δ = 1 is admitted on the command line so the τ = μ = 1 reductions can be
// run directly.
inline ClassParams resolve(const ParamFlags& f, std::istream& in) {
  if (!f.file.empty()) return params_from_json(read_json(f.file, in, "params"), DeltaRange::closed);
  auto need = [](const auto& v, const char* name) {
    if (!v) throw Error(Errc::parse, std::string("missing --") + name + " (or pass --params)", name);
    return *v;
  };
  // named locals so a missing flag is reported in declaration order
  const int k = need(f.k, "k");
  const double tau = need(f.tau, "tau");
  const double mu = need(f.mu, "mu");
  const double delta = need(f.delta, "delta");
  const double gamma = need(f.gamma, "gamma");
  return ClassParams::make(k, tau, mu, delta, gamma, DeltaRange::closed);
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

inline ScanOptions scan_options() {
  ScanOptions opts;
  if (const char* env = std::getenv("GFT_SCAN_LIMIT")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
      opts.scan_limit = v;
    } catch (const std::exception&) {
      throw Error(Errc::parse, "GFT_SCAN_LIMIT must be a positive integer", "GFT_SCAN_LIMIT");
    }
  }
  return opts;
}

inline Json report_json(const Report& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations)
    violations.push_back(Json{{"check", v.check}, {"detail", v.detail}, {"error", v.error}});
  return Json{{"suite", r.suite},
              {"seed", r.seed},
              {"cases", r.cases},
              {"violations", std::move(violations)},
              {"max_error", r.max_error}};
}

inline int fail(std::ostream& out, std::ostream& err, const Error& e) {
  emit(out, error_json(e));
  err << "gft: " << e.what() << '\n';
  return 1;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient bounds, distortion, radii and closure for the class P_{tau,mu}(k,delta,gamma)", "gft"};
  app.set_version_flag("--version", std::string("gft ") + kVersion);
  app.require_subcommand(1);

  detail::ParamFlags params;
  std::string series_path = "-";
  std::string series2_path;
  std::vector<std::string> series_list;
  std::vector<double> weights;
  std::optional<double> eta;
  double tau = 1.0, mu = 1.0;
  bool derivative = false;
  std::optional<double> r, beta, alpha_op;
  bool emit_csv = false;
  int steps = 100;
  double alpha = 0.0;
  std::string kind = "starlike";
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::string report_path;

  auto* check = app.add_subcommand("check", "decide class membership of a series");
  check->add_option("--series", series_path, "series JSON file ('-' for stdin)");
  params.attach(check);

  auto* extremal_cmd = app.add_subcommand("extremal", "emit the extremal function of the class");
  params.attach(extremal_cmd);

  auto* transform = app.add_subcommand("transform", "apply the Tremblay operator to a series");
  transform->add_option("--series", series_path, "series JSON file ('-' for stdin)");
  transform->add_option("--tau", tau, "order tau")->required();
  transform->add_option("--mu", mu, "order mu")->required();
  transform->add_flag("--derivative", derivative, "emit the derivative of the image instead");

  auto* distortion = app.add_subcommand("distortion", "distortion envelope at |z| = r");
  params.attach(distortion);
  distortion->add_option("--r", r, "modulus in [0, 1)");
  distortion->add_option("--beta", beta, "operator order beta (with --alpha-op)");
  distortion->add_option("--alpha-op", alpha_op, "operator order alpha (with --beta)");
  distortion->add_flag("--emit-csv", emit_csv, "write an r,lo,hi sweep over [0, 1) as CSV");
  distortion->add_option("--steps", steps, "number of sweep points for --emit-csv")->check(CLI::PositiveNumber);

  auto* radius_cmd = app.add_subcommand("radius", "radius of starlikeness or convexity of order alpha");
  params.attach(radius_cmd);
  radius_cmd->add_option("--alpha", alpha, "order alpha in [0, 1)");
  radius_cmd->add_option("--kind", kind, "starlike or convex")->check(CLI::IsMember({"starlike", "convex"}));

  auto* hadamard = app.add_subcommand("hadamard", "modified Hadamard product and its guaranteed order");
  hadamard->add_option("--series", series_path, "first factor JSON file ('-' for stdin)");
  hadamard->add_option("--series2", series2_path, "second factor JSON file")->required();
  params.attach(hadamard);

  auto* combine = app.add_subcommand("combine", "convex combination (or segment with --eta) of series");
  combine->add_option("--series", series_list, "series JSON files, repeatable")->required();
  combine->add_option("--weights", weights, "weights summing to 1 (default: equal)")->delimiter(',');
  combine->add_option("--eta", eta, "segment parameter for exactly two series");

  auto* verify = app.add_subcommand("verify", "run numerical verification suites");
  verify->add_option("--suite", suite, "all|membership|radius|distortion|fracops")
      ->check(CLI::IsMember({"all", "membership", "radius", "distortion", "fracops"}));
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--out", report_path, "report file (default: stdout)");

  std::vector<const char*> argv{"gft"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "gft " << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    return detail::fail(out, err, Error(Errc::parse, e.what()));
  }

  try {
    if (check->parsed()) {
      const ClassParams p = detail::resolve(params, in);
      const GapSeries f = series_from_json(detail::read_json(series_path, in, "series"));
      detail::emit(out, to_json(is_member(f, p)));
    } else if (extremal_cmd->parsed()) {
      detail::emit(out, to_json(extremal(detail::resolve(params, in))));
    } else if (transform->parsed()) {
      const GapSeries f = series_from_json(detail::read_json(series_path, in, "series"));
      const auto orders = TremblayParams::make(tau, mu);
      Json coeffs = Json::array();
      if (derivative) {
        const SparsePolynomial d = tremblay_derivative(f, orders);
        for (const auto& [e, c] : d.terms())
          if (e > 0) coeffs.push_back(Json{{"power", e}, {"b", -c}});
        detail::emit(out, Json{{"constant", d.coefficient(0)}, {"coefficients", std::move(coeffs)}});
      } else {
        const SparsePolynomial image = tremblay(f, orders);
        for (const auto& [e, c] : image.terms())
          if (e > 1) coeffs.push_back(Json{{"nu", e}, {"a", -c}});
        detail::emit(out, Json{{"leading", image.coefficient(1)}, {"coefficients", std::move(coeffs)}});
      }
    } else if (distortion->parsed()) {
      const ClassParams p = detail::resolve(params, in);
      if (beta.has_value() != alpha_op.has_value())
        throw Error(Errc::parse, "--beta and --alpha-op must be given together", beta ? "alpha_op" : "beta");
      auto envelope = [&](double at) {
        return beta ? distortion_operator(p, *beta, *alpha_op, at) : distortion_function(p, at);
      };
      if (emit_csv) {
        std::ostringstream csv;
        csv << std::setprecision(17) << "r,lo,hi\n";
        for (int i = 0; i < steps; ++i) {
          const double at = static_cast<double>(i) / steps;
          const Interval env = envelope(at);
          csv << at << ',' << env.lo << ',' << env.hi << '\n';
        }
        out << csv.str();
      } else {
        if (!r) throw Error(Errc::parse, "missing --r", "r");
        detail::emit(out, to_json(envelope(*r)));
      }
    } else if (radius_cmd->parsed()) {
      const ClassParams p = detail::resolve(params, in);
      const RadiusKind which = kind == "convex" ? RadiusKind::convex : RadiusKind::starlike;
      detail::emit(out, to_json(radius(p, alpha, which, detail::scan_options())));
    } else if (hadamard->parsed()) {
      const ClassParams p = detail::resolve(params, in);
      const GapSeries f = series_from_json(detail::read_json(series_path, in, "series"));
      const GapSeries psi = series_from_json(detail::read_json(series2_path, in, "series2"));
      const HadamardResult h = hadamard_with_order(f, psi, p);
      detail::emit(out, Json{{"omega", to_json(h.omega)}, {"xi", h.xi}, {"member_at_xi", h.member_at_xi}});
    } else if (combine->parsed()) {
      std::vector<GapSeries> fs;
      for (const auto& path : series_list) fs.push_back(series_from_json(detail::read_json(path, in, "series")));
      if (eta) {
        if (fs.size() != 2 || !weights.empty())
          throw Error(Errc::parse, "--eta takes exactly two series and no --weights", "eta");
        detail::emit(out, to_json(segment(fs[0], fs[1], *eta)));
      } else {
        const WeightVector w = weights.empty() ? WeightVector::uniform(fs.size()) : WeightVector(weights);
        detail::emit(out, to_json(convex_combination(fs, w)));
      }
    } else if (verify->parsed()) {
      const Json report = detail::report_json(run_suite(suite, seed));
      if (report_path.empty()) {
        detail::emit(out, report);
      } else {
        std::ofstream file(report_path);
        if (!file) throw Error(Errc::parse, "cannot write '" + report_path + "'", "out");
        file << report.dump(2) << '\n';
      }
    }
  } catch (const Error& e) {
    return detail::fail(out, err, e);
  } catch (const std::exception& e) {
    detail::emit(out, Json{{"error", {{"code", "internal"}, {"message", e.what()}, {"field", ""}}}});
    err << "gft: internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace gft::cli
