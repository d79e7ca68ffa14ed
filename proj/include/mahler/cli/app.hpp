// Copyright 2026 The mahler-t Authors
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

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mahler/cli/plot.hpp"
#include "mahler/cli/worked_examples.hpp"
#include "mahler/io/serialize.hpp"
#include "mahler/quadfield/attainment.hpp"
#include "mahler/ratopt/optimizer.hpp"
#include "mahler/ratopt/oracle.hpp"

namespace mahler::cli {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

using io::Json;

/// Outcome of one verb: a JSON payload, or raw text (CSV), plus exit code.
struct VerbOutput {
  Json result;
  std::optional<std::string> raw;
  int exit_code = kExitOk;
};

inline Json measure_json(const AlgebraicNumber& x, const io::LogScale& scale) {
  Json out;
  out["input"] = to_string(x);
  const char* kinds[] = {"rational", "quadratic", "surd"};
  out["kind"] = kinds[x.index()];
  out["degree"] = measure::degree(x);
  out["value"] = scale(measure::mahler(x));
  out["weil_height"] = scale(measure::weil_height(x));
  if (const auto* q = std::get_if<QuadraticNumber>(&x)) {
    const auto [plus, minus] = q->conjugates();
    out["conjugate_moduli"] = Json::array({io::round15(std::abs(plus)), io::round15(std::abs(minus))});
    out["stability"] = to_string(measure::is_stable_quadratic(*q));
    out["norm"] = measure::norm_quadratic(*q).str();
  }
  if (const auto* s = std::get_if<Surd>(&x)) out["norm"] = measure::norm_surd(*s).str();
  return out;
}

inline Json mt_json(const Rational& q, const TParam& t, const io::LogScale& scale) {
  const auto r = ratopt::metric_mahler_rational(q, t);
  Json witness = Json::array();
  for (const auto& f : r.witness.factors) witness.push_back(f.str());
  Json out;
  out["q"] = q.str();
  out["t"] = io::t_json(t);
  out["value"] = scale(r.value);
  out["witness"] = std::move(witness);
  out["measures"] = io::measures_json(r.witness.per_factor_measure, scale);
  return out;
}

inline Json mt_surd_json(const SquarefreeD& d, unsigned k, const TParam& t,
                         const io::LogScale& scale) {
  const auto r = quadfield::metric_mahler_surd(d, k, t);
  Json witness = Json::array();
  for (const auto& s : r.witness) witness.push_back(s.str());
  Json out;
  out["D"] = d.value().str();
  out["k"] = k;
  out["t"] = io::t_json(t);
  out["value"] = scale(r.value);
  out["witness"] = std::move(witness);
  out["measures"] = io::measures_json(r.measures, scale);
  return out;
}

/// Optimizer against the exhaustive oracle for one q.
struct OracleTally {
  std::size_t checked = 0;
  double max_abs_diff = 0.0;
  Json mismatches = Json::array();

  void compare(const Rational& q, const TParam& t, const ratopt::OracleOptions& options) {
    const double fast = ratopt::metric_mahler_rational(q, t).value;
    const double slow = ratopt::metric_mahler_rational_oracle(q, t, options);
    const double diff = std::abs(fast - slow);
    ++checked;
    max_abs_diff = std::max(max_abs_diff, diff);
    if (diff > 1e-9) {
      mismatches.push_back({{"q", q.str()},
                            {"t", io::t_json(t)},
                            {"optimizer", io::round15(fast)},
                            {"oracle", io::round15(slow)}});
    }
  }
};

inline std::vector<TParam> sweep_ts() {
  return {TParam::finite(1), TParam::finite(1.5), TParam::finite(2), TParam::finite(3),
          TParam::infinity()};
}

}  // namespace detail

/// Parses argv (without the program name), runs one verb and writes the
/// JSON envelope (or CSV for `plot`) to `out`. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out) {
  using detail::Json;
  CLI::App app{"Mahler measures and t-metric Mahler measures", "mahler"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string log_base = "e";
  bool timing = false;
  app.add_option("--log-base", log_base, "Display logs in base e, 2 or 10")
      ->check(CLI::IsMember({"e", "2", "10"}));
  app.add_flag("--timing", timing, "Add elapsed milliseconds to the envelope");

  std::string t_text;

  auto* measure_cmd = app.add_subcommand("measure", "Mahler measure, height and stability");
  std::string measure_value, quadratic_text, surd_text;
  measure_cmd->add_option("value", measure_value, "Rational m/n or surd D^(1/k)");
  measure_cmd->add_option("--quadratic", quadratic_text, "a,b,c[,+|-]: root of a x^2 + b x + c");
  measure_cmd->add_option("--surd", surd_text, "D^(1/k) or (m/n)^(1/k)");

  auto* mt_cmd = app.add_subcommand("mt", "M_t(q) with an optimal rational decomposition");
  std::string q_text;
  mt_cmd->add_option("q", q_text, "Nonzero rational")->required();
  mt_cmd->add_option("--t", t_text, "t >= 1 or inf")->required();

  auto* mt_surd_cmd = app.add_subcommand("mt-surd", "M_t(D^(1/k)) for squarefree D");
  std::string d_text;
  unsigned k = 2;
  mt_surd_cmd->add_option("D", d_text, "Squarefree D >= 2")->required();
  mt_surd_cmd->add_option("k", k, "Root index")->required()->check(CLI::PositiveNumber);
  mt_surd_cmd->add_option("--t", t_text, "t >= 1 or inf")->required();

  auto* attain_cmd = app.add_subcommand("attainment", "Is M_t(sqrt D) attained in Q(sqrt D)?");
  attain_cmd->add_option("D", d_text, "Squarefree D >= 2")->required();
  attain_cmd->add_option("--t", t_text, "t > 1 or inf");

  auto* certify_cmd = app.add_subcommand("certify", "Candidate record behind non-attainment");
  certify_cmd->add_option("D", d_text, "Squarefree D >= p_1^2")->required();
  certify_cmd->add_option("--t", t_text, "t > 1 or inf");

  auto* small_cmd = app.add_subcommand("small-quadratics", "Stable quadratics of measure <= log p");
  std::string p_text;
  small_cmd->add_option("D", d_text, "Squarefree D >= 2")->required();
  small_cmd->add_option("--p", p_text, "Prime divisor of D (default: the largest)");

  auto* plot_cmd = app.add_subcommand("plot", "CSV of t -> M_t");
  std::vector<std::string> plot_surd;
  double t_min = 1.0, t_max = 3.0, step = 0.5;
  bool with_inf = false;
  auto* plot_q = plot_cmd->add_option("--q", q_text, "Rational target");
  auto* plot_s = plot_cmd->add_option("--surd", plot_surd, "D k: target D^(1/k)")->expected(2);
  plot_q->excludes(plot_s);
  plot_cmd->add_option("--t-min", t_min)->capture_default_str();
  plot_cmd->add_option("--t-max", t_max)->capture_default_str();
  plot_cmd->add_option("--step", step)->capture_default_str();
  plot_cmd->add_flag("--inf", with_inf, "Append the t = inf row");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Optimizer against exhaustive search");
  std::vector<std::string> extra_primes;
  long long sweep = 0;
  oracle_cmd->add_option("q", q_text, "Nonzero rational");
  oracle_cmd->add_option("--t", t_text, "t >= 1 or inf (default: 1, 1.5, 2, 3, inf)");
  oracle_cmd->add_option("--extra-prime", extra_primes, "Extraneous primes to offer the oracle");
  oracle_cmd->add_option("--sweep", sweep, "Every reduced m/n with m*n <= N")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Replay the worked examples");

  Json envelope;
  envelope["schema_version"] = kSchemaVersion;
  envelope["command"] = args;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    envelope["error"] = {{"code", "UsageError"}, {"message", e.what()}};
    out << envelope.dump(2) << '\n';
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  detail::VerbOutput result;
  try {
    const auto scale = io::LogScale::for_base(log_base);
    auto t_or = [&](const char* fallback) { return TParam::parse(t_text.empty() ? fallback : t_text); };

    if (measure_cmd->parsed()) {
      const int given = !measure_value.empty() + !quadratic_text.empty() + !surd_text.empty();
      if (given != 1) {
        throw CLI::ValidationError("measure", "give exactly one of value, --quadratic, --surd");
      }
      AlgebraicNumber x = Rational(1);
      if (!quadratic_text.empty()) {
        x = QuadraticNumber::parse(quadratic_text);
      } else if (!surd_text.empty() || measure_value.find('^') != std::string::npos) {
        x = Surd::parse(surd_text.empty() ? measure_value : surd_text);
      } else {
        x = Rational::parse(measure_value);
      }
      result.result = detail::measure_json(x, scale);
    } else if (mt_cmd->parsed()) {
      result.result = detail::mt_json(Rational::parse(q_text), t_or("inf"), scale);
    } else if (mt_surd_cmd->parsed()) {
      result.result =
          detail::mt_surd_json(SquarefreeD(arith::parse_natural(d_text)), k, t_or("inf"), scale);
    } else if (attain_cmd->parsed()) {
      const SquarefreeD d(arith::parse_natural(d_text));
      result.result = io::to_json(quadfield::attainment_in_Q_sqrtD(d, t_or("inf")), scale);
    } else if (certify_cmd->parsed()) {
      const SquarefreeD d(arith::parse_natural(d_text));
      const TParam t = t_or("inf");
      Json r;
      r["D"] = d.value().str();
      r["primes"] = io::strings(d.primes());
      r["t"] = io::t_json(t);
      r["certificate"] = io::to_json(quadfield::certify_non_attainment(d, t));
      result.result = std::move(r);
    } else if (small_cmd->parsed()) {
      const SquarefreeD d(arith::parse_natural(d_text));
      const Natural p = p_text.empty() ? d.largest_prime() : arith::parse_natural(p_text);
      Json r;
      r["D"] = d.value().str();
      r["p"] = p.str();
      r["certificate"] = io::to_json(quadfield::enumerate_small_quadratics_certificate(d, p));
      result.result = std::move(r);
    } else if (plot_cmd->parsed()) {
      PlotTarget target = Rational(1);
      if (!plot_surd.empty()) {
        const auto kk = arith::parse_natural(plot_surd[1]);
        if (kk < 1 || kk > 1000) throw Error(ErrorCode::kInvalidArgument, "k must be in [1, 1000]");
        target = std::pair{SquarefreeD(arith::parse_natural(plot_surd[0])), kk.convert_to<unsigned>()};
      } else if (!q_text.empty()) {
        target = Rational::parse(q_text);
      } else {
        throw CLI::ValidationError("plot", "give --q or --surd");
      }
      result.raw = plot_data(target, t_min, t_max, step, with_inf, scale);
    } else if (oracle_cmd->parsed()) {
      if (q_text.empty() == (sweep == 0)) {
        throw CLI::ValidationError("oracle-check", "give either q or --sweep N");
      }
      ratopt::OracleOptions options;
      for (const auto& p : extra_primes) options.extraneous_primes.push_back(arith::parse_natural(p));
      const auto ts = t_text.empty() ? detail::sweep_ts() : std::vector<TParam>{TParam::parse(t_text)};
      detail::OracleTally tally;
      if (sweep > 0) {
        for (long long m = 1; m <= sweep; ++m) {
          for (long long n = 1; m * n <= sweep; ++n) {
            if (std::gcd(m, n) != 1) continue;
            for (const auto& t : ts) tally.compare(Rational(m, n), t, options);
          }
        }
      } else {
        for (const auto& t : ts) tally.compare(Rational::parse(q_text), t, options);
      }
      Json r;
      r["checked"] = tally.checked;
      r["max_abs_diff"] = io::round15(tally.max_abs_diff);
      r["agree"] = tally.mismatches.empty();
      r["mismatches"] = std::move(tally.mismatches);
      result.exit_code = r["agree"].get<bool>() ? kExitOk : kExitDomain;
      result.result = std::move(r);
    } else if (verify_cmd->parsed()) {
      Json checks = Json::array();
      std::size_t failed = 0;
      for (const auto& c : run_worked_examples()) {
        failed += c.pass ? 0 : 1;
        checks.push_back(
            {{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
      }
      Json r;
      r["passed"] = checks.size() - failed;
      r["failed"] = failed;
      r["checks"] = std::move(checks);
      result.exit_code = failed == 0 ? kExitOk : kExitDomain;
      result.result = std::move(r);
    }
  } catch (const CLI::ParseError& e) {
    envelope["error"] = {{"code", "UsageError"}, {"message", e.what()}};
    out << envelope.dump(2) << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    envelope["error"] = {{"code", std::string(e.code_name())}, {"message", e.what()}};
    out << envelope.dump(2) << '\n';
    return kExitDomain;
  }

  if (result.raw) {
    out << *result.raw;
    return result.exit_code;
  }
  envelope["result"] = std::move(result.result);
  if (timing) {
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - started;
    envelope["timing_ms"] = io::round15(elapsed.count());
  }
  out << envelope.dump(2) << '\n';
  return result.exit_code;
}

}  // namespace mahler::cli
