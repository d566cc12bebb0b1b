#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with in-memory streams.
//
//   zetaquad verify    --k K [--a A] [tolerances] [--format json|csv] [--output PATH]
//   zetaquad sweep     [--k-list K,K,..] [--a-list A,A,..] [--serial] [...]
//   zetaquad constants [--fd-step H] [...]
//   zetaquad zeta      --s S --q Q [--derivative] [--tolerance T]
//   zetaquad selftest  [--seed N]
//
// Exit codes: 0 all verdicts pass, 1 some verdict fails or is partial,
// 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "complexfn.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "identities.hpp"
#include "quad.hpp"
#include "report.hpp"
#include "selftest.hpp"

namespace zetaquad::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

namespace detail {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  double atol = 1e-6;
  double rtol = 1e-6;
  double quad_atol = 1e-10;
  double quad_rtol = 1e-10;
  std::size_t max_evals = 0;  // 0: default or ZETAQUAD_MAX_EVALS
  std::string format = "json";
  std::string output;

  void attach(CLI::App* sub) {
    sub->add_option("--atol", atol, "absolute residual tolerance")->capture_default_str();
    sub->add_option("--rtol", rtol, "relative residual tolerance")->capture_default_str();
    sub->add_option("--quad-atol", quad_atol, "quadrature absolute tolerance")->capture_default_str();
    sub->add_option("--quad-rtol", quad_rtol, "quadrature relative tolerance")->capture_default_str();
    sub->add_option("--max-evals", max_evals, "quadrature evaluation budget");
    sub->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--output", output, "write the report here instead of stdout");
  }

  QuadConfig quad() const {
    QuadConfig q;
    q.atol = quad_atol;
    q.rtol = quad_rtol;
    if (max_evals != 0) {
      q.max_evals = max_evals;
    } else if (const char* env = std::getenv("ZETAQUAD_MAX_EVALS"); env && *env) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (*end != '\0' || env[0] == '-') {
        throw UsageError("ZETAQUAD_MAX_EVALS is not a non-negative integer: " + std::string(env));
      }
      q.max_evals = static_cast<std::size_t>(v);
    }
    q.validate();
    return q;
  }

  Tolerance check() const {
    if (!(atol >= 0.0) || !(rtol >= 0.0)) throw UsageError("--atol and --rtol must be >= 0");
    return {atol, rtol};
  }
};

inline void emit(const std::string& text, const Common& opts, std::ostream& out) {
  if (opts.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + opts.output);
  file << text;
  if (!file) throw UsageError("failed writing output file: " + opts.output);
}

inline std::string render(const std::vector<VerificationReport>& reports,
                          const std::vector<std::string>& notes, const Common& opts) {
  if (opts.format == "csv") return to_csv(reports);
  return to_json(reports, notes) + "\n";
}

inline int summarize(const std::vector<VerificationReport>& reports, std::ostream& err) {
  int code = exit_pass;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::pass) continue;
    code = exit_fail;
    err << r.label << " k=" << format_complex(r.identity_case.k)
        << " a=" << format_constant(r.identity_case.a) << ": " << to_string(r.verdict) << "\n";
    for (const auto& res : r.residuals) {
      if (!res.ok()) {
        err << "  " << res.pair() << " residual " << format_real(res.value) << " > "
            << format_real(res.bound) << "\n";
      }
    }
    for (const auto& n : r.notes) err << "  note: " << n << "\n";
  }
  return code;
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    items.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of a log-tangent integral against Hurwitz zeta values",
               "zetaquad"};
  app.require_subcommand(1, 1);

  detail::Common verify_opts;
  std::string verify_k;
  std::string verify_a = "1";
  auto* verify_cmd = app.add_subcommand("verify", "check one (k, a) case by every applicable route");
  verify_cmd->add_option("--k", verify_k, "exponent k, e.g. -1 or 0.5+0.3i")->required();
  verify_cmd->add_option("--a", verify_a, "constant a, rectangular or polar r@theta")
      ->capture_default_str();
  verify_opts.attach(verify_cmd);

  detail::Common sweep_opts;
  std::string k_list;
  std::string a_list;
  bool serial = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "verify a grid of cases (default grid if no lists)");
  sweep_cmd->add_option("--k-list", k_list, "comma-separated k values");
  sweep_cmd->add_option("--a-list", a_list, "comma-separated a values");
  sweep_cmd->add_flag("--serial", serial, "run cases one at a time");
  sweep_opts.attach(sweep_cmd);

  detail::Common const_opts;
  double fd_step = 1e-4;
  auto* const_cmd = app.add_subcommand("constants", "Catalan and log-Gamma special cases");
  const_cmd->add_option("--fd-step", fd_step, "finite-difference step in k")->capture_default_str();
  const_opts.attach(const_cmd);

  std::string zs;
  std::string zq;
  bool derivative = false;
  double ztol = 1e-15;
  auto* zeta_cmd = app.add_subcommand("zeta", "evaluate the Hurwitz zeta function");
  zeta_cmd->add_option("--s", zs, "s")->required();
  zeta_cmd->add_option("--q", zq, "q")->required();
  zeta_cmd->add_flag("--derivative", derivative, "print d/ds instead");
  zeta_cmd->add_option("--tolerance", ztol, "relative tail tolerance")->capture_default_str();

  std::uint64_t seed = 20240611;
  auto* self_cmd = app.add_subcommand("selftest", "run the built-in invariant checks");
  self_cmd->add_option("--seed", seed, "generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "zetaquad: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (verify_cmd->parsed()) {
      IdentityCase c;
      c.k = parse_complex(verify_k);
      c.a = parse_constant(verify_a);
      c.quad = verify_opts.quad();
      c.check = verify_opts.check();
      if (auto why = case_violation(c)) throw detail::UsageError(*why);
      std::vector<VerificationReport> reports{verify(c)};
      const std::string text = verify_opts.format == "csv" ? to_csv(reports)
                                                           : to_json(reports.front()) + "\n";
      detail::emit(text, verify_opts, out);
      return detail::summarize(reports, err);
    }

    if (sweep_cmd->parsed()) {
      std::vector<Complex> ks = default_grid_k();
      std::vector<BranchedConstant> as = default_grid_a();
      if (!k_list.empty()) {
        ks.clear();
        for (const auto& t : detail::split_list(k_list)) ks.push_back(parse_complex(t));
      }
      if (!a_list.empty()) {
        as.clear();
        for (const auto& t : detail::split_list(a_list)) as.push_back(parse_constant(t));
      }
      SweepConfig cfg;
      cfg.quad = sweep_opts.quad();
      cfg.check = sweep_opts.check();
      cfg.parallel = !serial;
      const SweepResult res = sweep(ks, as, cfg);
      detail::emit(detail::render(res.reports, res.notes, sweep_opts), sweep_opts, out);
      for (const auto& n : res.notes) err << "note: " << n << "\n";
      if (res.reports.empty()) return exit_fail;
      return detail::summarize(res.reports, err);
    }

    if (const_cmd->parsed()) {
      const QuadConfig q = const_opts.quad();
      std::vector<VerificationReport> reports{catalan_case(q), loggamma_case(q, fd_step)};
      detail::emit(detail::render(reports, {}, const_opts), const_opts, out);
      return detail::summarize(reports, err);
    }

    if (zeta_cmd->parsed()) {
      ZetaConfig cfg;
      cfg.tolerance = ztol;
      const Complex s = parse_complex(zs);
      const Complex q = parse_complex(zq);
      const Complex v = derivative ? hurwitz_zeta_ds(s, q, cfg) : hurwitz_zeta(s, q, cfg);
      out << format_complex(v) << "\n";
      return exit_pass;
    }

    if (self_cmd->parsed()) {
      const auto checks = run_selftest(seed);
      std::ostringstream os;
      JsonWriter w(os);
      w.begin_object().key("checks").begin_array();
      int code = exit_pass;
      for (const auto& c : checks) {
        w.begin_object();
        w.key("name").value(c.name);
        w.key("worst").value(c.worst);
        w.key("limit").value(c.limit);
        w.key("passed").value(c.passed);
        w.end_object();
        if (!c.passed) {
          code = exit_fail;
          err << "selftest failed: " << c.name << " worst " << format_real(c.worst) << " > "
              << format_real(c.limit) << "\n";
        }
      }
      w.end_array().end_object();
      out << os.str() << "\n";
      return code;
    }
  } catch (const ConvergenceError& e) {
    err << "zetaquad: " << e.what() << "\n";
    return exit_fail;
  } catch (const std::invalid_argument& e) {  // ParseError, UsageError, bad configs
    err << "zetaquad: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {  // pole or excluded argument
    err << "zetaquad: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "zetaquad: " << e.what() << "\n";
    return exit_fail;
  }
  return exit_usage;
}

}  // namespace zetaquad::cli
