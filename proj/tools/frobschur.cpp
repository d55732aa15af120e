// frobschur: command-line front end for the multiparameter Schur library.
//
// Exit codes: 0 success, 1 a check or method comparison failed,
// 2 usage / parse / domain error, 3 data error (parameter window exhausted
// or degenerate input), 4 anything unexpected.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frobschur/io.hpp"
#include "frobschur/multiparameter.hpp"
#include "frobschur/ribbon.hpp"
#include "frobschur/sergeev_pragacz.hpp"
#include "frobschur/tableaux.hpp"
#include "frobschur/verify.hpp"

namespace fs = frobschur;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, data = 3, internal = 4 };

struct Globals {
  bool json = false;
  bool permissive = false;
  fs::WindowPolicy policy() const { return permissive ? fs::WindowPolicy::permissive : fs::WindowPolicy::strict; }
};

// Permissive reads outside a custom window are allowed but not silent.
void warn_window(const fs::ParamSequence& a, const std::string& label = "parameters") {
  if (a.window_exceeded())
    std::cerr << "warning: " << label << " read outside the custom window; missing values taken as 0\n";
}

std::string coeff_table(const std::map<fs::Partition, fs::Rational>& coeffs, const std::string& letter) {
  auto terms = fs::detail::graded_terms(coeffs);
  if (terms.empty()) return "0";
  std::size_t width = 0;
  for (const auto& [mu, c] : terms) width = std::max(width, fs::to_string(mu).size() + letter.size() + 2);
  std::ostringstream out;
  for (const auto& [mu, c] : terms)
    out << std::left << std::setw(static_cast<int>(width) + 2) << (letter + "[" + fs::to_string(mu) + "]") << fs::to_string(c)
        << "\n";
  std::string s = out.str();
  s.pop_back();
  return s;
}

std::string tableau_text(const fs::DiagonalStrictTableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) out += " / ";
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) out += (j ? " " : "") + std::to_string(t.rows[i][j]);
  }
  return out.empty() ? "()" : out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fs::ParseError("cannot read input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiparameter Schur and Frobenius-Schur functions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "read options from a TOML/INI file");
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--permissive", g.permissive, "read outside custom windows as 0 (with a warning)");

  std::string mu_text, nu_text, params_text = "special", from_text, to_text, shape_text, x_text, y_text, input_path;
  std::string basis = "schur", method = "jt", suite = "all";
  int max_entry = 0, degree = 0, max_size = 5;
  bool ratio = false, symbolic = false, expanded = false;

  auto* expand = app.add_subcommand("expand", "Schur expansion of s_{mu;a}");
  expand->add_option("--mu", mu_text, "partition, e.g. 2,1")->required();
  expand->add_option("--params", params_text, "zero | special | custom:i=v,...")->capture_default_str();
  expand->add_option("--basis", basis, "schur or h")->check(CLI::IsMember({"schur", "h"}))->capture_default_str();

  auto* eval = app.add_subcommand("eval", "evaluate s_{mu;a}(x; y)");
  eval->add_option("--mu", mu_text)->required();
  eval->add_option("--params", params_text)->capture_default_str();
  eval->add_option("--x", x_text, "comma-separated rationals")->required();
  eval->add_option("--y", y_text, "comma-separated rationals")->required();
  eval->add_option("--method", method, "jt | comb | sp | fact | all")
      ->check(CLI::IsMember({"jt", "comb", "sp", "fact", "all"}))
      ->capture_default_str();

  auto* dim = app.add_subcommand("dim", "dim nu, dim(mu, nu) or the dimension ratio");
  dim->add_option("--mu", mu_text);
  dim->add_option("--nu", nu_text)->required();
  dim->add_flag("--ratio", ratio, "print dim(mu,nu)/dim nu = FS_mu(x(nu);y(nu))/(n)_m");

  auto* tableaux = app.add_subcommand("tableaux", "diagonal-strict tableaux");
  tableaux->add_option("--mu", mu_text)->required();
  tableaux->add_option("--max-entry", max_entry)->required()->check(CLI::Range(0, 64));

  auto* ribbon = app.add_subcommand("ribbon", "ribbon polynomial f_{nu;a}(u, v)");
  ribbon->add_option("--shape", shape_text, "outer/inner")->required();
  ribbon->add_option("--params", params_text)->capture_default_str();
  ribbon->add_flag("--symbolic", symbolic, "print parameters as a_{k}");
  ribbon->add_flag("--expand", expanded, "print the expanded polynomial");

  auto* transition = app.add_subcommand("transition", "expand s_{mu;a} over s_{nu;b}");
  transition->add_option("--mu", mu_text)->required();
  transition->add_option("--from", from_text)->required();
  transition->add_option("--to", to_text)->required();

  auto* interp = app.add_subcommand("interpolate", "coefficients of f over s_{lambda;a}");
  interp->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
  interp->add_option("--params", params_text)->capture_default_str();
  interp->add_option("--input", input_path, "file with s[..] text or JSON terms")->required();

  auto* verify = app.add_subcommand("verify", "run identity suites");
  std::string suites_help = "all";
  for (const auto& n : fs::suite_names()) suites_help += " | " + n;
  verify->add_option("--suite", suite, suites_help)->capture_default_str();
  verify->add_option("--max-size", max_size)->check(CLI::Range(0, 12))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*expand) {
      auto mu = fs::parse_partition(mu_text);
      auto a = fs::parse_params(params_text, g.policy());
      auto f = fs::s_mp(mu, a);
      warn_window(a);
      if (basis == "h") {
        auto terms = fs::ordered_h_terms(f);
        if (g.json) {
          std::map<fs::Partition, fs::Rational> m(terms.begin(), terms.end());
          std::cout << fs::coefficients_to_json(m).dump() << "\n";
        } else {
          std::cout << fs::format_terms(terms, "h") << "\n";
        }
      } else {
        std::cout << (g.json ? fs::to_json(f).dump() : fs::to_string(f)) << "\n";
      }
      return ok;
    }

    if (*eval) {
      auto mu = fs::parse_partition(mu_text);
      auto a = fs::parse_params(params_text, g.policy());
      fs::EvalPoint pt{fs::parse_rational_list(x_text), fs::parse_rational_list(y_text)};
      auto run = [&](const std::string& m) -> fs::Rational {
        if (m == "jt") return fs::eval_super(fs::s_mp(mu, a), pt);
        if (m == "comb") return fs::combinatorial_eval(mu, a, pt);
        if (m == "sp") return fs::sergeev_pragacz_eval(mu, a, pt);
        return fs::factorized_eval(mu, a, pt);
      };
      if (method != "all") {
        auto v = run(method);
        warn_window(a);
        if (g.json)
          std::cout << fs::json{{"method", method}, {"value", fs::to_string(v)}}.dump() << "\n";
        else
          std::cout << fs::to_string(v) << "\n";
        return ok;
      }
      // every method that applies to this point
      std::vector<std::pair<std::string, fs::Rational>> values;
      for (const std::string m : {"jt", "comb", "sp", "fact"}) {
        try {
          values.emplace_back(m, run(m));
        } catch (const fs::DomainError&) {
        } catch (const fs::DegenerateError&) {
        }
      }
      warn_window(a);
      bool agree = true;
      for (const auto& [m, v] : values) agree = agree && v == values.front().second;
      if (g.json) {
        fs::json j = fs::json::object();
        for (const auto& [m, v] : values) j[m] = fs::to_string(v);
        std::cout << fs::json{{"values", j}, {"agree", agree}}.dump() << "\n";
      } else {
        for (const auto& [m, v] : values) std::cout << std::left << std::setw(6) << m << fs::to_string(v) << "\n";
      }
      return agree ? ok : check_failed;
    }

    if (*dim) {
      auto nu = fs::parse_partition(nu_text);
      if (ratio) {
        if (mu_text.empty()) throw fs::ParseError("--ratio needs --mu");
        auto rep = fs::dim_ratio_check(fs::parse_partition(mu_text), nu);
        if (g.json)
          std::cout << fs::json{{"lhs", fs::to_string(rep.lhs)}, {"rhs", fs::to_string(rep.rhs)}, {"equal", rep.equal()}}.dump()
                    << "\n";
        else
          std::cout << fs::to_string(rep.lhs) << (rep.equal() ? " = " : " != ") << fs::to_string(rep.rhs) << "\n";
        return rep.equal() ? ok : check_failed;
      }
      fs::Integer d = mu_text.empty() ? fs::dim_straight(nu) : fs::dim_skew(fs::parse_partition(mu_text), nu);
      std::cout << (g.json ? fs::json{{"dim", fs::to_string(d)}}.dump() : fs::to_string(d)) << "\n";
      return ok;
    }

    if (*tableaux) {
      auto mu = fs::parse_partition(mu_text);
      long count = 0;
      fs::for_each_diagonal_strict(mu, max_entry, [&](const fs::DiagonalStrictTableau& t) {
        ++count;
        if (g.json)
          std::cout << fs::json{{"rows", t.rows}}.dump() << "\n";
        else
          std::cout << tableau_text(t) << "\n";
      });
      if (!g.json) std::cerr << count << " tableaux\n";
      return ok;
    }

    if (*ribbon) {
      auto nu = fs::parse_skew(shape_text);
      auto a = fs::parse_params(params_text, g.policy());
      auto f = fs::ribbon_factors(nu, a);
      warn_window(a);
      if (g.json)
        std::cout << fs::to_json(f.expand()).dump() << "\n";
      else if (symbolic)
        std::cout << fs::to_symbolic_string(f) << "\n";
      else if (expanded)
        std::cout << fs::to_string(f.expand()) << "\n";
      else
        std::cout << fs::to_string(f) << "\n";
      return ok;
    }

    if (*transition) {
      auto mu = fs::parse_partition(mu_text);
      auto a = fs::parse_params(from_text, g.policy());
      auto b = fs::parse_params(to_text, g.policy());
      auto c = fs::transition_expand(mu, a, b);
      warn_window(a, "--from");
      warn_window(b, "--to");
      std::cout << (g.json ? fs::coefficients_to_json(c).dump() : coeff_table(c, "s")) << "\n";
      return ok;
    }

    if (*interp) {
      auto a = fs::parse_params(params_text, g.policy());
      auto f = fs::parse_symfunc_any(read_file(input_path));
      fs::InterpolationOptions opts;
      opts.node_policy = g.policy();
      auto c = fs::interpolate(f, a, degree, opts);
      warn_window(a);
      std::cout << (g.json ? fs::coefficients_to_json(c).dump() : coeff_table(c, "s")) << "\n";
      return ok;
    }

    if (*verify) {
      std::vector<std::string> names;
      if (suite == "all") {
        names = fs::suite_names();
      } else {
        auto known = fs::suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
          throw fs::ParseError("unknown suite '" + suite + "'");
        names = {suite};
      }
      auto results = fs::run_suites(names, max_size);
      bool all_ok = true;
      fs::json j = fs::json::array();
      for (const auto& r : results) {
        all_ok = all_ok && r.passed();
        j.push_back({{"suite", r.name},
                     {"description", r.description},
                     {"checks", r.checks},
                     {"failures", r.failures},
                     {"seconds", r.seconds},
                     {"passed", r.passed()},
                     {"messages", r.messages}});
      }
      if (g.json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << std::left << std::setw(7) << "suite" << std::setw(6) << "status" << std::right << std::setw(8) << "checks"
                  << std::setw(9) << "failures" << std::setw(10) << "seconds" << "  description\n";
        for (const auto& r : results) {
          std::ostringstream secs;
          secs << std::fixed << std::setprecision(3) << r.seconds;
          std::cout << std::left << std::setw(7) << r.name << std::setw(6) << (r.passed() ? "PASS" : "FAIL") << std::right
                    << std::setw(8) << r.checks << std::setw(9) << r.failures << std::setw(10) << secs.str() << "  "
                    << r.description << "\n";
          for (const auto& m : r.messages) std::cout << "         " << m << "\n";
        }
      }
      return all_ok ? ok : check_failed;
    }
  } catch (const fs::WindowExceeded& e) {
    std::cerr << "data error: " << e.what() << " (widen the custom window or pass --permissive)\n";
    return data;
  } catch (const fs::DegenerateError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return data;
  } catch (const fs::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const fs::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}
