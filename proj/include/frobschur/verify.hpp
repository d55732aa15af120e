#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frobschur/determinant.hpp"
#include "frobschur/multiparameter.hpp"
#include "frobschur/params.hpp"
#include "frobschur/partition.hpp"
#include "frobschur/ribbon.hpp"
#include "frobschur/sergeev_pragacz.hpp"
#include "frobschur/skew.hpp"
#include "frobschur/symfunc.hpp"
#include "frobschur/tableaux.hpp"

namespace frobschur {

/// Presets used by the verification suites.
namespace presets {

/// a_i = (i^3 + 2i)/5 + 1/7 on [-20, 20]: strictly increasing, so the
/// interpolation nodes are distinct.
inline ParamSequence custom() {
  std::vector<Rational> v;
  for (long i = -20; i <= 20; ++i) v.push_back(frac(i * i * i + 2 * i, 5) + frac(1, 7));
  return ParamSequence::custom_range(-20, v);
}

/// A second, unrelated window: a_i = (2i^2 - 3i)/4 - 2/3 on [-20, 20].
inline ParamSequence custom_alt() {
  std::vector<Rational> v;
  for (long i = -20; i <= 20; ++i) v.push_back(frac(2 * i * i - 3 * i, 4) - frac(2, 3));
  return ParamSequence::custom_range(-20, v);
}

inline std::vector<std::pair<std::string, ParamSequence>> standard() {
  return {{"zero", ParamSequence::zero()}, {"special", ParamSequence::special()}, {"custom", custom()}};
}

}  // namespace presets

struct SuiteResult {
  std::string name;
  std::string description;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> messages;  // first few failures
  double seconds = 0;

  bool passed() const { return failures == 0 && checks > 0; }

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (messages.size() < 5) messages.push_back(what());
  }
};

namespace detail {

inline std::vector<Partition> nonempty(int n) {
  auto all = partitions_up_to(n);
  all.erase(all.begin());
  return all;
}

inline SymFunc random_symfunc(std::mt19937& rng, int max_degree, int terms) {
  auto pool = partitions_up_to(max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  SymFunc::Terms t;
  for (int k = 0; k < terms; ++k) t[pool[pick(rng)]] += frac(num(rng), den(rng));
  return SymFunc(Basis::schur, std::move(t));
}

/// n pairwise distinct values drawn from small rationals.
inline std::vector<Rational> distinct_rationals(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < n) {
    Rational r = frac(num(rng), den(rng));
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

inline std::string str(const Partition& p) { return "(" + to_string(p) + ")"; }

}  // namespace detail

/// Registry of identity suites; `max_size` bounds every partition size.
inline std::vector<std::string> suite_names() {
  return {"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9", "t10", "t11", "t12", "t13", "t14", "t15", "t16", "props"};
}

inline SuiteResult run_suite(const std::string& name, int max_size) {
  using detail::nonempty;
  using detail::str;
  SuiteResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  const ParamSequence special = ParamSequence::special();

  if (name == "t1") {
    r.description = "p# top term and character ratio";
    for (int m = 1; m <= max_size; ++m)
      for (const auto& rho : partitions_of(m)) {
        SymFunc ps = p_sharp(rho);
        r.check(ps.top_component() == power_sum_product(rho), [&] { return "top term of p#" + str(rho); });
        for (int n = m; n <= max_size + 3; ++n)
          for (const auto& nu : partitions_of(n)) {
            auto rep = character_ratio_check(rho, nu, &ps);
            r.check(rep.equal(), [&] { return "ratio at rho=" + str(rho) + " nu=" + str(nu); });
          }
      }
  } else if (name == "t2") {
    r.description = "dim(mu,nu)/dim nu = FS_mu(x(nu);y(nu))/(n)_m";
    for (const auto& mu : partitions_up_to(max_size)) {
      SymFunc fs = frobenius_schur(mu);
      for (const auto& nu : partitions_up_to(max_size)) {
        if (nu.size() < mu.size()) continue;
        auto rep = dim_ratio_check(mu, nu, &fs);
        r.check(rep.equal(), [&] { return "ratio mu=" + str(mu) + " nu=" + str(nu); });
        r.check(dim_skew(mu, nu) == dim_skew_bruteforce(mu, nu), [&] { return "dim_skew mu=" + str(mu) + " nu=" + str(nu); });
      }
    }
  } else if (name == "t3") {
    r.description = "ribbon worked example (4,2,2)/(1,1)";
    const SkewShape nu = parse_skew("4,2,2/1,1");
    const std::string symbolic = "(u+v)(u-a_{-1})(u-a_{2})(u-a_{3})(v+a_{0})(v+a_{1})";
    std::mt19937 rng(3);
    for (int trial = 0; trial < 4; ++trial) {
      // trial 0 uses a_i = i, printed as (u+v)(u+1)(u-2)(u-3)(v+0)(v+1)
      std::vector<Rational> vals = trial == 0 ? std::vector<Rational>{-1, 0, 1, 2, 3} : detail::distinct_rationals(rng, 5);
      ParamSequence a = ParamSequence::custom_range(-1, vals);
      RibbonFactors f = ribbon_factors(nu, a);
      r.check(to_symbolic_string(f) == symbolic, [&] { return "symbolic " + to_symbolic_string(f); });
      BivariatePoly expected = BivariatePoly::linear(0, 1, 1) * BivariatePoly::linear(-a[-1], 1, 0) *
                               BivariatePoly::linear(-a[2], 1, 0) * BivariatePoly::linear(-a[3], 1, 0) *
                               BivariatePoly::linear(a[0], 0, 1) * BivariatePoly::linear(a[1], 0, 1);
      r.check(f.expand() == expected, [&] { return "numeric " + to_string(f); });
      if (trial == 0)
        r.check(to_string(f) == "(u+v)(u+1)(u-2)(u-3)(v+0)(v+1)", [&] { return "printed " + to_string(f); });
    }
  } else if (name == "t8") {
    r.description = "dependence on the parameter window";
    const ParamSequence base = presets::custom();
    for (const auto& mu : nonempty(max_size)) {
      SymFunc s = s_mp(mu, base);
      const long lo = 2 - mu.col(1), hi = mu.row(1) - 1;
      for (long i = -max_size - 2; i <= max_size + 2; ++i) {
        if (lo <= i && i <= hi) continue;
        std::map<long, Rational> vals;
        for (long k = base.window_lo(); k <= base.window_hi(); ++k) vals[k] = base[k];
        vals[i] += 17;
        r.check(s_mp(mu, ParamSequence::custom(vals)) == s, [&] { return str(mu) + " perturbed at " + std::to_string(i); });
      }
    }
  } else if (name == "props") {
    r.description = "zero specialization, order independence, top term, ribbon symmetry";
    for (const auto& mu : partitions_up_to(max_size)) {
      r.check(s_mp(mu, ParamSequence::zero()) == SymFunc::schur(mu), [&] { return "zero " + str(mu); });
      for (const auto& [label, a] : presets::standard()) {
        SymFunc s = s_mp(mu, a);
        r.check(s_mp(mu, a, static_cast<int>(mu.length()) + 2) == s, [&] { return "order " + label + " " + str(mu); });
        r.check(s.top_component() == SymFunc::schur(mu), [&] { return "top term " + label + " " + str(mu); });
      }
    }
    std::vector<Partition> box;
    for (const auto& p : partitions_up_to(16))
      if (p.length() <= 4 && p.row(1) <= 4) box.push_back(p);
    for (const auto& outer : box)
      for (const auto& inner : box) {
        if (outer == inner || !contains(inner, outer)) continue;
        SkewShape nu(outer, inner);
        auto dec = decompose_skew(nu);
        if (dec.has_2x2 || dec.components.size() != 1) continue;
        for (const auto& a : {ParamSequence::special(), presets::custom()})
          r.check(ribbon_poly(nu, a).swapped() == ribbon_poly(nu.conjugate(), a.dual()),
                  [&] { return "ribbon symmetry " + to_string(nu); });
      }
  } else if (name == "t4") {
    r.description = "omega duality and dual Jacobi-Trudi";
    for (const auto& [label, a] : presets::standard())
      for (const auto& mu : partitions_up_to(max_size)) {
        SymFunc s = s_mp(mu, a);
        r.check(omega(s) == s_mp(mu.conjugate(), a.dual()), [&] { return "omega " + label + " " + str(mu); });
        r.check(s == s_mp_dual(mu, a), [&] { return "dual JT " + label + " " + str(mu); });
      }
  } else if (name == "t5") {
    r.description = "Giambelli = Jacobi-Trudi";
    for (const auto& [label, a] : presets::standard())
      for (const auto& mu : partitions_up_to(max_size))
        r.check(giambelli(mu, a) == s_mp(mu, a), [&] { return "Giambelli " + label + " " + str(mu); });
  } else if (name == "t6") {
    r.description = "hook generating series = H(u)E(v)";
    for (const auto& [label, a] : presets::standard()) {
      auto rep = hook_series_check(max_size, a);
      r.check(rep.equal, [&] { return "series " + label + " order " + std::to_string(max_size); });
    }
  } else if (name == "t7") {
    r.description = "transition support and reconstruction";
    const std::vector<std::pair<ParamSequence, ParamSequence>> pairs{
        {special, ParamSequence::zero()}, {ParamSequence::zero(), special}, {presets::custom(), presets::custom_alt()}};
    for (const auto& [a, b] : pairs)
      for (const auto& mu : partitions_up_to(max_size)) {
        auto coeffs = transition_expand(mu, a, b);
        bool support = true;
        for (const auto& [nu, c] : coeffs) support = support && contains(nu, mu) && nu.depth() == mu.depth();
        r.check(support, [&] { return "support " + str(mu); });
        r.check(combine(coeffs, b) == s_mp(mu, a), [&] { return "reconstruction " + str(mu); });
      }
  } else if (name == "t9") {
    r.description = "FS_mu Schur expansion by determinant coefficients";
    r.check(transition_c(1, 0, special, ParamSequence::zero()) == Rational(-1, 2), [] { return "c_10"; });
    r.check(transition_c(2, 0, special, ParamSequence::zero()) == Rational(3, 4), [] { return "c_20"; });
    for (const auto& mu : partitions_up_to(max_size)) {
      SymFunc expansion(Basis::schur, transition_expand(mu, special, ParamSequence::zero()));
      r.check(expansion.to_schur().terms() == frobenius_schur(mu).to_schur().terms(), [&] { return "FS" + str(mu); });
    }
  } else if (name == "t10") {
    r.description = "vanishing off the containment order";
    for (const auto& [label, a] : {std::pair{std::string("special"), special}, std::pair{std::string("custom"), presets::custom()}}) {
      SchurMpTable table(a);
      for (const auto& mu : partitions_up_to(max_size))
        for (const auto& lambda : partitions_up_to(max_size)) {
          if (contains(mu, lambda)) continue;
          r.check(eval_at_diagram(table.get(mu), a, lambda) == 0,
                  [&] { return label + " mu=" + str(mu) + " lambda=" + str(lambda); });
        }
    }
  } else if (name == "t11") {
    r.description = "value at own node = product formula";
    for (const auto& [label, a] : presets::standard())
      for (const auto& mu : partitions_up_to(max_size))
        r.check(eval_at_diagram(mu, a, mu) == value_at_self(mu, a), [&] { return label + " " + str(mu); });
    for (const auto& mu : partitions_up_to(max_size)) {
      Integer hooks = 1;
      for (int i = 1; i <= static_cast<int>(mu.length()); ++i)
        for (int j = 1; j <= mu.row(i); ++j) hooks *= mu.hook_length(i, j);
      r.check(value_at_self(mu, special) == Rational(hooks), [&] { return "hook product " + str(mu); });
    }
  } else if (name == "t12") {
    r.description = "Newton interpolation round trip";
    std::mt19937 rng(12);
    for (int trial = 0; trial < 25; ++trial) {
      SymFunc f = detail::random_symfunc(rng, max_size, 6);
      for (const auto& [label, a] : {std::pair{std::string("special"), special}, std::pair{std::string("custom"), presets::custom()}}) {
        auto c = interpolate(f, a, max_size);
        r.check(combine(c, a) == f, [&] { return label + " round trip " + to_string(f); });
        InterpolationOptions rev;
        rev.reverse_within_degree = true;
        r.check(interpolate(f, a, max_size, rev) == c, [&] { return label + " order dependence " + to_string(f); });
      }
    }
    bool raised = false;
    try {
      interpolate(SymFunc::schur(Partition{1}), ParamSequence::zero(), 2);
    } catch (const DegenerateError&) {
      raised = true;
    }
    r.check(raised, [] { return "degenerate parameters accepted"; });
  } else if (name == "t13") {
    r.description = "characterization by vanishing and normalization";
    for (const auto& [label, a] : {std::pair{std::string("special"), special}, std::pair{std::string("custom"), presets::custom()}}) {
      for (const auto& mu : partitions_up_to(max_size)) {
        const int m = mu.size();
        auto nodes = partitions_up_to(m);
        std::vector<std::vector<Rational>> mat;
        std::vector<Rational> rhs;
        for (const auto& lambda : nodes) {
          EvalPoint pt = eval_point_of_diagram(lambda, a);
          std::vector<Rational> row;
          for (const auto& nu : nodes) row.push_back(eval_super(SymFunc::schur(nu), pt));
          mat.push_back(std::move(row));
          rhs.push_back(lambda == mu ? value_at_self(mu, a) : Rational(0));
        }
        auto sol = solve_linear(mat, rhs);
        SymFunc::Terms t;
        for (std::size_t k = 0; k < sol.size(); ++k) t[nodes[k]] = sol[k];
        SymFunc s = s_mp(mu, a);
        r.check(!sol.empty() && SymFunc(Basis::schur, t) == s, [&] { return label + " (i)+(ii) " + str(mu); });
        bool vanish = true;
        for (const auto& lambda : partitions_up_to(m - 1)) vanish = vanish && eval_at_diagram(s, a, lambda) == 0;
        r.check(vanish && s.top_component() == SymFunc::schur(mu), [&] { return label + " (i')+(ii') " + str(mu); });
      }
    }
  } else if (name == "t14") {
    r.description = "tableau formula = determinant";
    // every point for n <= 2, a fixed random sample for n = 3
    const std::vector<Rational> coords{1, -1, frac(1, 2), frac(-1, 2), 2, 3};
    std::mt19937 rng(14);
    std::uniform_int_distribution<std::size_t> pick(0, coords.size() - 1);
    for (const auto& [label, a] : presets::standard()) {
      SchurMpTable table(a);
      for (const auto& mu : partitions_up_to(max_size))
        for (int n = 1; n <= 3; ++n) {
          CombinatorialExpansion comb(mu, a, n);
          const SymFunc s = table.get(mu);
          auto test = [&](const EvalPoint& pt) {
            r.check(comb.evaluate(pt) == eval_super(s, pt), [&] { return label + " " + str(mu) + " n=" + std::to_string(n); });
          };
          if (n == 3) {
            for (int trial = 0; trial < 400; ++trial) {
              EvalPoint pt;
              for (int k = 0; k < n; ++k) {
                pt.x.push_back(coords[pick(rng)]);
                pt.y.push_back(coords[pick(rng)]);
              }
              test(pt);
            }
            continue;
          }
          std::vector<std::size_t> idx(2 * n, 0);
          while (true) {
            EvalPoint pt;
            for (int k = 0; k < n; ++k) {
              pt.x.push_back(coords[idx[k]]);
              pt.y.push_back(coords[idx[n + k]]);
            }
            test(pt);
            std::size_t k = 0;
            while (k < idx.size() && idx[k] + 1 == coords.size()) idx[k++] = 0;
            if (k == idx.size()) break;
            ++idx[k];
          }
        }
    }
  } else if (name == "t15" || name == "t16") {
    const bool factorized = name == "t16";
    r.description = factorized ? "factorized evaluation at d(mu) pairs" : "antisymmetrization evaluator";
    std::mt19937 rng(factorized ? 16 : 15);
    for (const auto& [label, a] : presets::standard()) {
      SchurMpTable table(a);
      for (const auto& mu : partitions_up_to(max_size))
        for (int n = 1; n <= 3; ++n) {
          if (factorized && n != mu.depth()) continue;
          for (int trial = 0; trial < 20; ++trial) {
            EvalPoint pt{detail::distinct_rationals(rng, n), detail::distinct_rationals(rng, n)};
            Rational expected = eval_super(table.get(mu), pt);
            Rational got = factorized ? factorized_eval(mu, a, pt) : sergeev_pragacz_eval(mu, a, pt);
            r.check(got == expected, [&] { return label + " " + str(mu) + " n=" + std::to_string(n); });
          }
        }
    }
  } else {
    throw DomainError("unknown verification suite '" + name + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Runs suites concurrently; results come back in the order requested.
inline std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, int max_size) {
  std::vector<std::future<SuiteResult>> pending;
  for (const auto& n : names) pending.push_back(std::async(std::launch::async, [n, max_size] { return run_suite(n, max_size); }));
  std::vector<SuiteResult> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace frobschur
