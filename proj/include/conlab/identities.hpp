#ifndef CONLAB_IDENTITIES_HPP
#define CONLAB_IDENTITIES_HPP

#include <chrono>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "conlab/gf_identities.hpp"
#include "conlab/reductions.hpp"

namespace conlab {

struct IdentityReport {
  std::string id;
  std::vector<std::pair<std::string, long>> params;  // resolved dial values
  long checked = 0;
  std::vector<std::string> failures;
  double elapsed_seconds = 0.0;  // wall clock; excluded from serialized data
};

// An exact equality swept over a small grid. Dials are scalar values; a
// default of -1 means "sweep the built-in range" where that applies.
struct IdentityCheck {
  std::string id;
  std::string summary;
  std::vector<std::pair<std::string, long>> defaults;
  std::function<IdentityReport(const std::map<std::string, long>&)> run;
};

namespace detail {

inline std::string mismatch_line(const std::string& where, const BigRat& lhs, const BigRat& rhs) {
  return where + ": lhs=" + to_decimal(lhs) + " rhs=" + to_decimal(rhs);
}

inline std::string mismatch_line(const std::string& where, const BigInt& lhs, const BigInt& rhs) {
  return where + ": lhs=" + to_decimal(lhs) + " rhs=" + to_decimal(rhs);
}

template <typename Body>
inline IdentityReport timed_identity(const std::string& id,
                                     const std::vector<std::pair<std::string, long>>& defaults,
                                     const std::map<std::string, long>& overrides, Body body) {
  std::map<std::string, long> params;
  for (const auto& [name, value] : defaults) params[name] = value;
  for (const auto& [name, value] : overrides) {
    auto it = params.find(name);
    if (it == params.end())
      throw std::invalid_argument("unknown parameter '" + name + "' for identity " + id);
    it->second = value;
  }
  auto started = std::chrono::steady_clock::now();
  IdentityReport report;
  report.id = id;
  for (const auto& [name, value] : defaults) report.params.emplace_back(name, params.at(name));
  body(params, report);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// Enumerate (n_1, ..., n_m) over [1, n_max]^m for m in [3, m_max], calling
// fn on each chain.
template <typename Fn>
inline void for_each_chain(long m_max, long n_max, Fn fn) {
  for (long m = 3; m <= m_max; ++m) {
    std::vector<long> ns(static_cast<size_t>(m), 1);
    while (true) {
      fn(ns);
      size_t i = ns.size();
      while (i > 0 && ns[i - 1] == n_max) ns[--i] = 1;
      if (i == 0) break;
      ++ns[i - 1];
    }
  }
}

inline std::string chain_label(const std::vector<long>& ns) {
  std::string s = "ns=(";
  for (size_t i = 0; i < ns.size(); ++i) s += (i ? "," : "") + std::to_string(ns[i]);
  return s + ")";
}

}  // namespace detail

// Exact identities checked coefficientwise or pointwise; unlike registry
// claims these are equalities, so any failure is an implementation or
// transcription bug, never a finding.
inline const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> checks = [] {
    std::vector<IdentityCheck> reg;

    {
      IdentityCheck c;
      c.id = "delta";
      c.summary =
          "Closed form for sum C(m+n+alpha,m) C(m+n+beta,n) x^m y^n as "
          "2^(alpha+beta) / (D (1-x+y+D)^alpha (1+x-y+D)^beta) with D the square root of "
          "1-2x-2y-2xy+x^2+y^2, checked to the given total degree";
      c.defaults = {{"alpha", -1}, {"beta", -1}, {"degree", 12}};
      c.run = [id = c.id, defaults = c.defaults](const std::map<std::string, long>& overrides) {
        return detail::timed_identity(
            id, defaults, overrides,
            [&](const std::map<std::string, long>& params, IdentityReport& report) {
          long a_lo = params.at("alpha") >= 0 ? params.at("alpha") : 0;
          long a_hi = params.at("alpha") >= 0 ? params.at("alpha") : 3;
          long b_lo = params.at("beta") >= 0 ? params.at("beta") : 0;
          long b_hi = params.at("beta") >= 0 ? params.at("beta") : 3;
          int degree = static_cast<int>(params.at("degree"));
          for (long alpha = a_lo; alpha <= a_hi; ++alpha)
            for (long beta = b_lo; beta <= b_hi; ++beta) {
              ++report.checked;
              auto miss = delta_gf_find_mismatch(alpha, beta, degree);
              if (miss)
                report.failures.push_back(detail::mismatch_line(
                    "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta) + " x^" +
                        std::to_string(miss->m) + " y^" + std::to_string(miss->n),
                    miss->lhs, miss->rhs));
            }
        });
      };
      reg.push_back(std::move(c));
    }

    {
      IdentityCheck c;
      c.id = "gf-two-var-alt";
      c.summary =
          "The alternating (2k+1)-weighted two-variable sums assemble into the power series "
          "1 / (1-x-y)^2, checked coefficientwise to the given total degree";
      c.defaults = {{"degree", 12}};
      c.run = [id = c.id, defaults = c.defaults](const std::map<std::string, long>& overrides) {
        return detail::timed_identity(
            id, defaults, overrides,
            [&](const std::map<std::string, long>& params, IdentityReport& report) {
          report.checked = 1;
          auto miss = gf_remark_find_mismatch(static_cast<int>(params.at("degree")));
          if (miss)
            report.failures.push_back(detail::mismatch_line(
                "x^" + std::to_string(miss->m) + " y^" + std::to_string(miss->n), miss->lhs,
                miss->rhs));
        });
      };
      reg.push_back(std::move(c));
    }

    {
      IdentityCheck c;
      c.id = "lemma-3.1";
      c.summary =
          "Two-variable (2k+1)-weighted sums in closed form: the plus sign gives "
          "(n1+n2+1) C(n1+n2,n1)^2 and the alternating sign gives (n1+n2+1) C(n1+n2,n1)";
      c.defaults = {{"n_max", 30}};
      c.run = [id = c.id, defaults = c.defaults](const std::map<std::string, long>& overrides) {
        return detail::timed_identity(
            id, defaults, overrides,
            [&](const std::map<std::string, long>& params, IdentityReport& report) {
          long n_max = params.at("n_max");
          for (long n1 = 0; n1 <= n_max; ++n1)
            for (long n2 = 0; n2 <= n_max; ++n2) {
              BigInt c2 = binomial(n1 + n2, n1);
              BigInt plus_rhs = BigInt(n1 + n2 + 1) * c2 * c2;
              BigInt alt_rhs = BigInt(n1 + n2 + 1) * c2;
              BigInt plus_lhs = two_var_direct(0, n1, n2, Sign::plus);
              BigInt alt_lhs = two_var_direct(0, n1, n2, Sign::alternating);
              report.checked += 2;
              std::string at = "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
              if (plus_lhs != plus_rhs)
                report.failures.push_back(detail::mismatch_line(at + " plus", plus_lhs, plus_rhs));
              if (alt_lhs != alt_rhs)
                report.failures.push_back(detail::mismatch_line(at + " alternating", alt_lhs, alt_rhs));
            }
        });
      };
      reg.push_back(std::move(c));
    }

    {
      IdentityCheck c;
      c.id = "m3-closed";
      c.summary =
          "Three-entry alternating cyclic sums in closed form: (2k+1) weight gives "
          "(n1+n2+n3+1)!/(n1! n2! n3!) and the k(k+1)(2k+1) weight with sign (-1)^(k+1) gives "
          "(n1+n2+n3)!/((n1-1)! (n2-1)! (n3-1)!)";
      c.defaults = {{"n_max", 10}};
      c.run = [id = c.id, defaults = c.defaults](const std::map<std::string, long>& overrides) {
        return detail::timed_identity(
            id, defaults, overrides,
            [&](const std::map<std::string, long>& params, IdentityReport& report) {
          long n_max = params.at("n_max");
          for (long n1 = 1; n1 <= n_max; ++n1)
            for (long n2 = 1; n2 <= n_max; ++n2)
              for (long n3 = 1; n3 <= n_max; ++n3) {
                std::vector<long> ns = {n1, n2, n3};
                BigInt lhs0 = chain_sum({ns, 0, Sign::alternating, Weight::odd_power, Closure::cyclic});
                BigInt rhs0 = m3_closed(n1, n2, n3, M3Variant::r0_alt);
                BigInt lhs1 = -chain_sum({ns, 1, Sign::alternating, Weight::kk1, Closure::cyclic});
                BigInt rhs1 = m3_closed(n1, n2, n3, M3Variant::kk1_alt);
                report.checked += 2;
                std::string at = detail::chain_label(ns);
                if (lhs0 != rhs0) report.failures.push_back(detail::mismatch_line(at + " (2k+1)", lhs0, rhs0));
                if (lhs1 != rhs1)
                  report.failures.push_back(detail::mismatch_line(at + " k(k+1)(2k+1)", lhs1, rhs1));
              }
        });
      };
      reg.push_back(std::move(c));
    }

    {
      IdentityCheck c;
      c.id = "lambda-plus";
      c.summary =
          "Cyclic plus-sign chain sums factor through staircase sums: the (2k+1) and "
          "k(k+1)(2k+1) weights equal their prefactor times the matching nonincreasing-chain sum";
      c.defaults = {{"m_max", 5}, {"n_max", 6}};
      c.run = [id = c.id, defaults = c.defaults](const std::map<std::string, long>& overrides) {
        return detail::timed_identity(
            id, defaults, overrides,
            [&](const std::map<std::string, long>& params, IdentityReport& report) {
          detail::for_each_chain(params.at("m_max"), params.at("n_max"), [&](const std::vector<long>& ns) {
            BigInt lhs0 = chain_sum({ns, 0, Sign::plus, Weight::odd_power, Closure::cyclic});
            BigInt rhs0 = lambda_prefactor(ns, LambdaVariant::plus_r0) * lambda_sum(ns, LambdaVariant::plus_r0);
            BigInt lhs1 = chain_sum({ns, 1, Sign::plus, Weight::kk1, Closure::cyclic});
            BigInt rhs1 = lambda_prefactor(ns, LambdaVariant::plus_r1) * lambda_sum(ns, LambdaVariant::plus_r1);
            report.checked += 2;
            std::string at = detail::chain_label(ns);
            if (lhs0 != rhs0) report.failures.push_back(detail::mismatch_line(at + " (2k+1)", lhs0, rhs0));
            if (lhs1 != rhs1)
              report.failures.push_back(detail::mismatch_line(at + " k(k+1)(2k+1)", lhs1, rhs1));
          });
        });
      };
      reg.push_back(std::move(c));
    }

    {
      IdentityCheck c;
      c.id = "lambda-alt";
      c.summary =
          "Cyclic alternating chain sums factor through staircase sums, showing the alternating "
          "sums are positive; signs (-1)^k for the (2k+1) weight and (-1)^(k+1) for k(k+1)(2k+1)";
      c.defaults = {{"m_max", 5}, {"n_max", 6}};
      c.run = [id = c.id, defaults = c.defaults](const std::map<std::string, long>& overrides) {
        return detail::timed_identity(
            id, defaults, overrides,
            [&](const std::map<std::string, long>& params, IdentityReport& report) {
          detail::for_each_chain(params.at("m_max"), params.at("n_max"), [&](const std::vector<long>& ns) {
            BigInt lhs0 = chain_sum({ns, 0, Sign::alternating, Weight::odd_power, Closure::cyclic});
            BigInt rhs0 = lambda_prefactor(ns, LambdaVariant::alt_r0) * lambda_sum(ns, LambdaVariant::alt_r0);
            BigInt lhs1 = -chain_sum({ns, 1, Sign::alternating, Weight::kk1, Closure::cyclic});
            BigInt rhs1 = lambda_prefactor(ns, LambdaVariant::alt_r1) * lambda_sum(ns, LambdaVariant::alt_r1);
            report.checked += 2;
            std::string at = detail::chain_label(ns);
            if (lhs0 != rhs0) report.failures.push_back(detail::mismatch_line(at + " (2k+1)", lhs0, rhs0));
            if (lhs1 != rhs1)
              report.failures.push_back(detail::mismatch_line(at + " k(k+1)(2k+1)", lhs1, rhs1));
          });
        });
      };
      reg.push_back(std::move(c));
    }

    return reg;
  }();
  return checks;
}

inline const IdentityCheck* find_identity(const std::string& id) {
  for (const IdentityCheck& c : identity_registry())
    if (c.id == id) return &c;
  return nullptr;
}

inline std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const IdentityCheck& c : identity_registry()) ids.push_back(c.id);
  return ids;
}

}  // namespace conlab

#endif  // CONLAB_IDENTITIES_HPP
