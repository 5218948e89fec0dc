#ifndef CONLAB_CLAIM_REGISTRY_HPP
#define CONLAB_CLAIM_REGISTRY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "conlab/ballot_sums.hpp"
#include "conlab/chains.hpp"
#include "conlab/claims.hpp"
#include "conlab/combinatorics.hpp"
#include "conlab/primality.hpp"
#include "conlab/recurrences.hpp"
#include "conlab/searches.hpp"

namespace conlab {

namespace detail {

inline Sign sign_of(long eps) { return eps == 0 ? Sign::plus : Sign::alternating; }

// Enumerator over fixed named dials, last dial fastest.
inline std::function<void(const Bounds&, const PointFn&)> box_enumerator(
    std::vector<std::string> names, std::function<bool(const Point&)> admit = nullptr) {
  return [names = std::move(names), admit = std::move(admit)](const Bounds& bounds, const PointFn& fn) {
    std::vector<Range> dials;
    dials.reserve(names.size());
    for (const auto& name : names) dials.push_back(bounds.at(name));
    enumerate_box(dials, [&](const Point& p) {
      if (!admit || admit(p)) fn(p);
    });
  };
}

inline std::function<std::vector<std::pair<std::string, long>>(const Point&)> box_labels(
    std::vector<std::string> names) {
  return [names = std::move(names)](const Point& p) {
    std::vector<std::pair<std::string, long>> out;
    for (size_t i = 0; i < names.size(); ++i) out.emplace_back(names[i], p[i]);
    return out;
  };
}

// Enumerator for chain claims: point = [m, n_1..n_m, tail dials...], where
// every n_i ranges over the "n" dial and m over the "m" dial.
inline std::function<void(const Bounds&, const PointFn&)> chain_enumerator(std::vector<std::string> tail) {
  return [tail = std::move(tail)](const Bounds& bounds, const PointFn& fn) {
    Range m_range = bounds.at("m");
    Range n_range = bounds.at("n");
    for (long m = std::max(1L, m_range.lo); m <= m_range.hi; ++m) {
      std::vector<Range> dials(static_cast<size_t>(m), n_range);
      for (const auto& name : tail) dials.push_back(bounds.at(name));
      enumerate_box(dials, [&](const Point& inner) {
        Point p;
        p.reserve(inner.size() + 1);
        p.push_back(m);
        p.insert(p.end(), inner.begin(), inner.end());
        fn(p);
      });
    }
  };
}

inline std::function<std::vector<std::pair<std::string, long>>(const Point&)> chain_labels(
    std::vector<std::string> tail) {
  return [tail = std::move(tail)](const Point& p) {
    std::vector<std::pair<std::string, long>> out;
    long m = p[0];
    out.emplace_back("m", m);
    for (long i = 1; i <= m; ++i) out.emplace_back("n" + std::to_string(i), p[static_cast<size_t>(i)]);
    for (size_t i = 0; i < tail.size(); ++i) out.emplace_back(tail[i], p[static_cast<size_t>(m) + 1 + i]);
    return out;
  };
}

inline std::vector<long> chain_entries(const Point& p) {
  return std::vector<long>(p.begin() + 1, p.begin() + 1 + p[0]);
}

// Outcome holding an exact rational that must be an integer.
inline CheckOutcome integrality_outcome(const BigRat& value) {
  CheckOutcome out;
  out.ok = is_integer(value);
  out.data.emplace_back("value", to_decimal(value));
  out.data.emplace_back("integer", out.ok ? "true" : "false");
  return out;
}

// Outcome for a value that must be divisible by every listed modulus.
inline CheckOutcome multi_divisibility_outcome(const BigInt& value,
                                               const std::vector<std::pair<std::string, BigInt>>& moduli) {
  CheckOutcome out;
  out.ok = true;
  out.data.emplace_back("value", to_decimal(value));
  for (const auto& [tag, modulus] : moduli) {
    DivisibilityReport rep = check_divisibility(value, modulus);
    out.ok = out.ok && rep.divisible;
    out.data.emplace_back("modulus" + tag, to_decimal(rep.modulus));
    out.data.emplace_back("remainder" + tag, to_decimal(rep.remainder));
  }
  return out;
}

inline BigInt super_catalan(long m, long n) {
  return exact_div(factorial(2 * m) * factorial(2 * n), factorial(m + n) * factorial(m) * factorial(n));
}

inline double grid_cost_terms(long kmax, long factors) {
  return static_cast<double>(kmax + 1) * static_cast<double>(factors + 2);
}

inline bool odd_sum(std::initializer_list<long> xs) {
  long s = 0;
  for (long x : xs) s += x;
  return (s & 1) != 0;
}

}  // namespace detail

// Every verifiable statement in the library, keyed by stable id.  Grid dials
// are inclusive ranges; eps is 0 for the plus sign and 1 for the alternating
// sign.  Conjecture-kind claims are falsifiable: a counterexample is a
// reportable finding, not an internal error.
inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> claims = [] {
    using detail::sign_of;
    std::vector<Claim> reg;

    {
      Claim c;
      c.id = "thm-1.1";
      c.kind = ClaimKind::theorem;
      c.summary =
          "Cyclic chain sum of C(n_i+n_{i+1}+1, n_i-k) weighted by eps^k (2k+1)^(2r+1) is divisible by "
          "(n_1+n_m+1) C(n_1+n_m, n_1)";
      c.default_bounds = {{"m", {1, 4}}, {"n", {1, 10}}, {"r", {0, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::chain_enumerator({"r", "eps"});
      c.labels = detail::chain_labels({"r", "eps"});
      c.check = [](const Point& p) {
        std::vector<long> ns = detail::chain_entries(p);
        long m = p[0], r = p[static_cast<size_t>(m) + 1], eps = p[static_cast<size_t>(m) + 2];
        ChainSpec spec{ns, r, sign_of(eps), Weight::odd_power, Closure::cyclic};
        BigInt modulus = BigInt(ns.front() + ns.back() + 1) * binomial(ns.front() + ns.back(), ns.front());
        return divisibility_outcome(chain_sum(spec), modulus);
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[1], p[0]); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "thm-1.2";
      c.kind = ClaimKind::theorem;
      c.summary =
          "Cyclic chain sum weighted by eps^k k^r (k+1)^r (2k+1) is divisible by (n_1+n_m+1) C(n_1+n_m, n_1) "
          "times n_1^min(1,r) and an n_m factor depending on the sign";
      c.default_bounds = {{"m", {1, 4}}, {"n", {1, 10}}, {"r", {0, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::chain_enumerator({"r", "eps"});
      c.labels = detail::chain_labels({"r", "eps"});
      c.check = [](const Point& p) {
        std::vector<long> ns = detail::chain_entries(p);
        long m = p[0], r = p[static_cast<size_t>(m) + 1], eps = p[static_cast<size_t>(m) + 2];
        ChainSpec spec{ns, r, sign_of(eps), Weight::kk1, Closure::cyclic};
        long e1 = std::min(1L, r);
        long em = eps == 0 ? (r >= 2 ? 1 : 0) : std::min(1L, r);
        BigInt modulus = BigInt(ns.front() + ns.back() + 1) * binomial(ns.front() + ns.back(), ns.front()) *
                         pow_int(ns.front(), static_cast<unsigned long>(e1)) *
                         pow_int(ns.back(), static_cast<unsigned long>(em));
        return divisibility_outcome(chain_sum(spec), modulus);
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[1], p[0]); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "thm-2.1";
      c.kind = ClaimKind::theorem;
      c.summary =
          "Single-row sum of C(2n+1,n-k) k^r (k+1)^r (2k+1) is divisible by (2n+1) C(2n,n) n^min(2,r) "
          "(plus sign) or n^min(2,2r) (alternating sign)";
      c.default_bounds = {{"n", {1, 20}}, {"r", {0, 4}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"n", "r", "eps"});
      c.labels = detail::box_labels({"n", "r", "eps"});
      c.check = [](const Point& p) {
        long n = p[0], r = p[1], eps = p[2];
        long e = eps == 0 ? std::min(2L, r) : std::min(2L, 2 * r);
        BigInt modulus =
            BigInt(2 * n + 1) * binomial(2 * n, n) * pow_int(n, static_cast<unsigned long>(e));
        return divisibility_outcome(pq_direct(r, n, sign_of(eps)), modulus);
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], 2); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-2.2";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of C(2n+1,n-k)(2k+1)^(2r) equals 4^n times an odd number; the alternating version equals "
          "2^(ones in binary n) times an odd number";
      c.default_bounds = {{"n", {1, 30}}, {"r", {0, 4}}};
      c.for_each = detail::box_enumerator({"n", "r"});
      c.labels = detail::box_labels({"n", "r"});
      c.check = [](const Point& p) {
        long n = p[0], r = p[1];
        CheckOutcome plus = odd_quotient_outcome(uv_sum(n, r, Sign::plus), pow_int(4, static_cast<unsigned long>(n)));
        CheckOutcome alt = odd_quotient_outcome(
            uv_sum(n, r, Sign::alternating),
            pow_int(2, static_cast<unsigned long>(bit_count_ones(BigInt(n)))));
        CheckOutcome out;
        out.ok = plus.ok && alt.ok;
        for (auto& kv : plus.data) out.data.emplace_back(kv.first + "_plus", std::move(kv.second));
        for (auto& kv : alt.data) out.data.emplace_back(kv.first + "_alt", std::move(kv.second));
        return out;
      };
      c.cost = [](const Point& p) { return 2 * detail::grid_cost_terms(p[0], 2); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "thm-3.2";
      c.kind = ClaimKind::theorem;
      c.summary =
          "Two-variable sum of C(n1+n2+1,n1-k) C(n1+n2+1,n2-k) k^r (k+1)^r (2k+1) is divisible by "
          "(n1+n2+1) C(n1+n2,n1) n1^min(1,r) times an n2 factor depending on the sign";
      c.default_bounds = {{"n1", {1, 12}}, {"n2", {1, 12}}, {"r", {0, 4}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"n1", "n2", "r", "eps"});
      c.labels = detail::box_labels({"n1", "n2", "r", "eps"});
      c.check = [](const Point& p) {
        long n1 = p[0], n2 = p[1], r = p[2], eps = p[3];
        long e1 = std::min(1L, r);
        long e2 = eps == 0 ? (r >= 2 ? 1 : 0) : std::min(1L, r);
        BigInt modulus = BigInt(n1 + n2 + 1) * binomial(n1 + n2, n1) *
                         pow_int(n1, static_cast<unsigned long>(e1)) *
                         pow_int(n2, static_cast<unsigned long>(e2));
        return divisibility_outcome(two_var_direct(r, n1, n2, sign_of(eps), Weight::kk1), modulus);
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], 3); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "thm-6.6";
      c.kind = ClaimKind::theorem;
      c.summary =
          "n_1! prod (n_i+n_{i+1}+1)!/(2n_i+1)! times the open chain sum of C(2n_i+1, n_i-k) with weight "
          "eps^k (2k+1)^(2r+1) is an integer (n_{m+1} = -1)";
      c.default_bounds = {{"m", {1, 4}}, {"n", {1, 8}}, {"r", {0, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::chain_enumerator({"r", "eps"});
      c.labels = detail::chain_labels({"r", "eps"});
      c.check = [](const Point& p) {
        std::vector<long> ns = detail::chain_entries(p);
        long m = p[0], r = p[static_cast<size_t>(m) + 1], eps = p[static_cast<size_t>(m) + 2];
        ChainSpec spec{ns, r, sign_of(eps), Weight::odd_power, Closure::diagonal};
        return detail::integrality_outcome(normalized_sum(spec));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[1], p[0]); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "eq-final-form";
      c.kind = ClaimKind::corollary;
      c.summary =
          "The open chain integrality survives raising each factor C(2n_i+1, n_i-k) to a positive power "
          "a_i, with the same factorial prefactor over the distinct entries";
      c.default_bounds = {{"m", {1, 3}}, {"n", {1, 6}}, {"a", {1, 2}}, {"r", {0, 2}}, {"eps", {0, 1}}};
      c.for_each = [](const Bounds& bounds, const PointFn& fn) {
        Range m_range = bounds.at("m");
        for (long m = std::max(1L, m_range.lo); m <= m_range.hi; ++m) {
          std::vector<Range> dials(static_cast<size_t>(m), bounds.at("n"));
          dials.insert(dials.end(), static_cast<size_t>(m), bounds.at("a"));
          dials.push_back(bounds.at("r"));
          dials.push_back(bounds.at("eps"));
          detail::enumerate_box(dials, [&](const Point& inner) {
            Point p;
            p.reserve(inner.size() + 1);
            p.push_back(m);
            p.insert(p.end(), inner.begin(), inner.end());
            fn(p);
          });
        }
      };
      c.labels = [](const Point& p) {
        std::vector<std::pair<std::string, long>> out;
        long m = p[0];
        out.emplace_back("m", m);
        for (long i = 1; i <= m; ++i) out.emplace_back("n" + std::to_string(i), p[static_cast<size_t>(i)]);
        for (long i = 1; i <= m; ++i)
          out.emplace_back("a" + std::to_string(i), p[static_cast<size_t>(m + i)]);
        out.emplace_back("r", p[static_cast<size_t>(2 * m + 1)]);
        out.emplace_back("eps", p[static_cast<size_t>(2 * m + 2)]);
        return out;
      };
      c.check = [](const Point& p) {
        long m = p[0];
        std::vector<long> ns;  // each n_i repeated a_i times
        for (long i = 1; i <= m; ++i)
          for (long rep = 0; rep < p[static_cast<size_t>(m + i)]; ++rep)
            ns.push_back(p[static_cast<size_t>(i)]);
        long r = p[static_cast<size_t>(2 * m + 1)], eps = p[static_cast<size_t>(2 * m + 2)];
        ChainSpec spec{ns, r, sign_of(eps), Weight::odd_power, Closure::diagonal};
        return detail::integrality_outcome(normalized_sum(spec));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[1], 2 * p[0]); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "thm-1.4";
      c.kind = ClaimKind::theorem;
      c.summary =
          "Sum of eps^k (2k+1)^r A(n,k)^s is divisible by C(2n,n) whenever r+s is odd and 2n+1 is a prime "
          "power or s = 1";
      c.default_bounds = {{"n", {1, 60}}, {"r", {0, 4}}, {"s", {1, 4}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"n", "r", "s", "eps"}, [](const Point& p) {
        long n = p[0], r = p[1], s = p[2];
        if (!detail::odd_sum({r, s})) return false;
        return s == 1 || is_prime_power_u64(static_cast<std::uint64_t>(2 * n + 1));
      });
      c.labels = detail::box_labels({"n", "r", "s", "eps"});
      c.check = [](const Point& p) {
        long n = p[0], r = p[1], s = p[2], eps = p[3];
        BallotSumSpec spec{{{n, s}}, r, sign_of(eps)};
        return divisibility_outcome(ballot_power_sum(spec), binomial(2 * n, n));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], p[2] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "conj-1.3";
      c.kind = ClaimKind::conjecture;
      c.summary =
          "Sum of eps^k (2k+1)^r A(n,k)^s is divisible by C(2n,n) for every n whenever r+s is odd";
      c.default_bounds = {{"n", {1, 10}}, {"r", {0, 5}}, {"s", {1, 5}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator(
          {"n", "r", "s", "eps"}, [](const Point& p) { return detail::odd_sum({p[1], p[2]}); });
      c.labels = detail::box_labels({"n", "r", "s", "eps"});
      c.check = [](const Point& p) {
        long n = p[0], r = p[1], s = p[2], eps = p[3];
        BallotSumSpec spec{{{n, s}}, r, sign_of(eps)};
        return divisibility_outcome(ballot_power_sum(spec), binomial(2 * n, n));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], p[2] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "conj-6.2";
      c.kind = ClaimKind::conjecture;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) C(2n+1,n-k)^(2a+1) over C(2n,n) is even or odd according to the "
          "binary shape of n: plus sign odd iff n = 2^b - 1, alternating odd iff n = 2^b + 2^c";
      c.default_bounds = {{"n", {1, 64}}, {"a", {1, 3}}, {"r", {0, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"n", "a", "r", "eps"});
      c.labels = detail::box_labels({"n", "a", "r", "eps"});
      c.check = [](const Point& p) {
        long n = p[0], a = p[1], r = p[2], eps = p[3];
        BigInt sum = binomial_power_sum({{2 * n + 1, n, 2 * a + 1}}, 2 * r + 1, sign_of(eps), n);
        BigInt central = binomial(2 * n, n);
        CheckOutcome out;
        out.data.emplace_back("value", to_decimal(sum));
        if (sum % central != 0) {
          out.ok = false;
          out.data.emplace_back("integer", "false");
          return out;
        }
        BigInt q = exact_div(sum, central);
        unsigned long ones = bit_count_ones(BigInt(n));
        bool expect_odd = eps == 0 ? bit_count_ones(BigInt(n + 1)) == 1
                                   : (ones == 2 || (ones == 1 && n >= 2));
        out.ok = is_odd(q) == expect_odd;
        out.data.emplace_back("quotient", to_decimal(q));
        out.data.emplace_back("expected_parity", expect_odd ? "1" : "0");
        out.data.emplace_back("actual_parity", is_odd(q) ? "1" : "0");
        return out;
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], 2 * p[1] + 2); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-6.1";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) C(2n+1,n-k)^m is divisible by (2n+1) C(2n,n)";
      c.default_bounds = {{"m", {1, 5}}, {"n", {1, 12}}, {"r", {0, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"m", "n", "r", "eps"});
      c.labels = detail::box_labels({"m", "n", "r", "eps"});
      c.check = [](const Point& p) {
        long m = p[0], n = p[1], r = p[2], eps = p[3];
        BigInt sum = binomial_power_sum({{2 * n + 1, n, m}}, 2 * r + 1, sign_of(eps), n);
        return divisibility_outcome(sum, BigInt(2 * n + 1) * binomial(2 * n, n));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[1], p[0] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-6.3";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) C(m+n+1,m-k)^a C(m+n+1,n-k)^a is divisible by (m+n+1) C(m+n,m)";
      c.default_bounds = {{"a", {1, 3}}, {"m", {1, 8}}, {"n", {1, 8}}, {"r", {0, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"a", "m", "n", "r", "eps"});
      c.labels = detail::box_labels({"a", "m", "n", "r", "eps"});
      c.check = [](const Point& p) {
        long a = p[0], m = p[1], n = p[2], r = p[3], eps = p[4];
        BigInt sum = binomial_power_sum({{m + n + 1, m, a}, {m + n + 1, n, a}}, 2 * r + 1, sign_of(eps),
                                        std::min(m, n));
        return divisibility_outcome(sum, BigInt(m + n + 1) * binomial(m + n, m));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(std::min(p[1], p[2]), 2 * p[0] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-6.4";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) C(l+m+1,l-k)^a C(m+n+1,m-k)^a C(n+l+1,n-k)^a is divisible by "
          "(l+m+1) C(l+m,l)";
      c.default_bounds = {{"a", {1, 2}}, {"l", {1, 6}}, {"m", {1, 6}}, {"n", {1, 6}}, {"r", {0, 2}},
                          {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"a", "l", "m", "n", "r", "eps"});
      c.labels = detail::box_labels({"a", "l", "m", "n", "r", "eps"});
      c.check = [](const Point& p) {
        long a = p[0], l = p[1], m = p[2], n = p[3], r = p[4], eps = p[5];
        BigInt sum = binomial_power_sum({{l + m + 1, l, a}, {m + n + 1, m, a}, {n + l + 1, n, a}},
                                        2 * r + 1, sign_of(eps), std::min({l, m, n}));
        return divisibility_outcome(sum, BigInt(l + m + 1) * binomial(l + m, l));
      };
      c.cost = [](const Point& p) {
        return detail::grid_cost_terms(std::min({p[1], p[2], p[3]}), 3 * p[0] + 1);
      };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-nn1";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) C(2n,n-k)^a C(2n,n-k-1)^a C(2n-1,n-k-1)^b is divisible by n C(2n,n)";
      c.default_bounds = {{"a", {1, 3}}, {"b", {0, 3}}, {"n", {1, 10}}, {"r", {0, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"a", "b", "n", "r", "eps"});
      c.labels = detail::box_labels({"a", "b", "n", "r", "eps"});
      c.check = [](const Point& p) {
        long a = p[0], b = p[1], n = p[2], r = p[3], eps = p[4];
        BigInt sum = binomial_power_sum({{2 * n, n, a}, {2 * n, n - 1, a}, {2 * n - 1, n - 1, b}},
                                        2 * r + 1, sign_of(eps), n);
        return divisibility_outcome(sum, BigInt(n) * binomial(2 * n, n));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[2], 2 * p[0] + p[1] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-mn";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) C(2m+1,m-k)^a C(2n+1,n-k)^b is divisible by "
          "(2m+1)!(2n+1)!/((m+n+1)! m! n!)";
      c.default_bounds = {{"a", {1, 3}}, {"b", {1, 3}}, {"m", {1, 8}}, {"n", {1, 8}}, {"r", {0, 3}},
                          {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"a", "b", "m", "n", "r", "eps"});
      c.labels = detail::box_labels({"a", "b", "m", "n", "r", "eps"});
      c.check = [](const Point& p) {
        long a = p[0], b = p[1], m = p[2], n = p[3], r = p[4], eps = p[5];
        BigInt sum = binomial_power_sum({{2 * m + 1, m, a}, {2 * n + 1, n, b}}, 2 * r + 1, sign_of(eps),
                                        std::min(m, n));
        BigInt modulus = exact_div(factorial(2 * m + 1) * factorial(2 * n + 1),
                                   factorial(m + n + 1) * factorial(m) * factorial(n));
        return divisibility_outcome(sum, modulus);
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(std::min(p[2], p[3]), p[0] + p[1] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "eq-n1n2";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) C(2n+3,n-k+1)^a C(2n+1,n-k)^b is divisible by (2n+3) C(2n+1,n)";
      c.default_bounds = {{"a", {1, 3}}, {"b", {1, 3}}, {"n", {1, 10}}, {"r", {0, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"a", "b", "n", "r", "eps"});
      c.labels = detail::box_labels({"a", "b", "n", "r", "eps"});
      c.check = [](const Point& p) {
        long a = p[0], b = p[1], n = p[2], r = p[3], eps = p[4];
        BigInt sum = binomial_power_sum({{2 * n + 3, n + 1, a}, {2 * n + 1, n, b}}, 2 * r + 1,
                                        sign_of(eps), n);
        return divisibility_outcome(sum, BigInt(2 * n + 3) * binomial(2 * n + 1, n));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[2], p[0] + p[1] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-n1n2n3";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) C(2n+1,n-k)^a C(2n+3,n-k+1)^b C(2n+5,n-k+2)^c is divisible by "
          "(2n+5) C(2n+1,n)";
      c.default_bounds = {{"a", {1, 2}}, {"b", {1, 2}}, {"c", {1, 2}}, {"n", {1, 8}}, {"r", {0, 2}},
                          {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"a", "b", "c", "n", "r", "eps"});
      c.labels = detail::box_labels({"a", "b", "c", "n", "r", "eps"});
      c.check = [](const Point& p) {
        long a = p[0], b = p[1], cc = p[2], n = p[3], r = p[4], eps = p[5];
        BigInt sum = binomial_power_sum(
            {{2 * n + 1, n, a}, {2 * n + 3, n + 1, b}, {2 * n + 5, n + 2, cc}}, 2 * r + 1, sign_of(eps), n);
        return divisibility_outcome(sum, BigInt(2 * n + 5) * binomial(2 * n + 1, n));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[3], p[0] + p[1] + p[2] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-rst-246n";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) C(6n+1,3n-k)^a C(4n+1,2n-k)^b C(2n+1,n-k)^c is divisible by both "
          "(2n+1) C(6n+1,n) and (2n+1) C(6n+1,3n)";
      c.default_bounds = {{"a", {1, 2}}, {"b", {1, 2}}, {"c", {1, 2}}, {"n", {1, 6}}, {"r", {0, 2}},
                          {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"a", "b", "c", "n", "r", "eps"});
      c.labels = detail::box_labels({"a", "b", "c", "n", "r", "eps"});
      c.check = [](const Point& p) {
        long a = p[0], b = p[1], cc = p[2], n = p[3], r = p[4], eps = p[5];
        BigInt sum = binomial_power_sum(
            {{6 * n + 1, 3 * n, a}, {4 * n + 1, 2 * n, b}, {2 * n + 1, n, cc}}, 2 * r + 1, sign_of(eps), n);
        return detail::multi_divisibility_outcome(
            sum, {{"_low", BigInt(2 * n + 1) * binomial(6 * n + 1, n)},
                  {"_high", BigInt(2 * n + 1) * binomial(6 * n + 1, 3 * n)}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[3], p[0] + p[1] + p[2] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-rst-248n";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Twice the (8n,4n,2n)-shift sum is divisible by (2n+1)(4n+1)(8 C(8n+1,3n) - 3 C(8n+2,3n+1)); "
          "the (8n,6n,4n)-shift sum is divisible by (4n+1) C(8n+1,3n)";
      c.default_bounds = {{"a", {1, 2}}, {"b", {1, 2}}, {"c", {1, 2}}, {"n", {1, 5}}, {"r", {0, 2}},
                          {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"a", "b", "c", "n", "r", "eps"});
      c.labels = detail::box_labels({"a", "b", "c", "n", "r", "eps"});
      c.check = [](const Point& p) {
        long a = p[0], b = p[1], cc = p[2], n = p[3], r = p[4], eps = p[5];
        BigInt low_sum = binomial_power_sum(
            {{8 * n + 1, 4 * n, a}, {4 * n + 1, 2 * n, b}, {2 * n + 1, n, cc}}, 2 * r + 1, sign_of(eps), n);
        BigInt low_mod = BigInt(2 * n + 1) * (4 * n + 1) *
                         (8 * binomial(8 * n + 1, 3 * n) - 3 * binomial(8 * n + 2, 3 * n + 1));
        DivisibilityReport low = check_divisibility(2 * low_sum, low_mod);
        BigInt high_sum = binomial_power_sum(
            {{8 * n + 1, 4 * n, a}, {6 * n + 1, 3 * n, b}, {4 * n + 1, 2 * n, cc}}, 2 * r + 1,
            sign_of(eps), n);
        DivisibilityReport high =
            check_divisibility(high_sum, BigInt(4 * n + 1) * binomial(8 * n + 1, 3 * n));
        CheckOutcome out;
        out.ok = low.divisible && high.divisible;
        out.data.emplace_back("value_low", to_decimal(low.value));
        out.data.emplace_back("modulus_low", to_decimal(low.modulus));
        out.data.emplace_back("remainder_low", to_decimal(low.remainder));
        out.data.emplace_back("value_high", to_decimal(high.value));
        out.data.emplace_back("modulus_high", to_decimal(high.modulus));
        out.data.emplace_back("remainder_high", to_decimal(high.remainder));
        return out;
      };
      c.cost = [](const Point& p) {
        return 2 * detail::grid_cost_terms(p[3], p[0] + p[1] + p[2] + 1);
      };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-final";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^(2r+1) prod_i C(2n+2i-1, n+i-1-k)^(a_i) over i = 1..m is divisible by "
          "(2n+2m-1) C(2n+1,n)";
      c.default_bounds = {{"m", {2, 4}}, {"n", {1, 6}}, {"a", {1, 2}}, {"r", {0, 2}}, {"eps", {0, 1}}};
      c.for_each = [](const Bounds& bounds, const PointFn& fn) {
        Range m_range = bounds.at("m");
        for (long m = std::max(2L, m_range.lo); m <= m_range.hi; ++m) {
          std::vector<Range> dials = {bounds.at("n")};
          dials.insert(dials.end(), static_cast<size_t>(m), bounds.at("a"));
          dials.push_back(bounds.at("r"));
          dials.push_back(bounds.at("eps"));
          detail::enumerate_box(dials, [&](const Point& inner) {
            Point p;
            p.reserve(inner.size() + 1);
            p.push_back(m);
            p.insert(p.end(), inner.begin(), inner.end());
            fn(p);
          });
        }
      };
      c.labels = [](const Point& p) {
        std::vector<std::pair<std::string, long>> out;
        long m = p[0];
        out.emplace_back("m", m);
        out.emplace_back("n", p[1]);
        for (long i = 1; i <= m; ++i) out.emplace_back("a" + std::to_string(i), p[static_cast<size_t>(1 + i)]);
        out.emplace_back("r", p[static_cast<size_t>(m + 2)]);
        out.emplace_back("eps", p[static_cast<size_t>(m + 3)]);
        return out;
      };
      c.check = [](const Point& p) {
        long m = p[0], n = p[1];
        long r = p[static_cast<size_t>(m + 2)], eps = p[static_cast<size_t>(m + 3)];
        std::vector<BinomPower> factors;
        for (long i = 1; i <= m; ++i)
          factors.push_back({2 * n + 2 * i - 1, n + i - 1, p[static_cast<size_t>(1 + i)]});
        BigInt sum = binomial_power_sum(factors, 2 * r + 1, sign_of(eps), n);
        return divisibility_outcome(sum, BigInt(2 * n + 2 * m - 1) * binomial(2 * n + 1, n));
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[1], 2 * p[0] + 1); };
      reg.push_back(std::move(c));
    }

    // Mixed ballot-product claims.  A shared checker: value is
    // scale * sum(eps^k (2k+1)^wexp prod A(n_j,k)^(e_j), k = 0..k_limit).
    auto ballot_claim_check = [](std::vector<BallotFactor> factors, long wexp, long eps, long k_limit,
                                 const BigInt& scale, std::vector<std::pair<std::string, BigInt>> moduli) {
      BallotSumSpec spec{std::move(factors), wexp, sign_of(eps), k_limit};
      BigInt value = scale * ballot_power_sum(spec);
      if (moduli.size() == 1) return divisibility_outcome(value, moduli.front().second);
      return detail::multi_divisibility_outcome(value, moduli);
    };

    {
      Claim c;
      c.id = "cor-n2n";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^r A(n+1,k)^s A(n,k)^t with r+s+t odd is divisible by the Catalan number "
          "C(2n+1,n)/(2n+1), given s = t = 1 or the Catalan gcd condition";
      c.default_bounds = {{"n", {1, 12}}, {"r", {0, 3}}, {"s", {1, 3}}, {"t", {1, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"n", "r", "s", "t", "eps"}, [](const Point& p) {
        long n = p[0], r = p[1], s = p[2], t = p[3];
        if (!detail::odd_sum({r, s, t})) return false;
        return (s == 1 && t == 1) || catalan_gcd_condition(static_cast<std::uint64_t>(n));
      });
      c.labels = detail::box_labels({"n", "r", "s", "t", "eps"});
      c.check = [ballot_claim_check](const Point& p) {
        long n = p[0], r = p[1], s = p[2], t = p[3], eps = p[4];
        return ballot_claim_check({{n + 1, s}, {n, t}}, r, eps, -1, BigInt(1),
                                  {{"", catalan(n)}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], p[2] + p[3] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "cor-2nk-nk";
      c.kind = ClaimKind::corollary;
      c.summary =
          "Sum of eps^k (2k+1)^r A(2n,k)^s A(n,k)^t with r+s+t odd is divisible by C(4n+1,n)/(4n+1), "
          "given s = t = 1 or the matching gcd condition";
      c.default_bounds = {{"n", {1, 10}}, {"r", {0, 3}}, {"s", {1, 3}}, {"t", {1, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator({"n", "r", "s", "t", "eps"}, [](const Point& p) {
        long n = p[0], r = p[1], s = p[2], t = p[3];
        if (!detail::odd_sum({r, s, t})) return false;
        return (s == 1 && t == 1) || fuss_catalan_gcd_condition(static_cast<std::uint64_t>(n));
      });
      c.labels = detail::box_labels({"n", "r", "s", "t", "eps"});
      c.check = [ballot_claim_check](const Point& p) {
        long n = p[0], r = p[1], s = p[2], t = p[3], eps = p[4];
        return ballot_claim_check({{2 * n, s}, {n, t}}, r, eps, -1, BigInt(1),
                                  {{"", exact_div(binomial(4 * n + 1, n), BigInt(4 * n + 1))}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], p[2] + p[3] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "conj-n2n-all";
      c.kind = ClaimKind::conjecture;
      c.summary =
          "The A(n+1,k)^s A(n,k)^t divisibility by the Catalan number holds for every n with r+s+t odd, "
          "with no gcd hypothesis";
      c.default_bounds = {{"n", {1, 12}}, {"r", {0, 3}}, {"s", {1, 3}}, {"t", {1, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator(
          {"n", "r", "s", "t", "eps"}, [](const Point& p) { return detail::odd_sum({p[1], p[2], p[3]}); });
      c.labels = detail::box_labels({"n", "r", "s", "t", "eps"});
      c.check = [ballot_claim_check](const Point& p) {
        long n = p[0], r = p[1], s = p[2], t = p[3], eps = p[4];
        return ballot_claim_check({{n + 1, s}, {n, t}}, r, eps, -1, BigInt(1),
                                  {{"", catalan(n)}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], p[2] + p[3] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "conj-2nk-nk-all";
      c.kind = ClaimKind::conjecture;
      c.summary =
          "The A(2n,k)^s A(n,k)^t divisibility by C(4n+1,n)/(4n+1) holds for every n with r+s+t odd, "
          "with no gcd hypothesis";
      c.default_bounds = {{"n", {1, 10}}, {"r", {0, 3}}, {"s", {1, 3}}, {"t", {1, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator(
          {"n", "r", "s", "t", "eps"}, [](const Point& p) { return detail::odd_sum({p[1], p[2], p[3]}); });
      c.labels = detail::box_labels({"n", "r", "s", "t", "eps"});
      c.check = [ballot_claim_check](const Point& p) {
        long n = p[0], r = p[1], s = p[2], t = p[3], eps = p[4];
        return ballot_claim_check({{2 * n, s}, {n, t}}, r, eps, -1, BigInt(1),
                                  {{"", exact_div(binomial(4 * n + 1, n), BigInt(4 * n + 1))}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], p[2] + p[3] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "conj-super-catalan";
      c.kind = ClaimKind::conjecture;
      c.summary =
          "(m+n+1) times the sum of eps^k (2k+1)^r A(m,k)^s A(n,k)^t with r+s+t odd is divisible by the "
          "super Catalan number (2m)!(2n)!/((m+n)! m! n!)";
      c.default_bounds = {{"m", {1, 8}}, {"n", {1, 8}}, {"r", {0, 3}}, {"s", {1, 3}}, {"t", {1, 3}},
                          {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator(
          {"m", "n", "r", "s", "t", "eps"}, [](const Point& p) { return detail::odd_sum({p[2], p[3], p[4]}); });
      c.labels = detail::box_labels({"m", "n", "r", "s", "t", "eps"});
      c.check = [ballot_claim_check](const Point& p) {
        long m = p[0], n = p[1], r = p[2], s = p[3], t = p[4], eps = p[5];
        return ballot_claim_check({{m, s}, {n, t}}, r, eps, -1, BigInt(m + n + 1),
                                  {{"", detail::super_catalan(m, n)}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(std::min(p[0], p[1]), p[3] + p[4] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "conj-a321";
      c.kind = ClaimKind::conjecture;
      c.summary =
          "(4n+1) times the sum of eps^k A(3n,k)^r A(2n,k)^s A(n,k)^t with r+s+t odd is divisible by both "
          "C(6n+1,n)/(6n+1) and C(6n+1,3n)/(6n+1), checked with the 6n+1 denominator cleared";
      c.default_bounds = {{"n", {1, 5}}, {"r", {1, 3}}, {"s", {1, 3}}, {"t", {1, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator(
          {"n", "r", "s", "t", "eps"}, [](const Point& p) { return detail::odd_sum({p[1], p[2], p[3]}); });
      c.labels = detail::box_labels({"n", "r", "s", "t", "eps"});
      c.check = [ballot_claim_check](const Point& p) {
        long n = p[0], r = p[1], s = p[2], t = p[3], eps = p[4];
        return ballot_claim_check({{3 * n, r}, {2 * n, s}, {n, t}}, 0, eps, -1,
                                  BigInt(6 * n + 1) * (4 * n + 1),
                                  {{"_low", binomial(6 * n + 1, n)}, {"_high", binomial(6 * n + 1, 3 * n)}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], p[1] + p[2] + p[3] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "conj-a421";
      c.kind = ClaimKind::conjecture;
      c.summary =
          "The sum of eps^k A(4n,k)^r A(2n,k)^s A(n,k)^t with r+s+t odd is divisible by "
          "C(8n+1,3n)/(8n+1), checked with the 8n+1 denominator cleared";
      c.default_bounds = {{"n", {1, 5}}, {"r", {1, 3}}, {"s", {1, 3}}, {"t", {1, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator(
          {"n", "r", "s", "t", "eps"}, [](const Point& p) { return detail::odd_sum({p[1], p[2], p[3]}); });
      c.labels = detail::box_labels({"n", "r", "s", "t", "eps"});
      c.check = [ballot_claim_check](const Point& p) {
        long n = p[0], r = p[1], s = p[2], t = p[3], eps = p[4];
        return ballot_claim_check({{4 * n, r}, {2 * n, s}, {n, t}}, 0, eps, -1, BigInt(8 * n + 1),
                                  {{"", binomial(8 * n + 1, 3 * n)}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], p[1] + p[2] + p[3] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "conj-a432";
      c.kind = ClaimKind::conjecture;
      c.summary =
          "(6n+1) times the sum over k <= n of eps^k A(4n,k)^r A(3n,k)^s A(2n,k)^t with r+s+t odd is "
          "divisible by C(8n+1,3n)/(8n+1), checked with the 8n+1 denominator cleared";
      c.default_bounds = {{"n", {1, 4}}, {"r", {1, 3}}, {"s", {1, 3}}, {"t", {1, 3}}, {"eps", {0, 1}}};
      c.for_each = detail::box_enumerator(
          {"n", "r", "s", "t", "eps"}, [](const Point& p) { return detail::odd_sum({p[1], p[2], p[3]}); });
      c.labels = detail::box_labels({"n", "r", "s", "t", "eps"});
      c.check = [ballot_claim_check](const Point& p) {
        long n = p[0], r = p[1], s = p[2], t = p[3], eps = p[4];
        return ballot_claim_check({{4 * n, r}, {3 * n, s}, {2 * n, t}}, 0, eps, n,
                                  BigInt(8 * n + 1) * (6 * n + 1),
                                  {{"", binomial(8 * n + 1, 3 * n)}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[0], p[1] + p[2] + p[3] + 1); };
      reg.push_back(std::move(c));
    }

    {
      Claim c;
      c.id = "conj-final";
      c.kind = ClaimKind::conjecture;
      c.summary =
          "Sum of eps^k prod_i A(n+i-1,k)^(r_i) with odd total degree is divisible by the Catalan number "
          "C(2n+1,n)/(2n+1)";
      c.default_bounds = {{"m", {1, 3}}, {"n", {1, 8}}, {"rexp", {1, 2}}, {"eps", {0, 1}}};
      c.for_each = [](const Bounds& bounds, const PointFn& fn) {
        Range m_range = bounds.at("m");
        for (long m = std::max(1L, m_range.lo); m <= m_range.hi; ++m) {
          std::vector<Range> dials = {bounds.at("n")};
          dials.insert(dials.end(), static_cast<size_t>(m), bounds.at("rexp"));
          dials.push_back(bounds.at("eps"));
          detail::enumerate_box(dials, [&](const Point& inner) {
            long total = 0;
            for (long i = 1; i <= m; ++i) total += inner[static_cast<size_t>(i)];
            if ((total & 1) == 0) return;
            Point p;
            p.reserve(inner.size() + 1);
            p.push_back(m);
            p.insert(p.end(), inner.begin(), inner.end());
            fn(p);
          });
        }
      };
      c.labels = [](const Point& p) {
        std::vector<std::pair<std::string, long>> out;
        long m = p[0];
        out.emplace_back("m", m);
        out.emplace_back("n", p[1]);
        for (long i = 1; i <= m; ++i) out.emplace_back("r" + std::to_string(i), p[static_cast<size_t>(1 + i)]);
        out.emplace_back("eps", p[static_cast<size_t>(m + 2)]);
        return out;
      };
      c.check = [ballot_claim_check](const Point& p) {
        long m = p[0], n = p[1], eps = p[static_cast<size_t>(m + 2)];
        std::vector<BallotFactor> factors;
        for (long i = 1; i <= m; ++i) factors.push_back({n + i - 1, p[static_cast<size_t>(1 + i)]});
        return ballot_claim_check(std::move(factors), 0, eps, -1, BigInt(1), {{"", catalan(n)}});
      };
      c.cost = [](const Point& p) { return detail::grid_cost_terms(p[1], 2 * p[0] + 1); };
      reg.push_back(std::move(c));
    }

    return reg;
  }();
  return claims;
}

inline const Claim* find_claim(const std::string& id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

inline std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const Claim& c : claim_registry()) ids.push_back(c.id);
  return ids;
}

}  // namespace conlab

#endif  // CONLAB_CLAIM_REGISTRY_HPP
