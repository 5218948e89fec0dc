#ifndef CONLAB_CLAIMS_HPP
#define CONLAB_CLAIMS_HPP

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "conlab/divisibility.hpp"
#include "conlab/exact.hpp"

namespace conlab {

enum class ClaimKind { theorem, corollary, conjecture };

inline const char* claim_kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::theorem: return "theorem";
    case ClaimKind::corollary: return "corollary";
    default: return "conjecture";
  }
}

// Inclusive integer interval for one grid dial.
struct Range {
  long lo = 0;
  long hi = 0;
};

// One enumerated grid point; layout is claim-specific and decoded by the
// claim's own labels/check functions.
using Point = std::vector<long>;

// Divisibility (or predicate) result at one point.  `data` carries named
// decimal strings (value, modulus, remainder, ...) for reports.
struct CheckOutcome {
  bool ok = true;
  std::vector<std::pair<std::string, std::string>> data;
};

struct Counterexample {
  std::vector<std::pair<std::string, long>> params;
  std::vector<std::pair<std::string, std::string>> data;
};

using Bounds = std::map<std::string, Range>;
using PointFn = std::function<void(const Point&)>;

// A verifiable statement: named grid dials with defaults, a deterministic
// enumerator, a per-point predicate, and a per-point cost estimate used by
// the budget guardrail.
struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::theorem;
  std::string summary;
  std::vector<std::pair<std::string, Range>> default_bounds;
  // Calls fn for every point of the grid induced by `bounds`, in a fixed
  // deterministic order.
  std::function<void(const Bounds&, const PointFn&)> for_each;
  // Point -> named parameters, in display order.
  std::function<std::vector<std::pair<std::string, long>>(const Point&)> labels;
  std::function<CheckOutcome(const Point&)> check;
  // Rough big-integer multiplication count for one point.
  std::function<double(const Point&)> cost;
};

struct GridReport {
  std::string claim_id;
  ClaimKind kind = ClaimKind::theorem;
  std::vector<std::pair<std::string, Range>> grid;  // bounds actually used
  long checked = 0;
  // First evaluated point with its outcome data (moduli etc.), so a clean run
  // still shows what was checked against.
  std::optional<Counterexample> witness;
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0.0;  // wall clock; excluded from serialized data
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(double estimated, double budget)
      : std::runtime_error("estimated cost " + std::to_string(estimated) +
                           " exceeds budget " + std::to_string(budget)),
        estimated_cost(estimated),
        budget(budget) {}
  double estimated_cost;
  double budget;
};

inline constexpr double kDefaultBudget = 1e8;

// Merge caller overrides onto the claim's defaults; unknown dial names are
// rejected so typos cannot silently widen or shrink a sweep.
inline Bounds resolve_bounds(const Claim& claim, const Bounds& overrides) {
  Bounds bounds;
  for (const auto& [name, range] : claim.default_bounds) bounds[name] = range;
  for (const auto& [name, range] : overrides) {
    auto it = bounds.find(name);
    if (it == bounds.end())
      throw std::invalid_argument("unknown grid dial '" + name + "' for claim " + claim.id);
    if (range.lo > range.hi)
      throw std::invalid_argument("empty range for grid dial '" + name + "'");
    it->second = range;
  }
  return bounds;
}

// Sweep the claim's grid and collect counterexamples.  The cost pre-pass
// never evaluates any check; it only enumerates.  Workers split the point
// list into contiguous chunks, so the merged counterexample order equals the
// single-threaded enumeration order.
inline GridReport verify_claim(const Claim& claim, const Bounds& overrides = {}, int workers = 1,
                               double budget = kDefaultBudget) {
  if (workers < 1) throw std::invalid_argument("verify_claim: workers must be >= 1");
  Bounds bounds = resolve_bounds(claim, overrides);

  double estimated = 0.0;
  std::vector<Point> points;
  claim.for_each(bounds, [&](const Point& p) {
    estimated += claim.cost(p);
    points.push_back(p);
  });
  if (estimated > budget) throw BudgetExceeded(estimated, budget);

  auto started = std::chrono::steady_clock::now();

  GridReport report;
  report.claim_id = claim.id;
  report.kind = claim.kind;
  for (const auto& [name, defaulted] : claim.default_bounds) report.grid.emplace_back(name, bounds.at(name));
  report.checked = static_cast<long>(points.size());

  size_t n_points = points.size();
  size_t n_workers = std::min<size_t>(static_cast<size_t>(workers), std::max<size_t>(n_points, 1));
  std::vector<std::vector<Counterexample>> found(n_workers);
  std::vector<std::thread> threads;
  size_t chunk = n_points / n_workers, extra = n_points % n_workers;
  size_t begin = 0;
  for (size_t w = 0; w < n_workers; ++w) {
    size_t end = begin + chunk + (w < extra ? 1 : 0);
    threads.emplace_back([&, w, begin, end] {
      for (size_t i = begin; i < end; ++i) {
        CheckOutcome outcome = claim.check(points[i]);
        if (i == 0) report.witness = Counterexample{claim.labels(points[i]), outcome.data};
        if (!outcome.ok) found[w].push_back({claim.labels(points[i]), std::move(outcome.data)});
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& part : found)
    for (auto& ce : part) report.counterexamples.push_back(std::move(ce));

  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

namespace detail {

// Nested-loop enumerator over an explicit list of (lo, hi) dials, ascending,
// last dial fastest.
inline void enumerate_box(const std::vector<Range>& dials, const PointFn& fn) {
  Point p(dials.size());
  std::function<void(size_t)> descend = [&](size_t i) {
    if (i == dials.size()) {
      fn(p);
      return;
    }
    for (long v = dials[i].lo; v <= dials[i].hi; ++v) {
      p[i] = v;
      descend(i + 1);
    }
  };
  descend(0);
}

}  // namespace detail

// Standard outcome assembly for "value divisible by modulus" checks.
inline CheckOutcome divisibility_outcome(const BigInt& value, const BigInt& modulus) {
  DivisibilityReport rep = check_divisibility(value, modulus);
  CheckOutcome out;
  out.ok = rep.divisible;
  out.data.emplace_back("value", to_decimal(rep.value));
  out.data.emplace_back("modulus", to_decimal(rep.modulus));
  out.data.emplace_back("remainder", to_decimal(rep.remainder));
  return out;
}

// Outcome for "quotient is an odd integer" checks.
inline CheckOutcome odd_quotient_outcome(const BigInt& value, const BigInt& modulus) {
  DivisibilityReport rep = check_divisibility(value, modulus);
  CheckOutcome out;
  out.ok = rep.divisible && is_odd(*rep.quotient);
  out.data.emplace_back("value", to_decimal(rep.value));
  out.data.emplace_back("modulus", to_decimal(rep.modulus));
  out.data.emplace_back("remainder", to_decimal(rep.remainder));
  if (rep.divisible) out.data.emplace_back("quotient", to_decimal(*rep.quotient));
  return out;
}

}  // namespace conlab

#endif  // CONLAB_CLAIMS_HPP
