#ifndef CONLAB_REPORT_HPP
#define CONLAB_REPORT_HPP

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "conlab/claims.hpp"
#include "conlab/identities.hpp"
#include "conlab/searches.hpp"

namespace conlab {

enum class Format { json, csv, text };

inline Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv, or text)");
}

// Reports must be byte-identical across runs of the same config: all numbers
// are rendered as decimal strings, insertion order is preserved, and wall
// clock readings never enter the serialized data.
using Json = nlohmann::ordered_json;

inline std::string verify_status(const GridReport& report) {
  if (report.counterexamples.empty()) return "held";
  return report.kind == ClaimKind::conjecture ? "conjecture-counterexample" : "theorem-violated";
}

inline int verify_exit_code(const GridReport& report) {
  if (report.counterexamples.empty()) return 0;
  return report.kind == ClaimKind::conjecture ? 3 : 2;
}

namespace detail {

inline Json point_json(const Counterexample& point) {
  Json j = Json::object();
  Json params = Json::object();
  for (const auto& [name, value] : point.params) params[name] = std::to_string(value);
  j["params"] = std::move(params);
  for (const auto& [name, value] : point.data) j[name] = value;
  return j;
}

}  // namespace detail

inline Json verify_report_json(const GridReport& report) {
  Json j = Json::object();
  j["claim"] = report.claim_id;
  j["kind"] = claim_kind_name(report.kind);
  Json grid = Json::object();
  for (const auto& [name, range] : report.grid)
    grid[name] = Json::array({std::to_string(range.lo), std::to_string(range.hi)});
  j["grid"] = std::move(grid);
  j["checked"] = std::to_string(report.checked);
  if (report.witness) j["witness"] = detail::point_json(*report.witness);
  Json ces = Json::array();
  for (const auto& ce : report.counterexamples) ces.push_back(detail::point_json(ce));
  j["counterexamples"] = std::move(ces);
  j["status"] = verify_status(report);
  return j;
}

// One line-delimited record per counterexample: claim id, parameters, then
// the outcome data (value, modulus, remainder for divisibility claims).
inline std::string findings_jsonl(const GridReport& report) {
  std::string out;
  for (const auto& ce : report.counterexamples) {
    Json j = Json::object();
    j["claim"] = report.claim_id;
    Json params = Json::object();
    for (const auto& [name, value] : ce.params) params[name] = std::to_string(value);
    j["params"] = std::move(params);
    for (const auto& [name, value] : ce.data) j[name] = value;
    out += j.dump();
    out += '\n';
  }
  return out;
}

inline std::string render_verify_report(const GridReport& report, Format format) {
  if (format == Format::json) return verify_report_json(report).dump(2) + "\n";
  std::ostringstream out;
  if (format == Format::csv) {
    out << "claim,checked,counterexamples,status\n";
    out << report.claim_id << ',' << report.checked << ',' << report.counterexamples.size() << ','
        << verify_status(report) << '\n';
    return out.str();
  }
  out << "claim " << report.claim_id << " (" << claim_kind_name(report.kind) << ")\n";
  out << "grid:";
  for (const auto& [name, range] : report.grid) out << ' ' << name << '=' << range.lo << ".." << range.hi;
  out << "\nchecked: " << report.checked << "\n";
  if (report.witness) {
    out << "witness:";
    for (const auto& [name, value] : report.witness->params) out << ' ' << name << '=' << value;
    for (const auto& [name, value] : report.witness->data) out << ' ' << name << '=' << value;
    out << "\n";
  }
  out << "counterexamples: " << report.counterexamples.size() << "\n";
  for (const auto& ce : report.counterexamples) {
    out << " ";
    for (const auto& [name, value] : ce.params) out << ' ' << name << '=' << value;
    for (const auto& [name, value] : ce.data) out << ' ' << name << '=' << value;
    out << "\n";
  }
  out << "status: " << verify_status(report) << "\n";
  return out.str();
}

inline Json search_summary_json(const SearchSummary& summary) {
  Json j = Json::object();
  j["search"] = summary.condition_id;
  j["bound"] = std::to_string(summary.bound);
  j["count"] = std::to_string(summary.hits.size());
  Json hits = Json::array();
  for (auto n : summary.hits) hits.push_back(std::to_string(n));
  j["hits"] = std::move(hits);
  return j;
}

inline std::string render_search_summary(const SearchSummary& summary, Format format) {
  if (format == Format::json) return search_summary_json(summary).dump(2) + "\n";
  std::ostringstream out;
  if (format == Format::csv) {
    out << "n\n";
    for (auto n : summary.hits) out << n << '\n';
    return out.str();
  }
  out << summary.condition_id << ": " << summary.hits.size() << " hits with n <= " << summary.bound << "\n";
  for (size_t i = 0; i < summary.hits.size(); ++i) out << (i ? " " : "") << summary.hits[i];
  if (!summary.hits.empty()) out << "\n";
  return out.str();
}

inline Json prime_pairs_json(const std::vector<PrimePairEntry>& entries) {
  Json j = Json::object();
  j["search"] = "prime-chain";
  j["count"] = std::to_string(entries.size());
  Json rows = Json::array();
  for (const auto& e : entries) {
    Json row = Json::object();
    row["p"] = std::to_string(e.p);
    row["q"] = std::to_string(e.q);
    row["n"] = std::to_string(e.n);
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

inline std::string render_prime_pairs(const std::vector<PrimePairEntry>& entries, Format format) {
  if (format == Format::json) return prime_pairs_json(entries).dump(2) + "\n";
  std::ostringstream out;
  if (format == Format::csv) {
    out << "p,q,n\n";
    for (const auto& e : entries) out << e.p << ',' << e.q << ',' << e.n << '\n';
    return out.str();
  }
  out << "prime-chain: " << entries.size() << " primes p with p^2-p+1 prime\n";
  for (const auto& e : entries) out << e.p << " -> q=" << e.q << " n=" << e.n << "\n";
  return out.str();
}

inline Json table_json(const std::vector<GcdConditionCounts>& rows) {
  Json j = Json::object();
  j["search"] = "table1";
  Json xs = Json::array(), f = Json::array(), g = Json::array();
  for (const auto& row : rows) {
    xs.push_back(std::to_string(row.x));
    f.push_back(std::to_string(row.catalan_count));
    g.push_back(std::to_string(row.fuss_catalan_count));
  }
  j["n"] = std::move(xs);
  j["f"] = std::move(f);
  j["g"] = std::move(g);
  return j;
}

// CSV mirrors the row/column layout of the reproduced table: one header row
// of cutoffs, then the f and g count rows.
inline std::string render_table(const std::vector<GcdConditionCounts>& rows, Format format) {
  if (format == Format::json) return table_json(rows).dump(2) + "\n";
  std::ostringstream out;
  const char* sep = format == Format::csv ? "," : " ";
  out << "n";
  for (const auto& row : rows) out << sep << row.x;
  out << "\nf(n)";
  for (const auto& row : rows) out << sep << row.catalan_count;
  out << "\ng(n)";
  for (const auto& row : rows) out << sep << row.fuss_catalan_count;
  out << "\n";
  return out.str();
}

inline Json identity_report_json(const IdentityReport& report) {
  Json j = Json::object();
  j["identity"] = report.id;
  Json params = Json::object();
  for (const auto& [name, value] : report.params) params[name] = std::to_string(value);
  j["params"] = std::move(params);
  j["checked"] = std::to_string(report.checked);
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(f);
  j["failures"] = std::move(failures);
  j["status"] = report.failures.empty() ? "held" : "violated";
  return j;
}

inline std::string render_identity_report(const IdentityReport& report, Format format) {
  if (format == Format::json) return identity_report_json(report).dump(2) + "\n";
  std::ostringstream out;
  if (format == Format::csv) {
    out << "identity,checked,failures,status\n";
    out << report.id << ',' << report.checked << ',' << report.failures.size() << ','
        << (report.failures.empty() ? "held" : "violated") << '\n';
    return out.str();
  }
  out << "identity " << report.id << "\nparams:";
  for (const auto& [name, value] : report.params) out << ' ' << name << '=' << value;
  out << "\nchecked: " << report.checked << "\n";
  out << "failures: " << report.failures.size() << "\n";
  for (const auto& f : report.failures) out << "  " << f << "\n";
  out << "status: " << (report.failures.empty() ? "held" : "violated") << "\n";
  return out.str();
}

}  // namespace conlab

#endif  // CONLAB_REPORT_HPP
