#ifndef CY3_REPORT_HPP
#define CY3_REPORT_HPP

// Batch execution of every check against a record, in a fixed registry
// order, with text and JSON rendering. All values in reports are exact.

#include <optional>
#include <string>
#include <vector>

#include "cy3/congruence.hpp"
#include "cy3/record.hpp"

namespace cy3 {

struct CheckLine {
  std::string id;
  CheckStatus status = CheckStatus::not_applicable;
  std::optional<Rational> lhs, rhs, slack;  // present on inequality checks
  std::string citation;
  std::string note;
};

// consistent: every evaluated check passed and nothing was blocked by
// missing data. partial: no failures, but some check could not run because
// the record lacks a field or sample it needs. violations: some check failed.
enum class Verdict { consistent, violations, partial };
std::string to_string(Verdict v);

struct RunReport {
  std::string record;
  std::vector<CheckLine> checks;
  Verdict verdict = Verdict::consistent;
  std::vector<std::string> violations;      // ids of failed checks
  std::vector<std::string> not_applicable;  // ids blocked by missing data
};

// Registry order: wall_parity, wall_pontrjagin, cy_riemann_roch,
// c2_positivity, then per eligible sample the surface data and c2 bounds,
// then the nef-bundle inequality family fitting the record, the Euler
// characteristic window, the factorization pipeline, and the group action.
RunReport run_all(const ThreefoldRecord& rec);

// One line per check: <id> <status> [lhs= rhs= slack=] [citation]; note.
std::string render_text(const RunReport& r);
std::string render_text(const std::vector<RunReport>& rs);

// Deterministic, stable key order, exact values as strings.
std::string render_json(const std::vector<RunReport>& rs);

// Views for the `factor` and `bounds` subcommands.
std::string render_factorizations(const ThreefoldRecord& rec);
std::string render_bounds(const ThreefoldRecord& rec);

}  // namespace cy3

#endif
