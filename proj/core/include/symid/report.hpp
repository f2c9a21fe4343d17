#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symid {

// Outcome of one identity check. `diff` is the canonical rendering of
// lhs - rhs and is empty when the check passes; `note` carries extra
// human-facing context (only the text renderer shows it).
struct IdentityReport {
  std::string id;
  std::vector<std::pair<std::string, long long>> params;
  bool pass = false;
  std::string diff;
  std::string note;
  double elapsed_sec = 0.0;
};

struct RunSummary {
  std::size_t total = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  double wall_sec = 0.0;
};

RunSummary summarize(std::span<const IdentityReport> reports);

// One line per instance plus a summary line. Timing never appears here so
// stdout is reproducible across runs and worker counts.
std::string render_reports_text(std::span<const IdentityReport> reports);

// JSON report: {"config": {...}, "instances": [{identity, params, verdict,
// diff?}...], "summary": {total, passes, failures}}. Deterministic: keys are
// sorted and every value is an integer or string, so parse + re-dump is
// byte-identical.
std::string render_reports_json(
    const std::vector<std::pair<std::string, std::string>>& config,
    std::span<const IdentityReport> reports);

}  // namespace symid
