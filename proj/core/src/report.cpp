#include "symid/report.hpp"

#include <json.hpp>

#include <sstream>

namespace symid {

RunSummary summarize(std::span<const IdentityReport> reports) {
  RunSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    if (r.pass) {
      ++s.passes;
    } else {
      ++s.failures;
    }
    s.wall_sec += r.elapsed_sec;
  }
  return s;
}

std::string render_reports_text(std::span<const IdentityReport> reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.id;
    for (const auto& [k, v] : r.params) {
      os << " " << k << "=" << v;
    }
    if (r.pass) {
      os << ": pass";
    } else {
      os << ": FAIL diff=" << r.diff;
    }
    if (!r.note.empty()) {
      os << " (" << r.note << ")";
    }
    os << "\n";
  }
  const RunSummary s = summarize(reports);
  os << "total=" << s.total << " passes=" << s.passes << " failures=" << s.failures
     << "\n";
  return os.str();
}

std::string render_reports_json(
    const std::vector<std::pair<std::string, std::string>>& config,
    std::span<const IdentityReport> reports) {
  nlohmann::json root;
  root["config"] = nlohmann::json::object();
  for (const auto& [k, v] : config) {
    root["config"][k] = v;
  }
  root["instances"] = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json inst;
    inst["identity"] = r.id;
    inst["params"] = nlohmann::json::object();
    for (const auto& [k, v] : r.params) {
      inst["params"][k] = v;
    }
    inst["verdict"] = r.pass ? "pass" : "fail";
    if (!r.pass) {
      inst["diff"] = r.diff;
    }
    root["instances"].push_back(std::move(inst));
  }
  const RunSummary s = summarize(reports);
  root["summary"] = {{"total", s.total}, {"passes", s.passes}, {"failures", s.failures}};
  return root.dump(2) + "\n";
}

}  // namespace symid
