// symid: verify symmetric-function and (q-)binomial identities, derive the
// higher-order ones mechanically, and print exact tables.
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
// error. Reports go to stdout, diagnostics (including wall time) to stderr.

#include "symid/derive.hpp"
#include "symid/grid.hpp"
#include "symid/identities.hpp"
#include "symid/qbinomial.hpp"
#include "symid/report.hpp"
#include "symid/symmetric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kMaxN = 12;  // documented feasibility bound

struct RangeSpec {
  int lo = 0;
  int hi = 0;
  std::string raw;
};

RangeSpec parse_range(const std::string& text, const std::string& flag) {
  RangeSpec out;
  out.raw = text;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t pos = 0;
      out.lo = out.hi = std::stoi(text, &pos);
      if (pos != text.size()) {
        throw std::invalid_argument("trailing characters");
      }
    } else {
      std::size_t pos = 0;
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      out.lo = std::stoi(a, &pos);
      if (pos != a.size()) {
        throw std::invalid_argument("trailing characters");
      }
      out.hi = std::stoi(b, &pos);
      if (pos != b.size()) {
        throw std::invalid_argument("trailing characters");
      }
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("--" + flag + ": expected INT or LO..HI, got '" + text +
                                "'");
  }
  if (out.lo > out.hi) {
    throw std::invalid_argument("--" + flag + ": empty range '" + text + "'");
  }
  return out;
}

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(piece, &pos));
      if (pos != piece.size()) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("--degrees: expected comma-separated integers, got '" +
                                  text + "'");
    }
  }
  if (out.size() != 2 && out.size() != 3) {
    throw std::invalid_argument("--degrees: expected 2 or 3 degrees");
  }
  return out;
}

void require_feasible_n(const RangeSpec& n, int lo_min) {
  if (n.lo < lo_min || n.hi > kMaxN) {
    throw std::invalid_argument("--n: must stay within " + std::to_string(lo_min) +
                                ".." + std::to_string(kMaxN));
  }
}

int run_verify(const std::string& identity, const RangeSpec& n,
               const std::optional<RangeSpec>& p, const std::optional<RangeSpec>& q,
               const std::optional<RangeSpec>& r, std::optional<int> cutoff,
               const std::string& format, std::optional<int> workers_flag) {
  if (!symid::is_catalog_id(identity)) {
    throw std::invalid_argument("unknown identity '" + identity + "'");
  }
  require_feasible_n(n, 1);
  const auto to_range = [](const std::optional<RangeSpec>& s) {
    return s ? std::optional<symid::IntRange>({s->lo, s->hi}) : std::nullopt;
  };
  const auto instances = symid::expand_instances(identity, {n.lo, n.hi}, to_range(p),
                                                 to_range(q), to_range(r), cutoff);
  const int workers = symid::resolve_worker_count(workers_flag);

  const auto start = std::chrono::steady_clock::now();
  const auto reports = symid::run_instances(instances, workers);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (format == "json") {
    std::vector<std::pair<std::string, std::string>> config{
        {"command", "verify"}, {"identity", identity}, {"n", n.raw}, {"format", format}};
    if (p) {
      config.emplace_back("p", p->raw);
    }
    if (q) {
      config.emplace_back("q", q->raw);
    }
    if (r) {
      config.emplace_back("r", r->raw);
    }
    if (cutoff) {
      config.emplace_back("cutoff", std::to_string(*cutoff));
    }
    std::cout << symid::render_reports_json(config, reports);
  } else {
    std::cout << symid::render_reports_text(reports);
  }
  std::cerr << "wall time: " << wall << " s\n";

  const symid::RunSummary summary = symid::summarize(reports);
  return summary.failures == 0 ? 0 : 1;
}

int run_derive(const RangeSpec& n, const std::vector<int>& degrees,
               const std::string& format) {
  require_feasible_n(n, 1);
  const auto start = std::chrono::steady_clock::now();

  bool all_pass = true;
  nlohmann::json json_out;
  std::ostringstream text_out;
  std::vector<nlohmann::json> items;
  for (int nv = n.lo; nv <= n.hi; ++nv) {
    const symid::DerivedIdentity d = symid::derive_identity(nv, degrees);
    const bool pass = symid::re_expand(d) == symid::brute_force_oracle(nv, degrees);
    all_pass = all_pass && pass;

    if (format == "json") {
      nlohmann::json item;
      item["n"] = nv;
      item["degrees"] = degrees;
      item["coefficients"] = nlohmann::json::array();
      for (const auto& [key, coeff] : d.coefficients) {
        item["coefficients"].push_back(
            {{"indices", key}, {"value", symid::to_string(coeff)}});
      }
      item["oracle"] = pass ? "pass" : "fail";
      items.push_back(std::move(item));
    } else {
      std::string degrees_text;
      for (std::size_t k = 0; k < degrees.size(); ++k) {
        degrees_text += (k ? "," : "") + std::to_string(degrees[k]);
      }
      text_out << "derive n=" << nv << " degrees=" << degrees_text << "\n";
      text_out << "  sum_i prod_k e^(i)_(d_k-1) = " << symid::render_coefficients(d)
               << "\n";
      text_out << "  oracle: " << (pass ? "pass" : "FAIL") << "\n";
    }
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (format == "json") {
    std::string degrees_text;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      degrees_text += (k ? "," : "") + std::to_string(degrees[k]);
    }
    std::size_t passes = 0;
    for (const auto& item : items) {
      if (item["oracle"] == "pass") {
        ++passes;
      }
    }
    json_out["config"] = {{"command", "derive"},
                          {"n", n.raw},
                          {"degrees", degrees_text},
                          {"format", format}};
    json_out["derivations"] = items;
    json_out["summary"] = {{"total", items.size()},
                           {"passes", passes},
                           {"failures", items.size() - passes}};
    std::cout << json_out.dump(2) << "\n";
  } else {
    std::cout << text_out.str();
  }
  std::cerr << "wall time: " << wall << " s\n";
  return all_pass ? 0 : 1;
}

int run_table(const std::string& kind, int n, const std::string& format) {
  if (kind == "qbinom") {
    if (n < 0 || n > kMaxN) {
      throw std::invalid_argument("--n: must stay within 0.." + std::to_string(kMaxN));
    }
    if (format == "json") {
      nlohmann::json root;
      root["config"] = {{"command", "table"},
                        {"kind", kind},
                        {"n", std::to_string(n)},
                        {"format", format}};
      root["rows"] = nlohmann::json::array();
      for (int k = 0; k <= n; ++k) {
        root["rows"].push_back({{"k", k}, {"value", symid::q_binomial(n, k).str()}});
      }
      std::cout << root.dump(2) << "\n";
    } else {
      for (int k = 0; k <= n; ++k) {
        std::cout << "[" << n << "," << k << "] = " << symid::q_binomial(n, k).str()
                  << "\n";
      }
    }
    return 0;
  }
  if (kind == "esym") {
    if (n < 1 || n > kMaxN) {
      throw std::invalid_argument("--n: must stay within 1.." + std::to_string(kMaxN));
    }
    const symid::SymTables tables = symid::build_tables(n);
    if (format == "json") {
      nlohmann::json root;
      root["config"] = {{"command", "table"},
                        {"kind", kind},
                        {"n", std::to_string(n)},
                        {"format", format}};
      root["rows"] = nlohmann::json::array();
      for (int rr = 0; rr <= n; ++rr) {
        root["rows"].push_back({{"r", rr}, {"value", tables.full.at(rr).str()}});
      }
      std::cout << root.dump(2) << "\n";
    } else {
      for (int rr = 0; rr <= n; ++rr) {
        std::cout << "e_" << rr << " = " << tables.full.at(rr).str() << "\n";
      }
    }
    return 0;
  }
  throw std::invalid_argument("table kind must be 'qbinom' or 'esym'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier and derivation engine for elementary symmetric "
               "function identities"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run one identity over a parameter grid");
  std::string identity;
  std::string n_text;
  std::string p_text, q_text, r_text;
  std::optional<int> cutoff;
  std::string format = "text";
  std::optional<int> workers;
  verify->add_option("--identity", identity, "Identity id (see --list)")->required();
  verify->add_option("--n", n_text, "Variable count, INT or LO..HI")->required();
  verify->add_option("--p", p_text, "Parameter p, INT or LO..HI");
  verify->add_option("--q", q_text, "Parameter q, INT or LO..HI");
  verify->add_option("--r", r_text, "Parameter r, INT or LO..HI");
  verify->add_option("--cutoff", cutoff, "Series cutoff (eq11/eq24)");
  verify->add_option("--format", format, "Output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--workers", workers, "Worker threads (default: SYMID_WORKERS or hardware)");

  // derive
  auto* derive = app.add_subcommand("derive", "Derive a deleted-sum identity");
  std::string d_n_text;
  std::string degrees_text;
  std::string d_format = "text";
  derive->add_option("--n", d_n_text, "Variable count, INT or LO..HI")->required();
  derive->add_option("--degrees", degrees_text, "2 or 3 comma-separated degrees")
      ->required();
  derive->add_option("--format", d_format, "Output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // table
  auto* table = app.add_subcommand("table", "Print exact tables");
  std::string kind;
  int table_n = 0;
  std::string t_format = "text";
  table->add_option("kind", kind, "qbinom|esym")->required();
  table->add_option("--n", table_n, "Table size")->required();
  table->add_option("--format", t_format, "Output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // list
  auto* list = app.add_subcommand("list", "List identity ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      const RangeSpec n = parse_range(n_text, "n");
      std::optional<RangeSpec> p, q, r;
      if (!p_text.empty()) {
        p = parse_range(p_text, "p");
      }
      if (!q_text.empty()) {
        q = parse_range(q_text, "q");
      }
      if (!r_text.empty()) {
        r = parse_range(r_text, "r");
      }
      return run_verify(identity, n, p, q, r, cutoff, format, workers);
    }
    if (derive->parsed()) {
      const RangeSpec n = parse_range(d_n_text, "n");
      return run_derive(n, parse_degrees(degrees_text), d_format);
    }
    if (table->parsed()) {
      return run_table(kind, table_n, t_format);
    }
    if (list->parsed()) {
      for (const auto& id : symid::catalog_ids()) {
        std::cout << id << "\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
