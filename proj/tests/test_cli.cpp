// End-to-end tests against the symid binary; the path comes from the
// SYMID_BIN environment variable (set by CTest).

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
  const char* env = std::getenv("SYMID_BIN");
  REQUIRE_MESSAGE(env != nullptr, "SYMID_BIN must point at the symid binary");
  return env;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("exit code 0 on an all-pass grid") {
  const RunResult r = run("verify --identity eq25 --n 2..6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("failures=0") != std::string::npos);
}

TEST_CASE("exit code 1 on a failing instance") {
  const RunResult r = run("verify --identity eq28 --n 5 --q 3");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL diff=-1") != std::string::npos);
  CHECK(r.out.find("corrected reading C(n-1,q-2) holds") != std::string::npos);
}

TEST_CASE("exit code 2 on usage errors") {
  CHECK(run("verify --identity nosuch --n 3").exit_code == 2);
  CHECK(run("verify --identity eq12").exit_code == 2);           // missing --n
  CHECK(run("verify --identity eq12 --n 5..2").exit_code == 2);  // empty range
  CHECK(run("verify --identity eq12 --n 0..3").exit_code == 2);  // below bound
  CHECK(run("verify --identity eq12 --n 2..13").exit_code == 2);  // above bound
  CHECK(run("verify --identity eq25 --n 3 --p 1 --q 1").exit_code == 2);  // domain
  CHECK(run("verify --identity eq11 --n 3 --p 2").exit_code == 2);  // unused param
  CHECK(run("derive --n 4 --degrees 5,2").exit_code == 2);
  CHECK(run("derive --n 4 --degrees 2").exit_code == 2);
  CHECK(run("table qbinom --n 13").exit_code == 2);
  CHECK(run("table nosuch --n 3").exit_code == 2);
}

TEST_CASE("json output round-trips byte-identically") {
  const RunResult r = run("verify --identity eq12 --n 2..3 --format json");
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed.at("config").at("identity") == "eq12");
  CHECK(parsed.at("summary").at("failures") == 0);
  CHECK(parsed.at("instances").size() == 7);
  CHECK(parsed.dump(2) + "\n" == r.out);

  // failing instances carry a diff field
  const RunResult f = run("verify --identity eq28 --n 5 --q 3 --format json");
  CHECK(f.exit_code == 1);
  const auto fparsed = nlohmann::json::parse(f.out);
  CHECK(fparsed.at("instances").at(0).at("verdict") == "fail");
  CHECK(fparsed.at("instances").at(0).at("diff") == "-1");
  CHECK(fparsed.dump(2) + "\n" == f.out);
}

TEST_CASE("output does not depend on the worker count") {
  const std::string args = "verify --identity eq25 --n 2..5 --format json";
  const RunResult one = run(args + " --workers 1");
  const RunResult four = run(args + " --workers 4");
  CHECK(one.exit_code == 0);
  CHECK(one.out == four.out);

  const RunResult via_env = run(args, "SYMID_WORKERS=2 ");
  CHECK(via_env.out == one.out);

  const RunResult text_one = run("verify --identity eq12 --n 2..6 --workers 1");
  const RunResult text_many = run("verify --identity eq12 --n 2..6 --workers 8");
  CHECK(text_one.out == text_many.out);

  CHECK(run(args, "SYMID_WORKERS=abc ").exit_code == 2);
  CHECK(run(args + " --workers 0").exit_code == 2);
}

TEST_CASE("derive subcommand") {
  const RunResult r = run("derive --n 4 --degrees 2,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("-2*e2*e0 + 3*e1*e1") != std::string::npos);
  CHECK(r.out.find("oracle: pass") != std::string::npos);

  const RunResult trivial = run("derive --n 3 --degrees 1,1");
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.out.find("3*e0*e0") != std::string::npos);

  const RunResult triple = run("derive --n 5 --degrees 3,2,2");
  CHECK(triple.exit_code == 0);
  CHECK(triple.out.find("-4*e4*e0*e0 - 5*e3*e1*e0 + 3*e2*e1*e1") != std::string::npos);

  const RunResult js = run("derive --n 4..5 --degrees 2,2 --format json");
  CHECK(js.exit_code == 0);
  const auto parsed = nlohmann::json::parse(js.out);
  CHECK(parsed.at("derivations").size() == 2);
  CHECK(parsed.at("derivations").at(0).at("oracle") == "pass");
  CHECK(parsed.dump(2) + "\n" == js.out);
}

TEST_CASE("table subcommand") {
  const RunResult qb = run("table qbinom --n 4");
  CHECK(qb.exit_code == 0);
  CHECK(qb.out.find("[4,2] = 1 + q + 2*q^2 + q^3 + q^4") != std::string::npos);

  const RunResult es = run("table esym --n 3");
  CHECK(es.exit_code == 0);
  CHECK(es.out.find("e_0 = 1") != std::string::npos);
  CHECK(es.out.find("e_3 = x1*x2*x3") != std::string::npos);

  const RunResult zero = run("table qbinom --n 0");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out == "[0,0] = 1\n");
}

TEST_CASE("list subcommand names the full catalog") {
  const RunResult r = run("list");
  CHECK(r.exit_code == 0);
  for (const char* id : {"eq11", "eq12", "eq14", "eq17", "eq19", "eq24", "eq25",
                         "eq26", "eq27", "eq28", "eq29", "triple"}) {
    CHECK(r.out.find(id) != std::string::npos);
  }
}
