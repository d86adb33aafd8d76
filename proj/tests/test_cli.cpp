// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "cli.hpp"
#include "semilinear/json_io.hpp"

namespace fs = std::filesystem;
using semilinear::json_io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = semilinear::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("semilin-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

constexpr const char* kEven = R"({"k":1,"components":[{"constants":[[0]],"periods":[[2]]}]})";
constexpr const char* kMult3 = R"({"k":1,"components":[{"constants":[[0]],"periods":[[3]]}]})";

}  // namespace

TEST_CASE("cli set operations") {
  Workspace ws;
  const std::string even = ws.write("even.json", kEven);
  const std::string mult3 = ws.write("mult3.json", kMult3);

  SUBCASE("intersect") {
    const Result r = run({"intersect", even, mult3, "--json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["result"] == Json::parse(R"({"k":1,"components":[{"constants":[[0]],"periods":[[6]]}]})"));
    CHECK(j["metrics"]["max_period_norm"] == 6);
    CHECK(r.out.find('\n') == r.out.size() - 1);
  }
  SUBCASE("member") {
    const Result r = run({"member", "--point", "[7]", even});
    CHECK(r.code == 0);
    CHECK(r.out == "false\n");
  }
  SUBCASE("certify a transcript") {
    const std::string t = ws.path("t.json");
    CHECK(run({"intersect", even, mult3, "--transcript", t}).code == 0);
    const Result r = run({"certify", t});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["status"] == "CERTIFIED");
  }
  SUBCASE("complement with report") {
    const Result r = run({"complement", even, "--report", "--json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["result"] == Json::parse(R"({"k":1,"components":[{"constants":[[1]],"periods":[[2]]}]})"));
    CHECK(j["report"]["status"] == "CERTIFIED");
  }
  SUBCASE("preimage") {
    const std::string h = ws.write("h.json", R"({"H":[[1,1]]})");
    const Result r = run({"preimage", h, even, "--json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["result"]["k"] == 2);
  }
  SUBCASE("stdin input") {
    const Result r = run({"parse", "-", "--json"}, kEven);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["result"] == Json::parse(kEven));
  }
  SUBCASE("enumerate and eq") {
    CHECK(run({"enumerate", "--box", "7", even, "--json"}).out == "[[0],[2],[4],[6]]\n");
    const Result eq = run({"eq", "--box", "5", even, mult3, "--json"});
    CHECK(eq.out == "{\"equal\":false,\"witness\":[2]}\n");
  }
  SUBCASE("hilbert") {
    const std::string sys = ws.write("sys.json", R"({"A":[[2,-3]],"b":[0]})");
    const Json j = Json::parse(run({"hilbert", sys}).out);
    CHECK(j["hilbert_basis"] == Json::parse("[[3,2]]"));
    CHECK(j["norm_bound_used"] == 9);
  }
}

TEST_CASE("cli exit codes") {
  Workspace ws;
  const std::string even = ws.write("even.json", kEven);
  const std::string plane = ws.write("plane.json", R"({"k":2,"components":[{"constants":[[0,0]],"periods":[[1,1]]}]})");
  const std::string bad = ws.write("bad.json", R"({"k":1,"components":[{"constants":[[-1]]}]})");

  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  const Result mismatch = run({"union", even, plane});
  CHECK(mismatch.code == 1);
  CHECK(Json::parse(mismatch.err)["error"] == "dimension_mismatch");
  const Result schema = run({"parse", bad});
  CHECK(schema.code == 1);
  CHECK(Json::parse(schema.err)["error"] == "invalid_input");
  CHECK(run({"parse", ws.path("missing.json")}).code == 1);

  const Result limit = run({"complement", plane, "--max-components", "1"});
  CHECK(limit.code == 2);
  const Json e = Json::parse(limit.err);
  CHECK(e["error"] == "resource_limit");
  CHECK(e.contains("stage"));

  const std::string forged = ws.write("forged.json", R"({"op":"union","inputs":[)" + std::string(kEven) + "," + kEven +
                                                         R"(],"output":{"k":1,"components":[{"constants":[[0]],"periods":[[2]]},{"constants":[[1]],"periods":[[2]]},{"constants":[[3]],"periods":[[2]]}]}})");
  const Result violated = run({"certify", forged});
  CHECK(violated.code == 3);
  CHECK(Json::parse(violated.out)["status"] == "VIOLATED");
}

TEST_CASE("cli output is deterministic") {
  Workspace ws;
  const std::string plane = ws.write("plane.json",
                                     R"({"k":2,"components":[{"constants":[[1,0],[0,2]],"periods":[[1,2],[2,1],[1,1]]}]})");
  const Result a = run({"complement", plane, "--report", "--threads", "1"});
  const Result b = run({"complement", plane, "--report", "--threads", "4"});
  const Result c = run({"complement", plane, "--report", "--threads", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  const Result r1 = run({"random", "--seed", "7", "--dimension", "2"});
  const Result r2 = run({"random", "--seed", "7", "--dimension", "2"});
  CHECK(r1.out == r2.out);
  const std::string roundtrip = ws.write("r.json", r1.out);
  const Result parsed = run({"parse", roundtrip});
  CHECK(Json::parse(parsed.out)["result"] == Json::parse(r1.out));
}
