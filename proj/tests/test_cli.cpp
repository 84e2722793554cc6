#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "yang/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "yang");
  std::ostringstream out, err;
  const int code = yang::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("apply") {
  const auto r = run({"apply", "--op", "x+", "--r", "1", "--w", "2", "--v", "1", "--f", "1"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "component 0: t1 + t2 + h");
  const auto j = run({"--output", "json", "apply", "--op", "h", "--r", "1", "--w", "2", "--v", "1", "--f", "1"});
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["v_out"] == 1);
  CHECK(parsed["result"] == "-t1 + t2 - h");
}

TEST_CASE("apply usage errors") {
  CHECK(run({"apply", "--op", "x+", "--r", "1", "--w", "2", "--v", "3", "--f", "1"}).code == 2);
  CHECK(run({"apply", "--op", "y", "--r", "1", "--w", "2", "--v", "1", "--f", "1"}).code == 2);
  const auto bad = run({"apply", "--op", "x+", "--r", "1", "--w", "2", "--v", "1", "--f", "t1 +"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"apply", "--op", "x+", "--r", "1", "--w", "2", "--v", "1", "--f", "t3"}).code == 2);
  CHECK(run({"apply", "--op", "x+", "--r", "1", "--w", "2", "--v", "0", "--f", "t1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--w", "2", "--max-deg", "2", "--max-r", "2", "--relations", "1.3"});
  CHECK(r.code == 0);
  const auto json_line = r.out.substr(r.out.find('['));
  const auto j = nlohmann::json::parse(json_line);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["relation"] == "1.3");
  CHECK(j[0]["failures"].empty());
  CHECK(run({"verify", "--w", "1", "--relations", "1.7"}).code == 2);
}

TEST_CASE("cartan-matrix reads a graph file") {
  const auto path = std::string(YANG_TEST_DATA_DIR) + "/a2.edges";
  const auto r = run({"cartan-matrix", "--graph", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("[[2,-1],[-1,2]]") != std::string::npos);
  CHECK(run({"cartan-matrix", "--graph", "/nonexistent/graph"}).code == 2);
}

TEST_CASE("eta-compare and hilbert") {
  CHECK(run({"eta-compare", "--a", "-1", "--max-r", "2", "--pad", "1", "--expect", "equal"}).code == 0);
  CHECK(run({"eta-compare", "--a", "0", "--max-r", "2", "--expect", "equal"}).code == 1);
  CHECK(run({"eta-compare", "--a", "1"}).code == 2);
  const auto h = run({"--output", "json", "hilbert", "--w", "2", "--v", "1", "--max-deg", "3"});
  CHECK(h.code == 0);
  const auto j = nlohmann::json::parse(h.out);
  CHECK(j["coefficients"] == nlohmann::json::array({1, 3, 6, 10}));
  CHECK(j["basis"].size() == 20);
}

TEST_CASE("cartan-series") {
  const auto r = run({"cartan-series", "--w", "1", "--v", "0", "--N", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "kappa_0 = 1\nkappa_1 = t1\nkappa_2 = t1^2\n");
}
