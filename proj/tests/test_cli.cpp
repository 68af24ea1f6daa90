#include "doctest.h"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "potentia/cli.hpp"

using namespace potentia;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_row(const Json& rows, std::size_t p, std::size_t d, std::size_t dim) {
  for (const auto& r : rows)
    if (r[0] == p && r[1] == d) return r[2] == dim;
  return false;
}

}  // namespace

TEST_CASE("classify") {
  auto r = run({"classify", "--matrix", R"([[ "-1","-1"],["1","0"]])"});
  CHECK(r.code == 0);
  CHECK(r.json()["type"] == "jordan");
  CHECK(run({"classify", "--preset", "classical"}).json()["type"] == "classical");
  auto q = run({"classify", "--preset", "quantum", "--q", "1/2"}).json();
  CHECK(q["type"] == "quantum");
  CHECK(q["q"] == "2");
  CHECK(q["invariant"] == "5/2");
  CHECK(q["input"]["q"] == "1/2");
  CHECK(run({"classify", "--matrix", "[[1,0],[0,0]]"}).json()["type"] == "degenerate");
}

TEST_CASE("hilbert") {
  auto r = run({"hilbert", "--preset", "jordan", "--max-degree", "5"});
  CHECK(r.code == 0);
  CHECK(r.json()["hilbert"] == Json::array({1, 3, 6, 10, 15, 21}));
  auto free3 = run({"hilbert", "--matrix", "[[0,0],[0,0]]", "--max-degree", "3"}).json();
  CHECK(free3["hilbert"] == Json::array({1, 3, 9, 27}));
}

TEST_CASE("homology tables") {
  auto hh = run({"homology", "hochschild"}).json();
  CHECK(has_row(hh["tables"]["HH"], 1, 2, 5));
  CHECK(has_row(hh["tables"]["HH"], 3, 6, 1));
  auto hp = run({"homology", "poisson", "--max-degree", "6"}).json();
  CHECK(hp["tables"]["HP"].size() == 4 * 7);
  CHECK(has_row(hp["tables"]["HP"], 0, 3, 5));
  auto hphi = run({"homology", "koszulphi", "--max-degree", "5"}).json();
  CHECK(has_row(hphi["tables"]["Hphi"], 1, 5, 4));
  CHECK(has_row(hphi["tables"]["Hphi"], 0, 4, 0));
  auto q = run({"homology", "poisson", "--preset", "quantum:2", "--max-degree", "3"}).json();
  CHECK(has_row(q["tables"]["HP"], 0, 3, 4));
  CHECK(run({"homology", "poisson", "--matrix", "[[1,0,0],[0,1,0],[0,0,1]]"}).code == 2);
  CHECK(run({"homology", "hochschild", "--matrix", "[[1,0,0],[0,1,0],[0,0,1]]", "--max-degree", "3"}).code == 0);
}

TEST_CASE("verify") {
  for (const char* v : {"euler", "hessian", "confluence", "center", "duality", "gr", "lifts", "quantum", "basischange"}) {
    auto r = run({"verify", v, "--max-degree", "6"});
    CHECK_MESSAGE(r.code == 0, v);
    CHECK_FALSE(r.json()["checks"].empty());
  }
  auto lifts = run({"verify", "lifts", "--max-degree", "8"});
  CHECK(lifts.code == 0);
  CHECK(lifts.json()["lifts"].size() == 116);

  // the listed basis misses two classes in degree 2
  auto deg = run({"verify", "degeneration"});
  CHECK(deg.code == 1);
  bool seen = false;
  auto dj = deg.json();
  for (const auto& c : dj["checks"])
    if (c["name"] == "HH(B) = listed basis counts") {
      seen = true;
      CHECK(c["pass"] == false);
    } else {
      CHECK(c["pass"] == true);
    }
  CHECK(seen);
  CHECK(run({"verify", "quantum", "--q", "3", "--max-degree", "6"}).code == 0);
  CHECK(run({"verify", "euler", "--preset", "quantum:5", "--max-degree", "4"}).code == 0);
}

TEST_CASE("bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "nothing"}).code == 2);
  CHECK(run({"hilbert", "--max-degree", "1"}).code == 2);
  CHECK(run({"hilbert", "--max-degree", "x"}).code == 2);
  CHECK(run({"hilbert", "--matrix", "[[1,2,3]]"}).code == 2);
  CHECK(run({"hilbert", "--matrix", "[[1.5,0],[0,1]]"}).code == 2);
  CHECK(run({"hilbert", "--matrix", "not json"}).code == 2);
  CHECK(run({"hilbert", "--preset", "nope"}).code == 2);
  CHECK(run({"hilbert", "--preset", "jordan", "--matrix", "[[1]]"}).code == 2);
  CHECK(run({"hilbert", "--matrix-file", "/nonexistent/m.json"}).code == 2);
  CHECK(run({"hilbert", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "quantum", "--q", "1"}).code == 2);
  CHECK(run({"verify", "gr", "--preset", "classical"}).code == 2);
  CHECK(run({"classify", "--matrix", "[[1,0,0],[0,1,0],[0,0,1]]"}).code == 2);
  auto e = run({"hilbert", "--max-degree", "1"});
  CHECK(e.err.find("at least 2") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("environment, files and formats") {
  ::setenv("POTENTIA_MAX_DEGREE", "4", 1);
  CHECK(run({"hilbert"}).json()["hilbert"].size() == 5);
  CHECK(run({"hilbert", "--max-degree", "2"}).json()["hilbert"].size() == 3);
  ::setenv("POTENTIA_MAX_DEGREE", "1", 1);
  CHECK(run({"hilbert"}).code == 2);
  ::unsetenv("POTENTIA_MAX_DEGREE");
  CHECK(run({"hilbert"}).json()["input"]["max_degree"] == 8);

  auto dir = std::filesystem::temp_directory_path();
  auto mfile = dir / "potentia_test_matrix.json";
  std::ofstream(mfile) << R"({"matrix": [["-1", "-1"], ["1", "0"]]})";
  auto r = run({"classify", "--matrix-file", mfile.string()});
  CHECK(r.json()["type"] == "jordan");
  auto out = dir / "potentia_test_out.json";
  CHECK(run({"hilbert", "--out", out.string(), "--max-degree", "3"}).code == 0);
  std::ifstream in(out);
  CHECK(Json::parse(in)["hilbert"] == Json::array({1, 3, 6, 10}));

  auto csv = run({"homology", "hochschild", "--format", "csv", "--max-degree", "3", "--no-timing"});
  CHECK(csv.out.find("table,p,d,dim\nHH,0,0,1\n") != std::string::npos);
  CHECK(csv.out.find("elapsed_ms,0") != std::string::npos);
  auto csv2 = run({"verify", "confluence", "--format", "csv"});
  CHECK(csv2.out.find("confluence,true,") != std::string::npos);
}

TEST_CASE("reports are reproducible") {
  auto a = run({"report", "--max-degree", "5", "--no-timing"});
  auto b = run({"report", "--max-degree", "5", "--no-timing"});
  CHECK(a.out == b.out);
  auto j = a.json();
  CHECK(j["elapsed_ms"] == 0);
  for (const char* k : {"input", "tables", "checks", "elapsed_ms"}) CHECK(j.contains(k));
  for (const auto& c : j["checks"]) {
    CHECK(c["name"].is_string());
    CHECK(c["pass"].is_boolean());
    CHECK(c["detail"].is_string());
  }
  CHECK(a.code == 1);  // the degree-2 omissions
  auto t = run({"report", "--preset", "quantum:2", "--max-degree", "5"});
  CHECK(t.code == 0);
  CHECK(t.json()["type"] == "quantum");
  CHECK(t.json()["elapsed_ms"].is_number());
}
