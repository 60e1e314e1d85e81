#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

#include "ikeda/quadform.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run engine(const std::string& args) {
  const char* exe = std::getenv("IKEDA_ENGINE");
  REQUIRE_MESSAGE(exe != nullptr, "IKEDA_ENGINE is not set");
  std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("lift") {
  CHECK(engine("lift --kappa 7 --degree 2").code == 2);
  CHECK(engine("lift --kappa 9 --degree 3").code == 2);
  CHECK(engine("lift --kappa 12 --degree 4").code == 2);
  Run r = engine("lift --kappa 9 --degree 2 --max-det 50 --format json");
  REQUIRE(r.code == 0);
  auto doc = parse(r);
  CHECK(doc["weight"] == 10);
  CHECK(doc["records"].size() == ikeda::enumerate_binary(50).size());
  CHECK(doc["records"][0]["gram"] == "2,1;1,2");
  CHECK(doc["records"][0]["a"] == "1");
  CHECK(engine("lift --kappa 9 --degree 2 --max-det 50 --format json --jobs 3").out == r.out);

  Run csv = engine("lift --kappa 9 --degree 2 --max-det 10 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("gram,det2T,D,d,f,c_arg,a\n\"2,1;1,2\",3,-3,-3,1,3,1\n", 0) == 0);

  Run s = engine("lift --kappa 6 --degree 4 --max-trace 8");
  REQUIRE(s.code == 0);
  CHECK(parse(s)["records"].size() == ikeda::enumerate_by_trace(4, 8).size());
}

TEST_CASE("verify") {
  Run f = engine("verify --suite funceq --kappa 9 --degree 2 --max-det 200");
  CHECK(f.code == 0);
  CHECK(parse(f)["failures"].empty());
  Run m = engine("verify --suite maass --kappa 9 --max-det 200");
  CHECK(m.code == 0);
  CHECK(parse(m)["suite"] == "maass");
  CHECK(parse(m)["cases"].get<long>() > 300);
  CHECK(engine("verify --suite shimura --kappa 11 --limit 100").code == 0);
  CHECK(engine("verify --suite invariance --kappa 9 --degree 2 --max-det 40 --samples 5").code == 0);
  CHECK(engine("verify --suite oracle --max-det 30").code == 0);
  CHECK(engine("verify --suite nonsense").code == 2);
  CHECK(engine("verify").code == 2);
}

TEST_CASE("kohnen") {
  Run r = engine("kohnen --kappa 9 --sign -1 --limit 100");
  REQUIRE(r.code == 0);
  auto doc = parse(r);
  CHECK(doc["coeffs"][0]["t"] == 3);
  CHECK(doc["coeffs"][0]["c"] == "1");
  CHECK(doc["coeffs"][1]["t"] == 4);
  CHECK(engine("kohnen --kappa 9 --sign 1 --limit 100").code == 2);
  CHECK(engine("kohnen --kappa 14 --sign 1").code == 2);
}

TEST_CASE("siegel") {
  Run r = engine("siegel -p 2 --gram \"2,0;0,8\" --oracle");
  REQUIRE(r.code == 0);
  auto doc = parse(r);
  CHECK(doc["coeffs"] == nlohmann::json::array({1, 0, 8}));
  CHECK(doc["degree"] == 2);
  CHECK(doc["oracle_checked"] == true);
  CHECK(doc["gram"] == "2,0;0,8");
  CHECK(parse(engine("siegel -p 2 --gram \"2,0;0,8\""))["oracle_checked"] == false);
  CHECK(engine("siegel -p 4 --gram \"2,0;0,8\"").code == 2);
  CHECK(engine("siegel -p 2 --gram \"3,0;0,8\"").code == 2);
  CHECK(engine("siegel -p 2").code == 2);
}

TEST_CASE("theta") {
  Run r = engine("theta --lattice e8e8 --norm 2");
  REQUIRE(r.code == 0);
  CHECK(parse(r)["count"] == "480");
  CHECK(parse(engine("theta --lattice d16p --gram \"2,1;1,2\""))["count"] == "26880");
  CHECK(engine("theta --lattice leech --norm 2").code == 2);
  CHECK(engine("theta --lattice e8e8 --norm 10").code == 2);
  CHECK(engine("theta --lattice e8e8").code == 2);
}
