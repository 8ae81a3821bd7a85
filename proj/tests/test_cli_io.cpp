#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "doctest.h"

#include "test_support.hpp"
#include "ca/bad_primes.hpp"
#include "ca/cache.hpp"
#include "ca/error.hpp"
#include "ca/poly_format.hpp"
#include "ca/report.hpp"
#include "ca/structure.hpp"
#include "ca/sylvester.hpp"

using namespace ca;
namespace fs = std::filesystem;

namespace {

fs::path freshDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("ca-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cache round trip") {
  fs::path dir = freshDir("cache");
  ResultantCache cache(dir);
  CHECK(cache.pathFor(4, 3, Ring::integers()).filename() == "R_d4_i3_Z.capoly");
  CHECK(cache.pathFor(4, 3, Ring::modulo(5)).filename() == "R_d4_i3_F5.capoly");
  CHECK_FALSE(cache.load(4, 3, Ring::integers()).has_value());

  for (unsigned d = 2; d <= 6; ++d)
    for (unsigned i = 1; i < d; ++i) {
      MultiPoly r = resultantRi(d, i);
      fs::path p = cache.store(d, i, r);
      CHECK(p == cache.pathFor(d, i, Ring::integers()));
      CHECK(slurp(p) == formatPoly(r));
      auto back = cache.load(d, i, Ring::integers());
      REQUIRE(back.has_value());
      CHECK(*back == r);
    }

  MultiPoly r3 = resultantRi(4, 3, Ring::modulo(3));
  cache.store(4, 3, r3);
  CHECK(*cache.load(4, 3, Ring::modulo(3)) == r3);

  // A file holding the wrong variable count is rejected, not silently used.
  writeFileAtomically(cache.pathFor(5, 1, Ring::integers()), formatPoly(resultantRi(4, 1)));
  CHECK_THROWS_AS(cache.load(5, 1, Ring::integers()), StructuralError);
  fs::remove_all(dir);
}

TEST_CASE("writeFileAtomically under concurrent writers") {
  fs::path dir = freshDir("atomic");
  fs::path target = dir / "shared.txt";
  std::string a(200000, 'a'), b(200000, 'b');
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      for (int k = 0; k < 10; ++k) writeFileAtomically(target, t % 2 ? a : b);
    });
  for (auto& th : pool) th.join();
  std::string got = slurp(target);
  CHECK((got == a || got == b));
  std::size_t leftovers = 0;
  for (const auto& e : fs::directory_iterator(dir)) leftovers += e.path() != target;
  CHECK(leftovers == 0);
  fs::remove_all(dir);
}

TEST_CASE("run report JSON") {
  RunReport run;
  run.command = "verify";
  run.params["d"] = 4;
  appendClaims(run, checkTheorem(4, 2));
  run.files.push_back("x.capoly");
  run.elapsedMs = 0;
  Json j = run.toJson();

  std::vector<std::string> top;
  for (auto it = j.begin(); it != j.end(); ++it) top.push_back(it.key());
  CHECK(top == std::vector<std::string>{"command", "params", "claims", "findings", "files", "elapsed_ms"});
  REQUIRE(j["claims"].size() == 7);
  for (const auto& c : j["claims"]) {
    CHECK(c["status"] == "pass");
    CHECK(c["name"].get<std::string>().find("[d=4,i=2]") != std::string::npos);
    CHECK(c.contains("expected"));
    CHECK(c.contains("actual"));
  }
  CHECK(run.allPass());
  CHECK(run.toJson().dump(2) == j.dump(2));

  run.claims.push_back({"extra", false, "1", "2"});
  CHECK_FALSE(run.allPass());
  CHECK(run.toJson()["claims"].back()["status"] == "fail");
}

TEST_CASE("big numbers are strings") {
  Json j = toJson(badPrimes(68));
  std::string dumped = j.dump();
  CHECK(dumped.find("\"28453041475240576739\"") != std::string::npos);
  Json t = toJson(checkTheorem(6, 3));
  CHECK(t["expected_pure_power_coefficient"].is_string());
}
