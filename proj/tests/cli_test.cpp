#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "valueset/errors.hpp"

using namespace valueset;
using namespace valueset::cli;

namespace {

RunConfig make(std::string command, std::string poly, std::optional<std::string> modulus = std::nullopt) {
  RunConfig c;
  c.command = std::move(command);
  c.poly = std::move(poly);
  c.modulus = std::move(modulus);
  c.workers = 1;
  return c;
}

}  // namespace

TEST_CASE("number formatting and window parsing") {
  CHECK(number(1.0 / 3.0).dump() == "0.333333333333");
  CHECK(number(4.375).dump() == "4.375");
  CHECK(number(std::nan("")).is_null());
  CHECK(integer(mpz_class("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(integer(mpz_class(-7)) == -7);

  const auto box = parse_window("-1/2:0.75,0:1");
  REQUIRE(box.size() == 2);
  CHECK(box[0].lo == mpq_class(-1, 2));
  CHECK(box[0].hi == mpq_class(3, 4));
  CHECK(box[1].hi == 1);
  CHECK_THROWS_AS(parse_window("1"), InvalidInput);
  CHECK_THROWS_AS(parse_window("a:b"), InvalidInput);
  CHECK_THROWS_AS(parse_window("1/0:2"), InvalidInput);
  CHECK(parse_i64_list("1,-2,3") == std::vector<std::int64_t>{1, -2, 3});
  CHECK_THROWS_AS(parse_u64_list("1,,2"), InvalidInput);
}

TEST_CASE("image") {
  const Outcome o = run(make("image", "x^2", "105"));
  CHECK(o.exit_code == kOk);
  CHECK(o.report["omega_size"] == 24);
  CHECK(o.report["s_q"]["exact"] == "35/8");
  CHECK(o.report["s_q"]["value"] == 4.375);
  CHECK(o.report["per_prime"].size() == 3);
  CHECK(o.report["version"] == version());
  CHECK(o.report["config"]["modulus"]["q"] == 105);

  const Outcome id = run(make("image", "x", "7"));
  CHECK(id.report["per_prime"][0]["is_permutation"] == true);

  const Outcome bad = run(make("image", "x^2", "12"));
  CHECK(bad.exit_code == kInvalid);
  CHECK(bad.report["error"]["kind"] == "invalid_input");

  CHECK(run(make("image", "x^^2", "15")).exit_code == kInvalid);
  CHECK(run(make("image", "x^2")).exit_code == kInvalid);
  RunConfig unknown = make("plot", "x");
  CHECK(run(unknown).exit_code == kInvalid);
}

TEST_CASE("correlate") {
  RunConfig c = make("correlate", "x^2", "105");
  c.k = 2;
  c.window = "0:1";
  const Outcome o = run(c);
  CHECK(o.exit_code == kOk);
  CHECK(o.report["R_k"]["exact"] == "7/12");
  CHECK(o.report["volume"]["exact"] == "1");
  CHECK(o.report["lattice_points"] == 4);
  CHECK(o.report["reduction"]["reduced"] == false);

  c.window = "1/10:1/5";
  CHECK(run(c).report["R_k"]["exact"] == "0");

  RunConfig cube = make("correlate", "x^3", "105");
  cube.window = "0:1";
  const Outcome r = run(cube);
  CHECK(r.report["reduction"]["reduced"] == true);
  CHECK(r.report["reduction"]["q1"]["q"] == 7);

  c.window = "1:1";
  CHECK(run(c).exit_code == kInvalid);
  c.window = "0:1,0:1";  // dimension 2 disagrees with k = 2
  CHECK(run(c).exit_code == kInvalid);
  c.k.reset();
  c.window = "0:100000";
  c.cap_bits = 10;
  CHECK(run(c).exit_code == kCap);

  RunConfig id = make("correlate", "x", "15");
  id.window = "0:1";
  CHECK(run(id).exit_code == kInvalid);
}

TEST_CASE("spacings") {
  RunConfig c = make("spacings", "x^2", "15015");
  c.bins = 20;
  const Outcome o = run(c);
  CHECK(o.exit_code == kOk);
  CHECK(o.report["gap_frequency"].size() == 10);
  CHECK(o.report["histogram"]["total"] == o.report["gaps"]);
  std::istringstream csv(o.csv);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "bin_left,bin_right,count,density,exp_reference");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 20);

  CHECK(run(make("spacings", "x", "15")).report["error"]["kind"] == "degenerate");
  c.cap_bits = 100;
  CHECK(run(c).exit_code == kCap);

  RunConfig csv_image = make("image", "x^2", "15");
  csv_image.format = Format::csv;
  CHECK(run(csv_image).exit_code == kInvalid);
}

TEST_CASE("critical") {
  const Outcome quartic = run(make("critical", "x^4-2x^2"));
  CHECK(quartic.report["rtilde_infinity"]["elements"] == Json::array({-1, 0, 1}));
  CHECK(run(make("critical", "x^2")).report["rtilde_infinity"]["elements"] == Json::array({0}));

  RunConfig c = make("critical", "x^4-2x^2");
  c.primes = {7};
  const Outcome mod7 = run(c);
  CHECK(mod7.report["mod_p"][0]["rtilde_p"]["elements"] == Json::array({0, 1, 6}));
  CHECK(mod7.report["C"]["text"] == "y^3+2y^2+y");

  c.primes = {3};  // p <= deg f
  const Outcome wild = run(c);
  CHECK(wild.exit_code == kOk);
  CHECK(wild.report["mod_p"][0]["rtilde_p"]["approximate"] == true);

  CHECK(run(make("critical", "x")).report["error"]["kind"] == "degenerate");
}

TEST_CASE("nk") {
  RunConfig c = make("nk", "x^2", "105");
  c.offsets = {1};
  const Outcome o = run(c);
  CHECK(o.report["n_k"] == 4);
  CHECK(o.report["k"] == 2);
  c.offsets.clear();
  CHECK(run(c).exit_code == kInvalid);
}

TEST_CASE("verify suites") {
  RunConfig m;
  m.command = "verify";
  m.suite = "multiplicativity";
  m.workers = 1;
  const Outcome o = run(m);
  CHECK(o.exit_code == kOk);
  CHECK(o.report["pass"] == true);
  CHECK(o.report["checks"].size() == 3);

  RunConfig id = m;
  id.suite = "identities";
  id.primes = {5, 7, 11};
  CHECK(run(id).exit_code == kOk);

  RunConfig an = m;
  an.suite = "anomaly";
  an.poly = "x^4-2x^2";
  an.primes = {10007};
  const Outcome a = run(an);
  CHECK(a.exit_code == kOk);
  CHECK(a.report["checks"][0]["measured"]["class_mod_4"] == 3);
  CHECK(a.report["checks"][0]["measured"]["target"] == "4/3");

  RunConfig fail = m;
  fail.suite = "poisson";
  fail.primes = {3, 5, 7, 11, 13};
  CHECK(run(fail).exit_code == kVerifyFailed);

  RunConfig bogus = m;
  bogus.suite = "everything";
  CHECK(run(bogus).exit_code == kInvalid);
}

TEST_CASE("reports do not depend on the worker count") {
  std::vector<RunConfig> configs;
  configs.push_back(make("image", "x^4+x", "111546435"));
  RunConfig corr = make("correlate", "x^2", "1155");
  corr.window = "0:2,0:2";
  configs.push_back(corr);
  configs.push_back(make("spacings", "x^3-3x", "15015"));
  RunConfig v;
  v.command = "verify";
  v.suite = "c0";
  v.primes = {1009, 1013, 1019, 1021};
  configs.push_back(v);
  for (RunConfig c : configs) {
    c.workers = 1;
    const Outcome serial = run(c);
    c.workers = 4;
    const Outcome threaded = run(c);
    CAPTURE(c.command);
    CHECK(serial.report.dump() == threaded.report.dump());
    CHECK(serial.csv == threaded.csv);
  }
}
