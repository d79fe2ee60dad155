#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl_cli/suite.hpp"

using namespace dunkl;
using namespace dunkl::cli;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("empty and failing results") {
  SuiteResult r;
  r.suite = "hardy";
  CHECK(r.pass());
  const auto j = summary_json(r);
  CHECK(j["pass"] == true);
  CHECK(j["details"].empty());

  r.details.push_back({"x", "sharp_l2_hardy", false, false, 0.01, nlohmann::json::object()});
  CHECK_FALSE(r.pass());
  CHECK(summary_json(r)["pass"] == false);

  SuiteResult skipped;
  skipped.details.push_back({"y", "t", true, true, 0.0, nlohmann::json::object()});
  CHECK(skipped.pass());
  skipped.append(r);
  CHECK(skipped.details.size() == 2);
  CHECK_FALSE(skipped.pass());
}

TEST_CASE("rounding") {
  CHECK(round_significant(0.1 + 0.2) == 0.3);
  CHECK(round_significant(123456.789, 4) == 123500.0);
  CHECK(round_significant(0.0) == 0.0);
  CHECK(round_significant(-2.0 / 3.0, 3) == doctest::Approx(-0.667));
}

TEST_CASE("configuration parsing") {
  CHECK(parse_suite("hardy-rellich") == Suite::HardyRellich);
  CHECK_THROWS_AS(parse_suite("rellich-hardy"), InvalidInput);
  const auto k = parse_multiplicities("0.5,1/3,2");
  REQUIRE(k.size() == 3);
  CHECK(k[0] == Rational(1, 2));
  CHECK(k[1] == Rational(1, 3));
  CHECK(k[2] == Rational(2));
  CHECK(parse_doubles("0.3, 0.1,0.01") == std::vector<double>{0.3, 0.1, 0.01});

  SuiteConfig base;
  base.rank = 3;
  base.tol = 1e-4;
  const auto c = config_from_json(nlohmann::json{{"family", "B"}, {"rank", 2}, {"k", "1,1/2"}, {"quad_order", 12}},
                                  base);
  CHECK(c.family == Family::B);
  CHECK(c.rank == 2);
  CHECK(c.tol == 1e-4);
  CHECK(c.quad_order == 12);
  CHECK(c.k == std::vector<Rational>{Rational(1), Rational(1, 2)});
  CHECK_NOTHROW(c.validate());
  CHECK(c.root_system().effective_dim() == doctest::Approx(2.0 + 2.0 * (2 * 1.0 + 2 * 0.5)));
  CHECK(c.hardy_p(4.0) == 5.0);

  const auto back = config_from_json(to_json(c));
  CHECK(back.family == c.family);
  CHECK(back.k == c.k);
  CHECK(back.eps == c.eps);

  SuiteConfig bad;
  bad.eps = {0.1, 0.3, 0.01};
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
  bad = SuiteConfig{};
  bad.family = Family::I2;
  bad.m = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
  bad = SuiteConfig{};
  bad.p = 1.0;
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
}

TEST_CASE("identities suite and report emission") {
  SuiteConfig cfg;
  cfg.suite = Suite::Identities;
  cfg.family = Family::Z2;
  cfg.rank = 2;
  cfg.k = {Rational(1, 2), Rational(1)};
  cfg.corpus = 5;
  cfg.max_degree = 3;
  const auto r = run_suite(cfg);
  CHECK(r.pass());
  CHECK_FALSE(r.details.empty());

  const auto dir = std::filesystem::temp_directory_path() / "dunkl_cli_test";
  std::filesystem::remove_all(dir);
  emit_report(r, dir / "a");
  emit_report(run_suite(cfg), dir / "b");
  CHECK(slurp(dir / "a" / "summary.json") == slurp(dir / "b" / "summary.json"));
  const auto j = nlohmann::json::parse(slurp(dir / "a" / "summary.json"));
  CHECK(j["suite"] == "identities");
  CHECK(j["pass"] == true);
  std::filesystem::remove_all(dir);
}

TEST_CASE("hardy suite CSV") {
  SuiteConfig cfg;
  cfg.suite = Suite::Hardy;
  cfg.family = Family::A;
  cfg.rank = 1;
  cfg.dim = 3;
  cfg.k = {Rational(0)};
  cfg.corpus = 4;
  const auto r = run_suite(cfg);
  REQUIRE_FALSE(r.csv.empty());
  for (const auto& [stem, text] : r.csv)
    CHECK(text.rfind("epsilon,quotient_oracle,quotient_quadrature,target,rel_gap\n", 0) == 0);
}
