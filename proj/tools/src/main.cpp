#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dunkl/errors.hpp"
#include "dunkl_cli/suite.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace dunkl;
  CLI::App app{"dunkl-lab: Dunkl-operator Hardy and Hardy-Rellich verification suites"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite and write summary.json plus sweep CSVs");

  std::string suite, family, k, p, eps, config, out;
  int rank = 0, m = 0, dim = 0, quad_order = -1, nmax = -1, corpus = 0;
  double tol = 0.0;
  verify->add_option("suite", suite, "identities | harmonics | hardy | hardy-rellich | all")->required();
  verify->add_option("--family", family, "A | B | Z2 | I2");
  verify->add_option("--rank", rank, "rank of the root system");
  verify->add_option("--m", m, "dihedral order for I2");
  verify->add_option("--dim", dim, "ambient dimension (default: natural)");
  verify->add_option("--k", k, "multiplicities, one per orbit or a single value: v1,v2");
  verify->add_option("--p", p, "Hardy exponent or 'auto' (Nbar + 1)");
  verify->add_option("--eps", eps, "decreasing epsilon schedule e1,e2,...");
  verify->add_option("--tol", tol, "relative tolerance of the inequality checks");
  verify->add_option("--quad-order", quad_order, "sphere rule order (default: chosen per check)");
  verify->add_option("--nmax", nmax, "largest h-harmonic degree");
  verify->add_option("--corpus", corpus, "number of test functions per corpus");
  verify->add_option("--config", config, "JSON file with the same keys; flags take precedence");
  verify->add_option("--out", out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  cli::SuiteConfig cfg;
  try {
    if (!config.empty()) {
      std::ifstream f(config);
      if (!f) throw InvalidInput("cannot read " + config);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(config + ": " + e.what());
      }
      cfg = cli::config_from_json(j);
    }
    cfg.suite = cli::parse_suite(suite);
    if (!family.empty()) cfg.family = parse_family(family);
    if (verify->count("--rank")) cfg.rank = rank;
    if (verify->count("--m")) cfg.m = m;
    if (verify->count("--dim")) cfg.dim = dim;
    if (!k.empty()) cfg.k = cli::parse_multiplicities(k);
    if (!p.empty()) {
      if (p == "auto")
        cfg.p.reset();
      else
        cfg.p = cli::parse_doubles(p).at(0);
    }
    if (!eps.empty()) cfg.eps = cli::parse_doubles(eps);
    if (verify->count("--tol")) cfg.tol = tol;
    if (verify->count("--quad-order")) cfg.quad_order = quad_order;
    if (verify->count("--nmax")) cfg.nmax = nmax;
    if (verify->count("--corpus")) cfg.corpus = corpus;
    if (!out.empty()) cfg.out = out;
    cfg.validate();
    cfg.root_system();
  } catch (const Error& e) {
    std::cerr << "dunkl-lab: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const cli::SuiteResult result = cli::run_suite(cfg);
    cli::emit_report(result, cfg.out);
    for (const auto& d : result.details)
      std::cout << (d.skipped ? "SKIP " : d.pass ? "PASS " : "FAIL ") << d.name << "\n";
    std::cout << (result.pass() ? "PASS" : "FAIL") << " " << result.suite << " -> " << (cfg.out / "summary.json").string()
              << "\n";
    return result.pass() ? 0 : 1;
  } catch (const InvalidInput& e) {
    std::cerr << "dunkl-lab: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "dunkl-lab: " << e.what() << "\n";
    return 1;
  }
}
