#pragma once

// Configuration, execution and serialisation of the dunkl-lab verification suites.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/rational.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl::cli {

enum class Suite { Identities, Harmonics, Hardy, HardyRellich, All };

std::string suite_name(Suite s);
Suite parse_suite(const std::string& name);

struct SuiteConfig {
  Suite suite = Suite::All;
  Family family = Family::A;
  int rank = 2;
  int m = 0;    // dihedral order, I2 only
  int dim = 0;  // 0 selects the natural dimension
  std::vector<Rational> k{Rational(1)};  // one per orbit, or a single value for all orbits
  std::optional<double> p;               // empty means Nbar + 1
  std::vector<double> eps{0.3, 0.1, 0.03, 0.01, 0.003, 0.001};
  double tol = 1e-6;           // relative slack of the inequality checks
  double sweep_tol = 0.0;      // 0 keeps the per-family sweep tolerance
  int quad_order = 0;          // 0 picks a sphere order per check
  int nmax = 4;
  int corpus = 20;
  int max_degree = 5;          // polynomial corpus of the identity suite
  std::uint64_t seed = 7;
  std::filesystem::path out = "dunkl-out";

  /// Throws InvalidInput on a malformed configuration.
  void validate() const;
  RootSystem root_system() const;
  /// Exponent of the Hardy checks for the given Nbar.
  double hardy_p(double nbar) const;
};

/// Overlays the keys present in `j` on `base`. Keys match the long flag names
/// with dashes replaced by underscores.
SuiteConfig config_from_json(const nlohmann::json& j, SuiteConfig base = {});
nlohmann::json to_json(const SuiteConfig& c);

/// Parses "v1,v2,..." into rationals ("0.5", "1/3" and "2" are accepted).
std::vector<Rational> parse_multiplicities(const std::string& text);
std::vector<double> parse_doubles(const std::string& text);

/// One verdict of a suite.
struct Detail {
  std::string name;
  std::string theorem;
  bool pass = true;
  bool skipped = false;
  double tolerance = 0.0;
  nlohmann::json data = nlohmann::json::object();
};

struct SuiteResult {
  std::string suite;
  std::vector<Detail> details;
  /// CSV payloads keyed by file stem (written as <stem>.csv).
  std::map<std::string, std::string> csv;

  bool pass() const;
  void append(SuiteResult other);
};

SuiteResult run_suite(const SuiteConfig& cfg);

/// {suite, pass, details[]} with every double rounded to 15 significant digits.
nlohmann::json summary_json(const SuiteResult& r);

/// Writes <out>/summary.json and every CSV payload. Throws Error on I/O failure.
void emit_report(const SuiteResult& r, const std::filesystem::path& out);

double round_significant(double v, int digits = 15);

}  // namespace dunkl::cli
