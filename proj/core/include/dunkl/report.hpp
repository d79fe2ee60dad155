#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace dunkl {

struct VerificationEntry {
  std::string function;
  double lhs = 0.0;
  double rhs = 0.0;
  double error = 0.0;  // combined quadrature error of both sides
  bool pass = true;

  double margin() const { return lhs - rhs; }
};

/// Outcome of checking LHS >= RHS over a corpus. An entry passes when
/// LHS >= RHS - (tol |RHS| + quadrature error).
struct VerificationReport {
  std::string theorem;
  std::string corpus;
  double tol = 1e-6;
  std::vector<VerificationEntry> entries;

  void add(std::string function, double lhs, double rhs, double error);
  void merge(const VerificationReport& other);
  /// Changes tol and re-evaluates every entry.
  void set_tolerance(double t);
  bool pass() const;
  std::size_t failures() const;
  /// Smallest margin relative to max(|RHS|, tiny); +inf when empty.
  double min_relative_margin() const;
  double max_error() const;
};

nlohmann::json to_json(const VerificationReport& r);

}  // namespace dunkl
