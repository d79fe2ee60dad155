#include "dunkl/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dunkl {

namespace {

bool holds(const VerificationEntry& e, double tol) {
  return std::isfinite(e.lhs) && std::isfinite(e.rhs) && e.lhs >= e.rhs - (tol * std::abs(e.rhs) + e.error);
}

}  // namespace

void VerificationReport::add(std::string function, double lhs, double rhs, double error) {
  VerificationEntry e{std::move(function), lhs, rhs, error, true};
  e.pass = holds(e, tol);
  entries.push_back(std::move(e));
}

void VerificationReport::set_tolerance(double t) {
  tol = t;
  for (auto& e : entries) e.pass = holds(e, tol);
}

void VerificationReport::merge(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

double VerificationReport::min_relative_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) m = std::min(m, e.margin() / std::max(std::abs(e.rhs), 1e-300));
  return m;
}

double VerificationReport::max_error() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.error);
  return m;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["theorem"] = r.theorem;
  j["corpus"] = r.corpus;
  j["tolerance"] = r.tol;
  j["pass"] = r.pass();
  j["count"] = r.entries.size();
  j["failures"] = r.failures();
  if (!r.entries.empty()) {
    j["min_relative_margin"] = r.min_relative_margin();
    j["max_quadrature_error"] = r.max_error();
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : r.entries)
    list.push_back({{"function", e.function}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"error", e.error}, {"pass", e.pass}});
  j["entries"] = std::move(list);
  return j;
}

}  // namespace dunkl
