#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vessels/complex_matrix.hpp"

namespace vessels {

// One named residual with its tolerance. Gated entries record a check that was
// skipped because its precondition failed; they never fail the report.
struct ResidualEntry {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  bool gated = false;
  std::string note;

  bool pass() const { return gated || value <= tol; }
};

struct ResidualReport {
  std::string title;
  std::string status = "ok";  // ok | not-applicable | error
  std::vector<ResidualEntry> entries;

  ResidualEntry& add(const std::string& name, double value, double tol,
                     const std::string& note = "") {
    entries.push_back({name, value, tol, false, note});
    return entries.back();
  }
  ResidualEntry& add_gated(const std::string& name, double value,
                           const std::string& note) {
    entries.push_back({name, value, 0.0, true, note});
    return entries.back();
  }
  bool pass() const {
    if (status == "error") return false;
    for (const auto& e : entries)
      if (!e.pass()) return false;
    return true;
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& e : entries)
      if (!e.gated) m = std::max(m, e.value);
    return m;
  }
  const ResidualEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

// Least-squares slope of log(err) against log(h); ~2 for second order.
double fit_order(const std::vector<double>& h, const std::vector<double>& err);

std::string report_to_text(const ResidualReport& r);

}  // namespace vessels
