#include "vessels/report.hpp"

#include <cmath>
#include <sstream>

namespace vessels {

double fit_order(const std::vector<double>& h, const std::vector<double>& err) {
  const size_t n = std::min(h.size(), err.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t k = 0; k < n; ++k) {
    const double x = std::log(h[k]);
    const double y = std::log(std::max(err[k], 1e-300));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

std::string report_to_text(const ResidualReport& r) {
  std::ostringstream os;
  os << r.title << " [" << r.status << "]\n";
  for (const auto& e : r.entries) {
    os << "  " << (e.gated ? "skip" : (e.pass() ? "pass" : "FAIL")) << "  " << e.name
       << " = " << e.value;
    if (!e.gated) os << " (tol " << e.tol << ")";
    if (!e.note.empty()) os << "  -- " << e.note;
    os << "\n";
  }
  return os.str();
}

}  // namespace vessels
