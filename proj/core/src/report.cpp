#include "hexafern/verify.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace hexafern {

std::string report_text(const VerificationReport& report) {
  std::ostringstream out;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", report.elapsed.count());
  out << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " cases=" << report.cases_run
      << " skipped=" << report.skipped << " failures=" << report.failures.size() << " time=" << secs
      << "s\n";
  for (const auto& f : report.failures) {
    out << "  " << f.params << " [" << f.note << "] lhs=" << to_string(f.lhs) << " rhs=" << to_string(f.rhs)
        << "\n";
  }
  return out.str();
}

std::string report_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
      failures.push_back(
          {{"params", f.params}, {"lhs", to_string(f.lhs)}, {"rhs", to_string(f.rhs)}, {"note", f.note}});
    }
    doc.push_back({{"suite", r.suite},
                   {"cases", r.cases_run},
                   {"skipped", r.skipped},
                   {"passed", r.passed()},
                   {"seconds", r.elapsed.count()},
                   {"failures", failures}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace hexafern
