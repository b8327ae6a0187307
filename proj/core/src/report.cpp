#include "ohs/report.hpp"

#include "ohs/csv.hpp"

namespace ohs {

bool DiagnosticsReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

void DiagnosticsReport::write_csv(std::ostream& out, bool header) const {
  if (header) out << "check_id,value,bound,tolerance,verdict\n";
  for (const auto& e : entries) {
    out << e.id << ',' << csv::format_double(e.value) << ',';
    if (e.bound) out << csv::format_double(*e.bound);
    out << ',' << csv::format_double(e.tolerance) << ',' << (e.pass ? "pass" : "fail")
        << '\n';
  }
}

}  // namespace ohs
