#ifndef OHS_REPORT_HPP
#define OHS_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ohs {

// One named check: pass iff value <= tolerance, or value <= bound for
// bound-style checks.
struct CheckEntry {
  std::string id;
  double value = 0.0;
  std::optional<double> bound;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;  // not serialized; shown in CLI summaries
};

struct DiagnosticsReport {
  std::vector<CheckEntry> entries;

  bool all_pass() const;
  // CSV block: check_id,value,bound,tolerance,verdict
  void write_csv(std::ostream& out, bool header = true) const;
};

}  // namespace ohs

#endif  // OHS_REPORT_HPP
