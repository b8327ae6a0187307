#ifndef OHS_CSV_HPP
#define OHS_CSV_HPP

#include <string>

namespace ohs::csv {

// Shortest decimal string that round-trips to the same double (std::to_chars),
// locale-independent. File-level comparisons of outputs rely on this.
std::string format_double(double x);

}  // namespace ohs::csv

#endif  // OHS_CSV_HPP
