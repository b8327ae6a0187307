#ifndef OHS_COMPENSATED_HPP
#define OHS_COMPENSATED_HPP

#include <cmath>

namespace ohs {

// Neumaier-compensated accumulator. Summation order is the caller's; the
// compensation makes the result accurate to ~1 ulp of the true sum even for
// 1e5 terms of widely varying magnitude.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace ohs

#endif  // OHS_COMPENSATED_HPP
