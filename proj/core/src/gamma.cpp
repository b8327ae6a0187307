#include "ohs/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ohs/compensated.hpp"

namespace ohs {

ConvexWeight ConvexWeight::build(std::span<const double> c0, std::size_t max_index) {
  if (c0.empty()) {
    throw std::invalid_argument("gamma build: empty initial condition");
  }
  if (max_index == 0) {
    throw std::invalid_argument("gamma build: max_index must be >= 1");
  }
  const std::size_t len = c0.size();
  for (double v : c0) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("gamma build: concentrations must be finite and >= 0");
    }
  }

  // tail[m] = sum_{i >= m} i c_i^0 over the provided support; tail[len+1] = 0.
  std::vector<double> tail(len + 2, 0.0);
  {
    CompensatedSum acc;
    for (std::size_t i = len; i >= 1; --i) {
      acc.add(static_cast<double>(i) * c0[i - 1]);
      tail[i] = acc.value();
    }
    if (!std::isfinite(tail[1])) {
      throw std::invalid_argument("gamma build: first moment of the input is not finite");
    }
  }
  const auto tail_at = [&](std::size_t m) { return m <= len ? tail[m] : 0.0; };

  ConvexWeight g;
  g.breakpoints_.push_back(0.0);
  g.gprime_.push_back(0.0);
  g.values_.push_back(0.0);

  // m_k = max(2 m_{k-1}, smallest m with tail(m) <= 2^-k); once the tail is
  // exhausted the doubling rule alone drives the breakpoints.
  std::size_t prev = 0;
  const double cap = 4.0 * static_cast<double>(max_index);
  for (std::size_t k = 1; g.breakpoints_.back() < cap; ++k) {
    std::size_t m = std::max<std::size_t>(2 * prev, 1);
    const double target = std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(k, 1060)));
    while (tail_at(m) > target) ++m;
    const double mk = static_cast<double>(m);
    const double delta = mk - g.breakpoints_.back();
    // gamma' rises by 2 per interval; the average of gamma' over
    // [m_{k-1}, m_k] is 2(k-1)+1, so the value increment is (2k-1) * delta.
    g.values_.push_back(g.values_.back() + (2.0 * static_cast<double>(k) - 1.0) * delta);
    g.gprime_.push_back(2.0 * static_cast<double>(k));
    g.breakpoints_.push_back(mk);
    prev = m;
  }

  g.cache_.resize(max_index);
  for (std::size_t i = 1; i <= max_index; ++i) {
    g.cache_[i - 1] = g.eval_uncached(static_cast<double>(i));
  }

  // sum_{i >= m_1} gamma(i) c_i^0 <= sum_k (k+1) 2^{-(k-1)} = 6; bins below
  // m_1 are added exactly.
  CompensatedSum below;
  const std::size_t m1 = static_cast<std::size_t>(g.breakpoints_[1]);
  for (std::size_t i = 1; i < m1 && i <= len; ++i) {
    below.add(g.eval_uncached(static_cast<double>(i)) * c0[i - 1]);
  }
  g.bound_ = below.value() + 6.0;
  return g;
}

ConvexWeight ConvexWeight::linear(double slope) {
  if (!(slope >= 0.0) || !std::isfinite(slope)) {
    throw std::invalid_argument("linear weight needs slope >= 0");
  }
  ConvexWeight g;
  g.breakpoints_ = {0.0, 1.0};
  g.gprime_ = {slope, slope};
  g.values_ = {0.0, slope};
  g.bound_ = std::numeric_limits<double>::infinity();
  return g;
}

double ConvexWeight::eval_uncached(double r) const {
  if (r < 0.0) {
    throw std::domain_error("gamma: argument must be >= 0");
  }
  if (r == 0.0) return 0.0;
  const auto& bp = breakpoints_;
  // Last interval's gamma'' extends beyond the final breakpoint.
  const std::size_t last = bp.size() - 1;
  std::size_t k;
  if (r >= bp[last]) {
    k = last - 1;
  } else {
    k = static_cast<std::size_t>(
            std::upper_bound(bp.begin(), bp.end(), r) - bp.begin()) - 1;
  }
  const double delta = bp[k + 1] - bp[k];
  const double slope = (gprime_[k + 1] - gprime_[k]) / delta;  // gamma'' on the piece
  if (r <= bp[last]) {
    const double x = r - bp[k];
    return values_[k] + gprime_[k] * x + 0.5 * slope * x * x;
  }
  const double x = r - bp[last];
  return values_[last] + gprime_[last] * x + 0.5 * slope * x * x;
}

double ConvexWeight::operator()(double r) const { return eval_uncached(r); }

double ConvexWeight::value_at(std::size_t i) const {
  if (i >= 1 && i <= cache_.size()) return cache_[i - 1];
  return eval_uncached(static_cast<double>(i));
}

double ConvexWeight::derivative(double r) const {
  if (r < 0.0) {
    throw std::domain_error("gamma: argument must be >= 0");
  }
  const auto& bp = breakpoints_;
  const std::size_t last = bp.size() - 1;
  std::size_t k;
  double x;
  if (r >= bp[last]) {
    k = last - 1;
    x = r - bp[k];
  } else {
    k = static_cast<std::size_t>(
            std::upper_bound(bp.begin(), bp.end(), r) - bp.begin()) - 1;
    x = r - bp[k];
  }
  const double delta = bp[k + 1] - bp[k];
  const double slope = (gprime_[k + 1] - gprime_[k]) / delta;
  return gprime_[k] + slope * x;
}

namespace {

DiagnosticsReport prop_check_impl(const std::function<double(double)>& g,
                                  std::size_t i_max) {
  if (i_max < 1) {
    throw std::invalid_argument("prop check: i_max must be >= 1");
  }
  const double g1 = g(1.0);
  double worst_lower = std::numeric_limits<double>::infinity();  // min increment
  double worst_upper = -std::numeric_limits<double>::infinity(); // max relative excess
  double gi = g1;
  for (std::size_t i = 1; i <= i_max; ++i) {
    const double gi1 = g(static_cast<double>(i + 1));
    const double inc = gi1 - gi;
    const double ub = ((3.0 * static_cast<double>(i) + 1.0) * g1 + 2.0 * gi) /
                      (static_cast<double>(i) + 1.0);
    worst_lower = std::min(worst_lower, inc);
    worst_upper = std::max(worst_upper, (inc - ub) / std::max(1.0, std::abs(ub)));
    gi = gi1;
  }
  DiagnosticsReport rep;
  const double tol = 1e-10;
  CheckEntry lower;
  lower.id = "prop21_increments_nonneg";
  lower.value = std::max(0.0, -worst_lower);  // worst negativity of an increment
  lower.tolerance = tol;
  lower.pass = lower.value <= tol;
  rep.entries.push_back(lower);
  CheckEntry upper;
  upper.id = "prop21_increment_bound";
  upper.value = std::max(0.0, worst_upper);  // worst relative excess over the bound
  upper.tolerance = tol;
  upper.pass = upper.value <= tol;
  rep.entries.push_back(upper);
  return rep;
}

}  // namespace

DiagnosticsReport prop_inequality_check(const std::function<double(double)>& gamma,
                                        std::size_t i_max) {
  return prop_check_impl(gamma, i_max);
}

DiagnosticsReport prop_inequality_check(const ConvexWeight& gamma, std::size_t i_max) {
  return prop_check_impl(
      [&gamma](double r) {
        const double rounded = std::round(r);
        if (rounded == r && r >= 1.0) {
          return gamma.value_at(static_cast<std::size_t>(rounded));
        }
        return gamma(r);
      },
      i_max);
}

}  // namespace ohs
