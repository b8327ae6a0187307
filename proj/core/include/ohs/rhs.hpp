#ifndef OHS_RHS_HPP
#define OHS_RHS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ohs/kernel.hpp"

namespace ohs {

// dc_i/dt values of the truncated non-conservative system:
//   d_1 = -phi_{1,1} c_1^2 - c_1 sum_{j=1}^{n} phi_{1,j} c_j
//   d_i = c_{i-1} sum_{j=1}^{i-1} j phi_{i-1,j} c_j
//         - c_i sum_{j=1}^{i} j phi_{i,j} c_j
//         - c_i sum_{j=i}^{n} phi_{i,j} c_j          (2 <= i <= n-1)
//   d_n = c_{n-1} sum_{j=1}^{n-1} j phi_{n-1,j} c_j
// The top bin is pure gain (d_n >= 0 for non-negative c).
struct DerivativeVector {
  std::vector<double> d;
  std::size_t size() const { return d.size(); }
};

// O(n^2) evaluation. Summation order is fixed (ascending j, compensated), so
// results are bit-stable across runs on one platform.
DerivativeVector rhs_direct(const KernelSpec& kernel, std::span<const double> c);

struct RhsResult {
  DerivativeVector deriv;
  bool fast_path = false;  // false: fell back to rhs_direct
};

// O(n) evaluation via prefix/suffix sums for the separable families
// (ratio-sum, sum, constant, product); power-law and custom tables fall back
// to rhs_direct. Agrees with rhs_direct within 1e-12 relative per component.
RhsResult rhs_fast(const KernelSpec& kernel, std::span<const double> c);

// L = sum_{j=1}^{n-1} j phi_{n,j} c_n c_j >= 0; the truncated system loses
// mass through the top bin at exactly this rate: sum_i i*d_i = -L.
double leak_rate(const KernelSpec& kernel, std::span<const double> c);

}  // namespace ohs

#endif  // OHS_RHS_HPP
