#ifndef OHS_DIAGNOSTICS_HPP
#define OHS_DIAGNOSTICS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ohs/gamma.hpp"
#include "ohs/integrator.hpp"
#include "ohs/kernel.hpp"
#include "ohs/report.hpp"

namespace ohs {

enum class DifferenceForm {
  Signed,    // w_{i+1} - w_i: the telescoping identity, exact for any w
  Absolute,  // |w_{i+1} - w_i|: coincides with Signed for non-decreasing w
};

// Relative defect |LHS - RHS| / max(1, |LHS|) of the weighted-moment identity
//   sum_i w_i dc_i/dt = sum_{i<n} (w_{i+1}-w_i) sum_{j<=i} j phi_{ij} c_i c_j
//                       - sum_{i<n} sum_{j=i}^{n} w_i phi_{ij} c_i c_j.
// LHS uses rhs_direct; RHS is summed by an independent double loop.
double moment_identity_residual(const KernelSpec& kernel, std::span<const double> c,
                                std::span<const double> w,
                                DifferenceForm form = DifferenceForm::Signed);

struct TrajectoryChecks {
  bool monotone_mu0 = true;
  bool monotone_mu1 = true;
  bool mass_balance = true;
  bool positivity = true;
  bool clamp_budget = true;
};

// Sample-wise trajectory diagnostics: mu0/mu1 non-increasing (1e-10 relative
// slack), |mu1(0) - mu1(t) - cumulative_leak(t)| <= max(1e-8, 1e-6 mu1(0)),
// non-negative samples, and clamped mass <= 1e-10 mu1(0).
DiagnosticsReport check_trajectory(const Trajectory& trajectory, const KernelSpec& kernel,
                                   const TrajectoryChecks& checks = {});

struct BvResult {
  double value = 0.0;  // quadrature of |dc_i/dt| over the accepted-step grid
  double bound = 0.0;
  bool bounded = false;  // false when the kernel class has no a-priori constant
  bool pass = true;
};

// Total-variation integral of component i against its a-priori constant.
// Interior bounds by class: ratio 6 mu0 ||c0|| T; sum (4||c0||^2 +
// 2 mu0 ||c0||) T; power (4 mu0 ||c0|| + 4||c0||^2 + mu0^2) T. Boundary bins
// use the tighter top/bottom constants.
BvResult bv_total(const Trajectory& trajectory, const KernelSpec& kernel, std::size_t i);

// All components in one pass over the step grid.
std::vector<double> bv_totals(const Trajectory& trajectory, const KernelSpec& kernel);

double bv_bound(BoundClass cls, std::size_t i, std::size_t n, double mu0_initial,
                double mass_initial, double T);

struct GammaBoundResult {
  bool skipped = false;  // kernel class `other`
  double sup_weighted = 0.0;        // sup_t sum_i gamma(i) c_i(t) over samples
  double integral_double_sum = 0.0; // int_0^T sum_{i<n} sum_{j>=i} gamma(i) phi c_i c_j
  double q_bound = 0.0;             // Q_b(T) from the explicit class constants
  bool pass = true;
};

// Growth control of the gamma-weighted moment, with Q_b(T) assembled from
// gamma(1), mu0(0) and ||c0|| of the trajectory's initial sample:
//   Q_b = sum gamma(i) c_i^0 + (Q_{b,1}/Q_{b,2}) (e^{T Q_{b,2}} - 1).
GammaBoundResult gamma_bound_check(const Trajectory& trajectory, const KernelSpec& kernel,
                                   const ConvexWeight& gamma);

}  // namespace ohs

#endif  // OHS_DIAGNOSTICS_HPP
