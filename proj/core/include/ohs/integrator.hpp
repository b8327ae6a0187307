#ifndef OHS_INTEGRATOR_HPP
#define OHS_INTEGRATOR_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "ohs/kernel.hpp"
#include "ohs/state.hpp"

namespace ohs {

enum class Method { Rk4Fixed, Rk45Adaptive };

struct IntegratorOptions {
  Method method = Method::Rk45Adaptive;
  double dt_init = 0.0;       // <= 0 picks t_end/100
  double rel_tol = 1e-8;      // rk45 only
  double abs_tol = 1e-12;     // rk45 only
  // Negativity tolerance: a step is rejected if any component drops below
  // -eps_neg * mu0(0); residual negatives above that floor are clamped to 0.
  double eps_neg = 1e-13;
  double t_end = 1.0;
  double sample_every = 0.0;  // <= 0 picks t_end/10
  // Keep the accepted-step grid in the trajectory (needed by the BV and
  // weighted-moment quadrature diagnostics).
  bool store_steps = true;

  void validate() const;  // throws std::invalid_argument
};

struct TrajectorySample {
  double t = 0.0;
  std::vector<double> c;
  double mu0 = 0.0, mu1 = 0.0, mu2 = 0.0;
  double leak_rate = 0.0;
  double cumulative_leak = 0.0;  // trapezoid of the leak over accepted steps
  double min_c = 0.0;
};

struct StepPoint {
  double t = 0.0;
  std::vector<double> c;
};

struct IntegrationStats {
  std::size_t steps_accepted = 0;
  std::size_t steps_rejected = 0;  // error-based + positivity rejections
  double min_concentration = std::numeric_limits<double>::infinity();  // pre-clamp
  double clamped_mass = 0.0;  // total |i * c_i| removed by negativity clamping
  bool fast_rhs = false;      // O(n) path was available for the kernel
};

struct Trajectory {
  std::vector<TrajectorySample> samples;     // strictly increasing t
  std::vector<StepPoint> step_points;        // accepted grid incl. t=0 (optional)
  IntegrationStats stats;

  std::size_t n() const { return samples.empty() ? 0 : samples.front().c.size(); }
  double t_end() const { return samples.empty() ? 0.0 : samples.back().t; }
};

struct StepResult {
  TruncatedState state;
  double dt_next = 0.0;
  std::size_t rejections = 0;
  double clamped_mass = 0.0;
};

// One accepted step of size at most dt (internal rejections may shrink it).
// The positivity floor uses mu0 of the input state.
StepResult step(const KernelSpec& kernel, const TruncatedState& state, double dt,
                const IntegratorOptions& options);

// Trajectory on [0, t_end], sampled at multiples of sample_every plus t_end
// exactly; the stepper lands on sample times by dt clipping, no interpolation.
Trajectory integrate(const KernelSpec& kernel, const InitialCondition& ic,
                     std::size_t n, const IntegratorOptions& options);
Trajectory integrate_state(const KernelSpec& kernel, const TruncatedState& initial,
                           const IntegratorOptions& options);

}  // namespace ohs

#endif  // OHS_INTEGRATOR_HPP
