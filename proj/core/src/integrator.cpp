#include "ohs/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ohs/errors.hpp"
#include "ohs/rhs.hpp"

namespace ohs {

void IntegratorOptions::validate() const {
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("t_end must be finite and >= 0");
  }
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw std::invalid_argument("rel_tol and abs_tol must be > 0");
  }
  if (!(eps_neg >= 0.0)) {
    throw std::invalid_argument("eps_neg must be >= 0");
  }
  if (dt_init > 0.0 && t_end > 0.0 && dt_init > t_end) {
    throw std::invalid_argument("dt_init must not exceed t_end");
  }
  if (dt_init < 0.0 || !std::isfinite(dt_init)) {
    throw std::invalid_argument("dt_init must be a finite non-negative number");
  }
  if (sample_every < 0.0 || !std::isfinite(sample_every)) {
    throw std::invalid_argument("sample_every must be a finite non-negative number");
  }
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 35.0 / 384 - 5179.0 / 57600, kE3 = 500.0 / 1113 - 7571.0 / 16695,
                 kE4 = 125.0 / 192 - 393.0 / 640, kE5 = -2187.0 / 6784 + 92097.0 / 339200,
                 kE6 = 11.0 / 84 - 187.0 / 2100, kE7 = -1.0 / 40;

constexpr int kMaxPositivityHalvings = 40;
constexpr double kSafety = 0.9;
constexpr double kShrinkMin = 0.2;
constexpr double kGrowMax = 5.0;

class Stepper {
 public:
  Stepper(const KernelSpec& kernel, const IntegratorOptions& opt, double mu0_initial)
      : kernel_(kernel),
        opt_(opt),
        floor_(-opt.eps_neg * mu0_initial),
        h_min_(1e-14 * std::max(1.0, opt.t_end)) {}

  // One accepted step from c of size at most h_target. Returns the accepted
  // size; fills c_next (clamped) and dt_proposal for the next step.
  double advance(const std::vector<double>& c, double h_target,
                 std::vector<double>& c_next, double& dt_proposal,
                 IntegrationStats& stats) {
    double h = h_target;
    int halvings = 0;
    for (;;) {
      if (!(h > 0.0) || h < h_min_) {
        throw NumericError("step size underflow (h = " + std::to_string(h) + ")");
      }
      const bool ok = opt_.method == Method::Rk45Adaptive
                          ? try_rk45(c, h, c_next)
                          : try_rk4(c, h, c_next);
      if (!ok) {  // error estimate too large
        ++stats.steps_rejected;
        h *= std::max(kShrinkMin, kSafety * std::pow(err_ratio_, -0.2));
        continue;
      }
      const auto [min_it_val, min_it_idx] = min_component(c_next);
      if (min_it_val < floor_) {
        ++stats.steps_rejected;
        if (++halvings > kMaxPositivityHalvings) {
          throw StiffnessError(
              "component " + std::to_string(min_it_idx + 1) +
                  " repeatedly crossed the negativity floor; problem too stiff "
                  "for the explicit stepper at this tolerance",
              min_it_idx + 1);
        }
        h /= 2;
        continue;
      }
      stats.min_concentration = std::min(stats.min_concentration, min_it_val);
      // Residual micro-negativity inside the floor is clamped to zero.
      for (std::size_t i = 0; i < c_next.size(); ++i) {
        if (c_next[i] < 0.0) {
          stats.clamped_mass += static_cast<double>(i + 1) * -c_next[i];
          c_next[i] = 0.0;
        }
      }
      ++stats.steps_accepted;
      if (opt_.method == Method::Rk4Fixed) {
        dt_proposal = h_target;
      } else if (err_ratio_ == 0.0) {
        dt_proposal = h;  // no error information: keep the step
      } else {
        dt_proposal =
            h * std::min(kGrowMax, std::max(kShrinkMin, kSafety * std::pow(err_ratio_, -0.2)));
      }
      return h;
    }
  }

  bool fast_rhs_used() const { return fast_rhs_; }

 private:
  std::vector<double> eval(const std::vector<double>& y) {
    RhsResult r = rhs_fast(kernel_, y);
    fast_rhs_ = r.fast_path;
    return std::move(r.deriv.d);
  }

  static std::pair<double, std::size_t> min_component(const std::vector<double>& v) {
    std::size_t idx = 0;
    double mv = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] < mv) {
        mv = v[i];
        idx = i;
      }
    }
    return {mv, idx};
  }

  void check_finite(const std::vector<double>& v) const {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!std::isfinite(v[i])) {
        throw NumericError("non-finite value in component " + std::to_string(i + 1));
      }
    }
  }

  bool try_rk4(const std::vector<double>& c, double h, std::vector<double>& out) {
    const std::size_t n = c.size();
    std::vector<double> y(n);
    const std::vector<double> k1 = eval(c);
    for (std::size_t i = 0; i < n; ++i) y[i] = c[i] + h / 2 * k1[i];
    const std::vector<double> k2 = eval(y);
    for (std::size_t i = 0; i < n; ++i) y[i] = c[i] + h / 2 * k2[i];
    const std::vector<double> k3 = eval(y);
    for (std::size_t i = 0; i < n; ++i) y[i] = c[i] + h * k3[i];
    const std::vector<double> k4 = eval(y);
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = c[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    check_finite(out);
    err_ratio_ = 0.0;
    return true;
  }

  bool try_rk45(const std::vector<double>& c, double h, std::vector<double>& out) {
    const std::size_t n = c.size();
    std::vector<double> y(n);
    const std::vector<double> k1 = eval(c);
    for (std::size_t i = 0; i < n; ++i) y[i] = c[i] + h * kA21 * k1[i];
    const std::vector<double> k2 = eval(y);
    for (std::size_t i = 0; i < n; ++i) y[i] = c[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
    const std::vector<double> k3 = eval(y);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = c[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
    }
    const std::vector<double> k4 = eval(y);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = c[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
    }
    const std::vector<double> k5 = eval(y);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = c[i] +
             h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] + kA65 * k5[i]);
    }
    const std::vector<double> k6 = eval(y);
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = c[i] +
               h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] + kB6 * k6[i]);
    }
    check_finite(out);
    const std::vector<double> k7 = eval(out);

    double ratio = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double err = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                              kE6 * k6[i] + kE7 * k7[i]);
      const double scale =
          opt_.abs_tol + opt_.rel_tol * std::max(std::abs(c[i]), std::abs(out[i]));
      ratio = std::max(ratio, std::abs(err) / scale);
    }
    if (!std::isfinite(ratio)) {
      throw NumericError("non-finite error estimate");
    }
    err_ratio_ = ratio;
    return ratio <= 1.0;
  }

  const KernelSpec& kernel_;
  const IntegratorOptions& opt_;
  double floor_;
  double h_min_;
  double err_ratio_ = 0.0;
  bool fast_rhs_ = false;
};

TrajectorySample make_sample(double t, const std::vector<double>& c, double leak,
                             double cum) {
  TrajectorySample s;
  s.t = t;
  s.c = c;
  s.mu0 = moment(std::span<const double>(c), 0.0);
  s.mu1 = moment(std::span<const double>(c), 1.0);
  s.mu2 = moment(std::span<const double>(c), 2.0);
  s.leak_rate = leak;
  s.cumulative_leak = cum;
  s.min_c = *std::min_element(c.begin(), c.end());
  return s;
}

}  // namespace

StepResult step(const KernelSpec& kernel, const TruncatedState& state, double dt,
                const IntegratorOptions& options) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("step: dt must be finite and > 0");
  }
  if (state.size() < 2) {
    throw std::domain_error("step: truncation size must be >= 2");
  }
  Stepper stepper(kernel, options, moment(state, 0.0));
  IntegrationStats stats;
  std::vector<double> next(state.size());
  double dt_proposal = dt;
  const double h = stepper.advance(state.c, dt, next, dt_proposal, stats);
  StepResult out;
  out.state.t = state.t + h;
  out.state.c = std::move(next);
  out.dt_next = dt_proposal;
  out.rejections = stats.steps_rejected;
  out.clamped_mass = stats.clamped_mass;
  return out;
}

Trajectory integrate_state(const KernelSpec& kernel, const TruncatedState& initial,
                           const IntegratorOptions& options) {
  options.validate();
  if (initial.size() < 2) {
    throw std::domain_error("integrate: truncation size must be >= 2");
  }
  if (initial.t != 0.0) {
    throw std::invalid_argument("integrate: initial state must start at t = 0");
  }

  const double t_end = options.t_end;
  Trajectory traj;
  std::vector<double> c = initial.c;
  double cum = 0.0;
  double leak = leak_rate(kernel, c);
  traj.stats.min_concentration = *std::min_element(c.begin(), c.end());
  traj.samples.push_back(make_sample(0.0, c, leak, cum));
  if (options.store_steps) traj.step_points.push_back({0.0, c});
  if (t_end == 0.0) return traj;

  // Sample marks: multiples of sample_every strictly inside (0, t_end), then
  // t_end itself.
  std::vector<double> marks;
  const double se = options.sample_every > 0.0 ? options.sample_every : t_end / 10;
  for (std::size_t k = 1;; ++k) {
    const double tb = static_cast<double>(k) * se;
    if (tb >= t_end * (1.0 - 1e-12)) break;
    marks.push_back(tb);
  }
  marks.push_back(t_end);

  Stepper stepper(kernel, options, traj.samples.front().mu0);
  double dt = options.dt_init > 0.0 ? options.dt_init : t_end / 100;
  double t = 0.0;
  std::vector<double> c_next(c.size());

  for (double tb : marks) {
    while (t < tb) {
      const double remaining = tb - t;
      const bool landing = remaining <= dt * (1.0 + 1e-12);
      const double h_target = landing ? remaining : dt;
      double dt_proposal = dt;
      const double h = stepper.advance(c, h_target, c_next, dt_proposal, traj.stats);
      c.swap(c_next);
      t = (landing && h == h_target) ? tb : t + h;
      const double new_leak = leak_rate(kernel, c);
      cum += h * (leak + new_leak) / 2;
      leak = new_leak;
      if (options.store_steps) traj.step_points.push_back({t, c});
      if (options.method == Method::Rk4Fixed) {
        dt = options.dt_init > 0.0 ? options.dt_init : t_end / 100;
      } else {
        dt = dt_proposal;
      }
    }
    traj.samples.push_back(make_sample(tb, c, leak, cum));
  }
  traj.stats.fast_rhs = stepper.fast_rhs_used();
  return traj;
}

Trajectory integrate(const KernelSpec& kernel, const InitialCondition& ic,
                     std::size_t n, const IntegratorOptions& options) {
  return integrate_state(kernel, initial_state(ic, n), options);
}

}  // namespace ohs
