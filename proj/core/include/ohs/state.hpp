#ifndef OHS_STATE_HPP
#define OHS_STATE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ohs {

// Finite concentration sequence of the truncated system. c[k] holds the
// concentration of (k+1)-mers; indices throughout the library are 1-based to
// match the kinetic equations, storage is 0-based.
struct TruncatedState {
  double t = 0.0;
  std::vector<double> c;

  std::size_t size() const { return c.size(); }
};

class InitialCondition {
 public:
  enum class Kind { Monodisperse, Exponential, File };

  static InitialCondition monodisperse(double total_mass);
  // c_i proportional to decay^i, normalized against the infinite series so
  // that sum_i i*c_i = total_mass; truncations of different sizes share one
  // underlying sequence.
  static InitialCondition exponential(double total_mass, double decay);
  static InitialCondition from_file(const std::string& path);
  static InitialCondition from_values(std::vector<double> concentrations);

  Kind kind() const { return kind_; }
  double total_mass() const { return total_mass_; }
  double decay() const { return decay_; }
  // Stored concentrations for File kind (empty otherwise).
  const std::vector<double>& values() const { return values_; }

  // Mass sum_{i>n} i*c_i^0 not captured by an n-bin truncation.
  double discarded_tail_mass(std::size_t n) const;

 private:
  InitialCondition() = default;

  Kind kind_ = Kind::Monodisperse;
  double total_mass_ = 1.0;
  double decay_ = 0.5;
  std::vector<double> values_;

  friend TruncatedState initial_state(const InitialCondition&, std::size_t);
};

// State at t=0 with c_i = c_i^0 for i <= n. Retained bins are not rescaled;
// use discarded_tail_mass for the truncation report.
TruncatedState initial_state(const InitialCondition& ic, std::size_t n);

// mu_r = sum_{i=1}^{n} i^r c_i, compensated accumulation in ascending i.
double moment(const TruncatedState& state, double r);
double moment(std::span<const double> c, double r);

// sum_{i=1}^{n} w_i c_i with w defined for 1..n (w[k] is w_{k+1}).
double weighted_moment(const TruncatedState& state, std::span<const double> w);
double weighted_moment(std::span<const double> c, std::span<const double> w);

}  // namespace ohs

#endif  // OHS_STATE_HPP
