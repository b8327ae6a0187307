#include "ohs/state.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ohs/compensated.hpp"

namespace ohs {

InitialCondition InitialCondition::monodisperse(double total_mass) {
  if (!(total_mass > 0.0) || !std::isfinite(total_mass)) {
    throw std::invalid_argument("monodisperse initial condition needs total_mass > 0");
  }
  InitialCondition ic;
  ic.kind_ = Kind::Monodisperse;
  ic.total_mass_ = total_mass;
  return ic;
}

InitialCondition InitialCondition::exponential(double total_mass, double decay) {
  if (!(total_mass > 0.0) || !std::isfinite(total_mass)) {
    throw std::invalid_argument("exponential initial condition needs total_mass > 0");
  }
  if (!(decay > 0.0 && decay < 1.0)) {
    throw std::invalid_argument("exponential initial condition needs decay in (0,1)");
  }
  InitialCondition ic;
  ic.kind_ = Kind::Exponential;
  ic.total_mass_ = total_mass;
  ic.decay_ = decay;
  return ic;
}

InitialCondition InitialCondition::from_values(std::vector<double> concentrations) {
  if (concentrations.empty()) {
    throw std::invalid_argument("initial condition sequence is empty");
  }
  for (double v : concentrations) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("initial concentrations must be finite and >= 0");
    }
  }
  InitialCondition ic;
  ic.kind_ = Kind::File;
  ic.values_ = std::move(concentrations);
  CompensatedSum mass;
  for (std::size_t i = 0; i < ic.values_.size(); ++i) {
    mass.add(static_cast<double>(i + 1) * ic.values_[i]);
  }
  ic.total_mass_ = mass.value();
  return ic;
}

InitialCondition InitialCondition::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open initial-condition file: " + path);
  }
  std::vector<double> vals;
  double v;
  while (in >> v) vals.push_back(v);
  if (!in.eof()) {
    throw std::invalid_argument("malformed initial-condition file: " + path);
  }
  if (vals.empty()) {
    throw std::invalid_argument("initial-condition file is empty: " + path);
  }
  return from_values(std::move(vals));
}

namespace {

// sum_{i=1}^{n} i x^i = x (1 - (n+1) x^n + n x^{n+1}) / (1-x)^2
double partial_weighted_geometric(double x, std::size_t n) {
  const double xn = std::pow(x, static_cast<double>(n));
  const double num = 1.0 - static_cast<double>(n + 1) * xn + static_cast<double>(n) * xn * x;
  const double den = (1.0 - x) * (1.0 - x);
  return x * num / den;
}

}  // namespace

double InitialCondition::discarded_tail_mass(std::size_t n) const {
  switch (kind_) {
    case Kind::Monodisperse:
      return n >= 1 ? 0.0 : total_mass_;
    case Kind::Exponential: {
      // amplitude a with a * decay/(1-decay)^2 = total_mass
      const double full = decay_ / ((1.0 - decay_) * (1.0 - decay_));
      const double a = total_mass_ / full;
      return total_mass_ - a * partial_weighted_geometric(decay_, n);
    }
    case Kind::File: {
      CompensatedSum tail;
      for (std::size_t i = n; i < values_.size(); ++i) {
        tail.add(static_cast<double>(i + 1) * values_[i]);
      }
      return tail.value();
    }
  }
  return 0.0;
}

TruncatedState initial_state(const InitialCondition& ic, std::size_t n) {
  if (n < 2) {
    throw std::domain_error("truncation size must be >= 2");
  }
  TruncatedState s;
  s.t = 0.0;
  s.c.assign(n, 0.0);
  switch (ic.kind_) {
    case InitialCondition::Kind::Monodisperse:
      s.c[0] = ic.total_mass_;
      break;
    case InitialCondition::Kind::Exponential: {
      const double full = ic.decay_ / ((1.0 - ic.decay_) * (1.0 - ic.decay_));
      const double a = ic.total_mass_ / full;
      for (std::size_t i = 1; i <= n; ++i) {
        s.c[i - 1] = a * std::pow(ic.decay_, static_cast<double>(i));
      }
      break;
    }
    case InitialCondition::Kind::File:
      for (std::size_t i = 0; i < n && i < ic.values_.size(); ++i) {
        s.c[i] = ic.values_[i];
      }
      break;
  }
  return s;
}

double moment(std::span<const double> c, double r) {
  CompensatedSum acc;
  if (r == 0.0) {
    for (double v : c) acc.add(v);
  } else if (r == 1.0) {
    for (std::size_t i = 0; i < c.size(); ++i)acc.add(static_cast<double>(i + 1) * c[i]);
  } else if (r == 2.0) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double d = static_cast<double>(i + 1);
      acc.add(d * d * c[i]);
    }
  } else {
    for (std::size_t i = 0; i < c.size(); ++i) {
      acc.add(std::pow(static_cast<double>(i + 1), r) * c[i]);
    }
  }
  return acc.value();
}

double moment(const TruncatedState& state, double r) { return moment(std::span<const double>(state.c), r); }

double weighted_moment(std::span<const double> c, std::span<const double> w) {
  if (w.size() < c.size()) {
    throw std::domain_error("weight sequence shorter than the state");
  }
  CompensatedSum acc;
  for (std::size_t i = 0; i < c.size(); ++i) acc.add(w[i] * c[i]);
  return acc.value();
}

double weighted_moment(const TruncatedState& state, std::span<const double> w) {
  return weighted_moment(std::span<const double>(state.c), w);
}

}  // namespace ohs
