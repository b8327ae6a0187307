#include "ohs/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace ohs {

std::string to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::RatioSum: return "ratio-sum";
    case KernelFamily::Sum: return "sum";
    case KernelFamily::PowerLaw: return "power-law";
    case KernelFamily::Product: return "product";
    case KernelFamily::Constant: return "constant";
    case KernelFamily::CustomTable: return "custom-table";
  }
  return "?";
}

std::string to_string(BoundClass cls) {
  switch (cls) {
    case BoundClass::Ratio: return "ratio";
    case BoundClass::Sum: return "sum";
    case BoundClass::Power: return "power";
    case BoundClass::Other: return "other";
  }
  return "?";
}

KernelSpec KernelSpec::ratio_sum() {
  KernelSpec k;
  k.family_ = KernelFamily::RatioSum;
  return k;
}

KernelSpec KernelSpec::sum() {
  KernelSpec k;
  k.family_ = KernelFamily::Sum;
  return k;
}

KernelSpec KernelSpec::power_law(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("power-law kernel requires alpha in [0,1], got " +
                                std::to_string(alpha));
  }
  KernelSpec k;
  k.family_ = KernelFamily::PowerLaw;
  k.alpha_ = alpha;
  return k;
}

KernelSpec KernelSpec::product() {
  KernelSpec k;
  k.family_ = KernelFamily::Product;
  return k;
}

KernelSpec KernelSpec::constant(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("constant kernel requires kappa > 0, got " +
                                std::to_string(kappa));
  }
  KernelSpec k;
  k.family_ = KernelFamily::Constant;
  k.kappa_ = kappa;
  return k;
}

namespace {

// Invert m = N(N+1)/2; returns 0 if m is not triangular.
std::size_t triangular_root(std::size_t m) {
  std::size_t n = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(m) + 1.0) - 1.0) / 2.0);
  for (std::size_t cand : {n, n + 1, n > 0 ? n - 1 : 0}) {
    if (cand > 0 && cand * (cand + 1) / 2 == m) return cand;
  }
  return 0;
}

}  // namespace

KernelSpec KernelSpec::custom_table(const std::vector<double>& upper_triangular) {
  if (upper_triangular.empty()) {
    throw std::invalid_argument("custom kernel table is empty");
  }
  const std::size_t n = triangular_root(upper_triangular.size());
  if (n == 0) {
    throw std::invalid_argument(
        "custom kernel table must hold N(N+1)/2 upper-triangular entries, got " +
        std::to_string(upper_triangular.size()));
  }
  KernelSpec k;
  k.family_ = KernelFamily::CustomTable;
  k.table_size_ = n;
  k.table_.assign(n * n, 0.0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = upper_triangular[pos++];
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("custom kernel table entries must be finite and >= 0");
      }
      k.table_[i * n + j] = v;
      k.table_[j * n + i] = v;
    }
  }
  return k;
}

KernelSpec KernelSpec::custom_table_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open kernel table file: " + path);
  }
  std::vector<double> vals;
  double v;
  while (in >> v) vals.push_back(v);
  if (!in.eof()) {
    throw std::invalid_argument("malformed kernel table file: " + path);
  }
  return custom_table(vals);
}

namespace {

double ratio_envelope(std::size_t i, std::size_t j) {
  return static_cast<double>(i + j) / static_cast<double>(std::min(i, j));
}

}  // namespace

BoundClass KernelSpec::bound_class() const {
  switch (family_) {
    case KernelFamily::RatioSum: return BoundClass::Ratio;
    case KernelFamily::Sum: return BoundClass::Sum;
    case KernelFamily::PowerLaw: return BoundClass::Power;
    case KernelFamily::Product: return BoundClass::Other;  // i*j outgrows every class
    case KernelFamily::Constant:
      // kappa <= 1: the alpha=0 power envelope (constant 1) is uniformly
      // tightest. kappa <= 2 fits under (i+j)/min >= 2 everywhere. kappa <= 3
      // still fits under (1+i+j)^alpha with alpha = ln(kappa)/ln 3 (worst case
      // i=j=1). Beyond 3 no class holds at i=j=1.
      if (kappa_ <= 1.0) return BoundClass::Power;
      if (kappa_ <= 2.0) return BoundClass::Ratio;
      if (kappa_ <= 3.0) return BoundClass::Power;
      return BoundClass::Other;
    case KernelFamily::CustomTable:
      break;
  }

  // Custom table: exhaustive check over the stored range. The tightest
  // satisfiable class is the one with the smallest envelope maximum over that
  // range; ties break ratio, sum, power.
  const std::size_t n = table_size_;
  bool ratio_ok = true, sum_ok = true;
  double alpha_star = 0.0;  // minimal alpha covering all entries
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const double phi = table_[(i - 1) * n + (j - 1)];
      if (phi > ratio_envelope(i, j)) ratio_ok = false;
      if (phi > static_cast<double>(i + j)) sum_ok = false;
      if (phi > 1.0) {
        alpha_star = std::max(alpha_star, std::log(phi) / std::log(static_cast<double>(1 + i + j)));
      }
    }
  }
  const bool power_ok = alpha_star <= 1.0;

  double ratio_max = 0.0, sum_max = 0.0, power_max = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      ratio_max = std::max(ratio_max, ratio_envelope(i, j));
      sum_max = std::max(sum_max, static_cast<double>(i + j));
      power_max = std::max(power_max, std::pow(static_cast<double>(1 + i + j), alpha_star));
    }
  }

  BoundClass best = BoundClass::Other;
  double best_max = std::numeric_limits<double>::infinity();
  if (ratio_ok && ratio_max < best_max) { best = BoundClass::Ratio; best_max = ratio_max; }
  if (sum_ok && sum_max < best_max) { best = BoundClass::Sum; best_max = sum_max; }
  if (power_ok && power_max < best_max) { best = BoundClass::Power; best_max = power_max; }
  return best;
}

CrossDecayProfile cross_decay_profile(const KernelSpec& spec, std::size_t j,
                                      const std::vector<std::size_t>& n_list) {
  if (j == 0) {
    throw std::domain_error("cross_decay_profile: j must be >= 1");
  }
  CrossDecayProfile out;
  for (std::size_t n : n_list) {
    if (n <= j) {
      out.skipped.push_back(n);
      continue;
    }
    out.sizes.push_back(n);
    out.rates.push_back(spec.eval(n, j));
  }
  return out;
}

}  // namespace ohs
