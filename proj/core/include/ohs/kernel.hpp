#ifndef OHS_KERNEL_HPP
#define OHS_KERNEL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ohs {

enum class KernelFamily { RatioSum, Sum, PowerLaw, Product, Constant, CustomTable };

// Growth class of a rate family, i.e. which set of a-priori constants applies
// to it: ratio (phi <= (i+j)/min{i,j}), sum (phi <= i+j),
// power (phi <= (1+i+j)^alpha, alpha in [0,1]), or none of those.
enum class BoundClass { Ratio, Sum, Power, Other };

std::string to_string(KernelFamily family);
std::string to_string(BoundClass cls);

// Symmetric non-negative collision rate family phi_{i,j}, i,j >= 1.
// Immutable after construction; safe to share across threads.
class KernelSpec {
 public:
  static KernelSpec ratio_sum();                 // (i+j)/min{i,j}
  static KernelSpec sum();                       // i+j
  static KernelSpec power_law(double alpha);     // (1+i+j)^alpha, alpha in [0,1]
  static KernelSpec product();                   // i*j
  static KernelSpec constant(double kappa);      // kappa > 0

  // Upper-triangular row-major entries phi_{i,j}, j >= i, for i = 1..N;
  // N is inferred from the token count (must be a triangular number).
  // Symmetrized on construction; zero beyond the stored range.
  static KernelSpec custom_table(const std::vector<double>& upper_triangular);
  static KernelSpec custom_table_from_file(const std::string& path);

  double eval(std::size_t i, std::size_t j) const {
    if (i == 0 || j == 0) {
      throw std::domain_error("kernel eval: indices are 1-based and must be >= 1");
    }
    switch (family_) {
      case KernelFamily::RatioSum:
        return static_cast<double>(i + j) / static_cast<double>(i < j ? i : j);
      case KernelFamily::Sum:
        return static_cast<double>(i + j);
      case KernelFamily::PowerLaw:
        return std::pow(static_cast<double>(1 + i + j), alpha_);
      case KernelFamily::Product:
        return static_cast<double>(i) * static_cast<double>(j);
      case KernelFamily::Constant:
        return kappa_;
      case KernelFamily::CustomTable:
        if (i > table_size_ || j > table_size_) return 0.0;
        return table_[(i - 1) * table_size_ + (j - 1)];
    }
    return 0.0;  // unreachable
  }

  KernelFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  double kappa() const { return kappa_; }
  std::size_t table_size() const { return table_size_; }

  // Tightest growth class the family provably satisfies. Custom tables are
  // checked exhaustively over the stored range (the zero extension satisfies
  // every class).
  BoundClass bound_class() const;

 private:
  KernelSpec() = default;

  KernelFamily family_ = KernelFamily::Constant;
  double alpha_ = 0.0;
  double kappa_ = 1.0;
  std::size_t table_size_ = 0;
  std::vector<double> table_;  // dense symmetric, row-major, 0-based storage
};

// phi_{n,j} for each requested n > j; entries with n <= j are skipped and
// recorded. Used to report whether the density-conservation hypothesis
// (cross-rates vanishing as n grows) holds for a kernel.
struct CrossDecayProfile {
  std::vector<std::size_t> sizes;   // accepted n values
  std::vector<double> rates;        // phi_{n,j}, same order
  std::vector<std::size_t> skipped; // n values with n <= j
};

CrossDecayProfile cross_decay_profile(const KernelSpec& spec, std::size_t j,
                                      const std::vector<std::size_t>& n_list);

}  // namespace ohs

#endif  // OHS_KERNEL_HPP
