#include "ohs/rhs.hpp"

#include <cmath>
#include <stdexcept>

#include "ohs/compensated.hpp"

namespace ohs {

namespace {

// Row sums shared by the derivative assembly, for k = 1..n-1:
//   S_k = sum_{j=1}^{k} j phi_{k,j} c_j
//   R_k = sum_{j=k}^{n} phi_{k,j} c_j
// The gain of bin i reuses S_{i-1}: it is the same sum the loss of bin i-1
// needs, over the same row and range.
template <class Phi>
void row_sums(std::span<const double> c, Phi phi, std::vector<double>& S,
              std::vector<double>& R) {
  const std::size_t n = c.size();
  S.assign(n, 0.0);  // S[k] = S_k, 1-based; S[0] unused
  R.assign(n, 0.0);
  for (std::size_t k = 1; k <= n - 1; ++k) {
    CompensatedSum s;
    for (std::size_t j = 1; j <= k; ++j) {
      s.add(static_cast<double>(j) * phi(k, j) * c[j - 1]);
    }
    S[k] = s.value();
    CompensatedSum r;
    for (std::size_t j = k; j <= n; ++j) {
      r.add(phi(k, j) * c[j - 1]);
    }
    R[k] = r.value();
  }
}

DerivativeVector assemble(std::span<const double> c, const std::vector<double>& S,
                          const std::vector<double>& R) {
  const std::size_t n = c.size();
  DerivativeVector out;
  out.d.assign(n, 0.0);
  out.d[0] = -(c[0] * S[1]) - c[0] * R[1];
  for (std::size_t i = 2; i <= n - 1; ++i) {
    out.d[i - 1] = c[i - 2] * S[i - 1] - c[i - 1] * S[i] - c[i - 1] * R[i];
  }
  out.d[n - 1] = c[n - 2] * S[n - 1];
  return out;
}

void require_size(std::span<const double> c) {
  if (c.size() < 2) {
    throw std::domain_error("rhs: truncation size must be >= 2");
  }
}

}  // namespace

DerivativeVector rhs_direct(const KernelSpec& kernel, std::span<const double> c) {
  require_size(c);
  const std::size_t n = c.size();
  std::vector<double> S, R;
  if (kernel.family() == KernelFamily::PowerLaw) {
    // phi depends on i+j only; one pow per diagonal instead of per pair.
    std::vector<double> by_sum(2 * n + 1, 0.0);
    for (std::size_t s = 2; s <= 2 * n; ++s) {
      by_sum[s] = std::pow(static_cast<double>(1 + s), kernel.alpha());
    }
    row_sums(c, [&by_sum](std::size_t i, std::size_t j) { return by_sum[i + j]; }, S, R);
  } else {
    row_sums(c, [&kernel](std::size_t i, std::size_t j) { return kernel.eval(i, j); }, S, R);
  }
  return assemble(c, S, R);
}

RhsResult rhs_fast(const KernelSpec& kernel, std::span<const double> c) {
  require_size(c);
  const std::size_t n = c.size();
  const KernelFamily fam = kernel.family();
  if (fam == KernelFamily::PowerLaw || fam == KernelFamily::CustomTable) {
    return {rhs_direct(kernel, c), false};
  }

  // Prefix sums P*(k) = sum_{j<=k} and suffix sums Q*(k) = sum_{j>=k} of
  // c_j, j c_j, j^2 c_j; all compensated, index 1..n.
  std::vector<double> p0(n + 1, 0.0), p1(n + 1, 0.0), p2(n + 1, 0.0);
  std::vector<double> q0(n + 2, 0.0), q1(n + 2, 0.0);
  {
    CompensatedSum a0, a1, a2;
    for (std::size_t j = 1; j <= n; ++j) {
      const double jd = static_cast<double>(j);
      a0.add(c[j - 1]);
      a1.add(jd * c[j - 1]);
      a2.add(jd * jd * c[j - 1]);
      p0[j] = a0.value();
      p1[j] = a1.value();
      p2[j] = a2.value();
    }
    CompensatedSum b0, b1;
    for (std::size_t j = n; j >= 1; --j) {
      const double jd = static_cast<double>(j);
      b0.add(c[j - 1]);
      b1.add(jd * c[j - 1]);
      q0[j] = b0.value();
      q1[j] = b1.value();
    }
  }

  std::vector<double> S(n, 0.0), R(n, 0.0);
  for (std::size_t k = 1; k <= n - 1; ++k) {
    const double kd = static_cast<double>(k);
    switch (fam) {
      case KernelFamily::Constant:
        S[k] = kernel.kappa() * p1[k];
        R[k] = kernel.kappa() * q0[k];
        break;
      case KernelFamily::Sum:
        // j (k+j) = k*j + j^2 for the weighted side; (k+j) splits likewise.
        S[k] = kd * p1[k] + p2[k];
        R[k] = kd * q0[k] + q1[k];
        break;
      case KernelFamily::Product:
        S[k] = kd * p2[k];
        R[k] = kd * q1[k];
        break;
      case KernelFamily::RatioSum:
        // j <= k: j * (k+j)/j = k+j.  j >= k: (k+j)/k = 1 + j/k.
        // At j = k both read the same value 2.
        S[k] = kd * p0[k] + p1[k];
        R[k] = q0[k] + q1[k] / kd;
        break;
      default:
        break;  // handled above
    }
  }
  return {assemble(c, S, R), true};
}

double leak_rate(const KernelSpec& kernel, std::span<const double> c) {
  require_size(c);
  const std::size_t n = c.size();
  CompensatedSum inner;
  for (std::size_t j = 1; j <= n - 1; ++j) {
    inner.add(static_cast<double>(j) * kernel.eval(n, j) * c[j - 1]);
  }
  // c_n multiplies last: a vacant top bin gives exactly zero leak.
  return c[n - 1] * inner.value();
}

}  // namespace ohs
