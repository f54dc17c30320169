#pragma once

namespace drt::sts {

/// Complementary error function.
double erfc(double x) noexcept;
/// Standard normal CDF.
double normal_cdf(double x) noexcept;
/// log Gamma(x) for x > 0; reentrant.
double log_gamma(double x) noexcept;
/// Regularized lower incomplete gamma P(a, x).
double igam(double a, double x) noexcept;
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double igamc(double a, double x) noexcept;

}  // namespace drt::sts
