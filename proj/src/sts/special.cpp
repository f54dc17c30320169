#include "drt/sts/special.hpp"

#include <cmath>

namespace drt::sts {

namespace {

constexpr double kMachEp = 1.11022302462515654042e-16;
constexpr double kMaxLog = 7.09782712893383996843e2;
constexpr double kBig = 4.503599627370496e15;
constexpr double kBigInv = 2.22044604925031308085e-16;

}  // namespace

double erfc(double x) noexcept { return std::erfc(x); }

double normal_cdf(double x) noexcept {
  constexpr double sqrt2 = 1.414213562373095048801688724209698078569672;
  if (x > 0) return 0.5 * (1.0 + std::erf(x / sqrt2));
  return 0.5 * (1.0 - std::erf(-x / sqrt2));
}

double log_gamma(double x) noexcept {
  // shift up to x >= 10, then Stirling
  double shift = 0.0;
  while (x < 10.0) {
    shift += std::log(x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12 -
             inv2 * (1.0 / 360 -
                     inv2 * (1.0 / 1260 - inv2 * (1.0 / 1680 - inv2 * (1.0 / 1188 - inv2 * (691.0 / 360360))))));
  return (x - 0.5) * std::log(x) - x + 0.91893853320467274178 + series - shift;
}

double igam(double a, double x) noexcept {
  if (x <= 0 || a <= 0) return 0.0;
  if (x > 1.0 && x > a) return 1.0 - igamc(a, x);

  double ax = a * std::log(x) - x - log_gamma(a);
  if (ax < -kMaxLog) return 0.0;
  ax = std::exp(ax);

  double r = a, c = 1.0, ans = 1.0;
  do {
    r += 1.0;
    c *= x / r;
    ans += c;
  } while (c / ans > kMachEp);
  return ans * ax / a;
}

double igamc(double a, double x) noexcept {
  if (x <= 0 || a <= 0) return 1.0;
  if (x < 1.0 || x < a) return 1.0 - igam(a, x);

  double ax = a * std::log(x) - x - log_gamma(a);
  if (ax < -kMaxLog) return 0.0;
  ax = std::exp(ax);

  // continued fraction
  double y = 1.0 - a;
  double z = x + y + 1.0;
  double c = 0.0;
  double pkm2 = 1.0, qkm2 = x, pkm1 = x + 1.0, qkm1 = z * x;
  double ans = pkm1 / qkm1;
  double t;
  do {
    c += 1.0;
    y += 1.0;
    z += 2.0;
    const double yc = y * c;
    const double pk = pkm1 * z - pkm2 * yc;
    const double qk = qkm1 * z - qkm2 * yc;
    if (qk != 0) {
      const double r = pk / qk;
      t = std::fabs((ans - r) / r);
      ans = r;
    } else {
      t = 1.0;
    }
    pkm2 = pkm1;
    pkm1 = pk;
    qkm2 = qkm1;
    qkm1 = qk;
    if (std::fabs(pk) > kBig) {
      pkm2 *= kBigInv;
      pkm1 *= kBigInv;
      qkm2 *= kBigInv;
      qkm1 *= kBigInv;
    }
  } while (t > kMachEp);
  return ans * ax;
}

}  // namespace drt::sts
