#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "drt/errors.hpp"
#include "drt/sts/special.hpp"
#include "drt/sts/tests.hpp"

namespace drt::sts::tests {

namespace {

// planning is not thread-safe in FFTW; execution with new-array functions is
std::mutex g_plan_mutex;
std::map<std::size_t, fftw_plan> g_plans;

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

fftw_plan plan_for(std::size_t n) {
  std::lock_guard lock(g_plan_mutex);
  auto it = g_plans.find(n);
  if (it != g_plans.end()) return it->second;
  std::unique_ptr<double, FftwFree> in(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
  std::unique_ptr<fftw_complex, FftwFree> out(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1))));
  fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
  if (plan == nullptr) throw std::runtime_error("FFTW could not plan a transform of length " + std::to_string(n));
  g_plans.emplace(n, plan);
  return plan;
}

}  // namespace

TestResult spectral(std::span<const std::uint8_t> bits) {
  const std::size_t n = bits.size();
  if (n < 2) return TestResult{TestId::Fft, false, "needs at least 2 bits", {}};
  fftw_plan plan = plan_for(n);
  std::unique_ptr<double, FftwFree> in(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
  std::unique_ptr<fftw_complex, FftwFree> out(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1))));
  if (!in || !out) throw std::bad_alloc();
  for (std::size_t i = 0; i < n; ++i) in.get()[i] = bits[i] ? 1.0 : -1.0;
  fftw_execute_dft_r2c(plan, in.get(), out.get());

  const double dn = static_cast<double>(n);
  const double threshold = std::sqrt(2.995732274 * dn);
  std::size_t below = 0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double re = out.get()[k][0], im = out.get()[k][1];
    if (std::sqrt(re * re + im * im) < threshold) ++below;
  }
  const double expected = 0.95 * dn / 2.0;
  const double d = (static_cast<double>(below) - expected) / std::sqrt(dn / 4.0 * 0.95 * 0.05);
  return TestResult{TestId::Fft, true, {}, {erfc(std::fabs(d) / std::sqrt(2.0))}};
}

}  // namespace drt::sts::tests
