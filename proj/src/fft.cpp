#include "cmlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "cmlab/error.hpp"

namespace cmlab::fft {
namespace {

using Key = std::tuple<int, int, int>;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int dimension, int points, Direction dir) {
    const Key key{dimension, points, dir == Direction::Forward ? 0 : 1};
    std::lock_guard lock(mu_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    // The planner is not thread-safe; FFTW_ESTIMATE leaves the buffers untouched.
    const std::size_t total = dimension == 1 ? points : std::size_t(points) * points;
    auto* a = fftw_alloc_complex(total);
    auto* b = fftw_alloc_complex(total);
    const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = dimension == 1 ? fftw_plan_dft_1d(points, a, b, sign, flags)
                                    : fftw_plan_dft_2d(points, points, a, b, sign, flags);
    fftw_free(a);
    fftw_free(b);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void transform(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
               int dimension, int points, Direction dir) {
  const std::size_t total = dimension == 1 ? points : std::size_t(points) * points;
  require(in.size() == total && out.size() == total, "fft: buffer size mismatch");
  fftw_plan plan = cache().get(dimension, points, dir);
  // new-array execute: FFTW does not write the input of an out-of-place c2c plan
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data()));
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plan, src, dst);
}

}  // namespace cmlab::fft
