#include "lrdcp/detail/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

#include "lrdcp/errors.hpp"

namespace lrdcp::detail {

namespace {
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace

fft::fft(std::size_t n) : n_(n) {
  if (n == 0) throw domain_error("fft: size must be positive");
  in_ = fftw_malloc(sizeof(fftw_complex) * n);
  out_ = fftw_malloc(sizeof(fftw_complex) * n);
  if (!in_ || !out_) {
    fftw_free(in_);
    fftw_free(out_);
    throw std::bad_alloc();
  }
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_ = fftw_plan_dft_1d(static_cast<int>(n),
                           static_cast<fftw_complex*>(in_),
                           static_cast<fftw_complex*>(out_), FFTW_FORWARD,
                           FFTW_ESTIMATE);
}

fft::~fft() {
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  }
  fftw_free(in_);
  fftw_free(out_);
}

void fft::forward(const std::complex<double>* in, std::complex<double>* out) {
  // std::complex<double> and fftw_complex share layout.
  std::memcpy(in_, in, sizeof(fftw_complex) * n_);
  fftw_execute(static_cast<fftw_plan>(plan_));
  std::memcpy(out, out_, sizeof(fftw_complex) * n_);
}

void fft::forward(const std::vector<std::complex<double>>& in,
                  std::vector<std::complex<double>>& out) {
  if (in.size() != n_) throw domain_error("fft: input size mismatch");
  out.resize(n_);
  forward(in.data(), out.data());
}

}  // namespace lrdcp::detail
