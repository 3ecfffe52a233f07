#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lrdcp::detail {

// Forward complex DFT of a fixed size (FFTW backend, arbitrary n).  Owns its
// plan and buffers; create one per thread.  Plan creation is serialized
// internally (FFTW planning is not thread-safe), execution is reentrant on
// distinct objects.
class fft {
 public:
  explicit fft(std::size_t n);
  ~fft();
  fft(const fft&) = delete;
  fft& operator=(const fft&) = delete;

  std::size_t size() const { return n_; }

  // out[k] = sum_j in[j] * exp(-2 pi i j k / n)
  void forward(const std::complex<double>* in, std::complex<double>* out);
  void forward(const std::vector<std::complex<double>>& in,
               std::vector<std::complex<double>>& out);

 private:
  std::size_t n_;
  void* plan_;  // fftw_plan
  void* in_;    // fftw_complex*
  void* out_;
};

}  // namespace lrdcp::detail
