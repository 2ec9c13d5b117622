// SPDX-License-Identifier: Apache-2.0

// FFTW-backed transforms. Plans are cached per (dim, n, direction), created
// with FFTW_ESTIMATE | FFTW_UNALIGNED so they are deterministic and can be
// executed on arbitrary caller buffers via fftw_execute_dft. The planner is
// not thread-safe; plan creation is serialized, execution is concurrent.

#include "timan/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "timan/errors.hpp"
#include "timan/kernels.hpp"

namespace timan {
namespace {

class PlanCache {
 public:
  fftw_plan get(const Grid& g, int sign) {
    const auto key = std::make_tuple(g.dim, g.n, sign);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    std::vector<fftw_complex> a(g.num_nodes()), b(g.num_nodes());
    int dims[3] = {g.n, g.n, g.n};
    fftw_plan p = fftw_plan_dft(g.dim, dims, a.data(), b.data(), sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (p == nullptr) throw InternalError("fftw plan creation failed");
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

namespace fft {

void forward(const Grid& g, const std::complex<double>* in, std::complex<double>* out) {
  fftw_plan p = cache().get(g, FFTW_FORWARD);
  fftw_execute_dft(p, as_fftw(const_cast<std::complex<double>*>(in)), as_fftw(out));
  const double inv_n = 1.0 / static_cast<double>(g.num_nodes());
  kernels::scale(reinterpret_cast<double*>(out), reinterpret_cast<const double*>(out), inv_n,
                 2 * g.num_nodes());
}

void backward(const Grid& g, const std::complex<double>* in, std::complex<double>* out) {
  fftw_plan p = cache().get(g, FFTW_BACKWARD);
  fftw_execute_dft(p, as_fftw(const_cast<std::complex<double>*>(in)), as_fftw(out));
}

}  // namespace fft

SpectralField to_spectral(const RealField& f) {
  if (f.components() == 0) throw ShapeError("to_spectral: empty field");
  SpectralField out(f.grid(), f.components());
  const std::size_t nn = f.nodes();
  std::vector<std::complex<double>> buf(nn);
  for (int c = 0; c < f.components(); ++c) {
    auto vals = f.comp(c);
    for (std::size_t i = 0; i < nn; ++i) buf[i] = vals[i];
    fft::forward(f.grid(), buf.data(), out.comp(c).data());
  }
  return out;
}

RealField to_nodal(const SpectralField& f) {
  if (f.components() == 0) throw ShapeError("to_nodal: empty field");
  RealField out(f.grid(), f.components());
  const std::size_t nn = f.nodes();
  std::vector<std::complex<double>> buf(nn);
  for (int c = 0; c < f.components(); ++c) {
    fft::backward(f.grid(), f.comp(c).data(), buf.data());
    auto vals = out.comp(c);
    for (std::size_t i = 0; i < nn; ++i) vals[i] = buf[i].real();
  }
  return out;
}

}  // namespace timan
