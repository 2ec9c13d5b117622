// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cstdlib>
#include <string>

#include "timan/errors.hpp"
#include "timan/kernels.hpp"

namespace timan::kernels {

const Table& scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
const Table& avx2_table();
#endif
#if defined(__aarch64__)
const Table& neon_table();
#endif

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

namespace {

Backend pick_default() {
  if (const char* env = std::getenv("TIMAN_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return Backend::scalar;
    if (want == "avx2" && backend_supported(Backend::avx2)) return Backend::avx2;
    if (want == "neon" && backend_supported(Backend::neon)) return Backend::neon;
    // "auto" or an unsupported request falls through to detection.
  }
  if (backend_supported(Backend::avx2)) return Backend::avx2;
  if (backend_supported(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

std::atomic<Backend>& active_slot() {
  static std::atomic<Backend> slot{pick_default()};
  return slot;
}

}  // namespace

Backend active_backend() { return active_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw EnvelopeError("kernel backend '" + backend_name(b) + "' not supported on this host");
  }
  active_slot().store(b, std::memory_order_relaxed);
}

const Table& table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return scalar_table();
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return avx2_table();
#else
      break;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return neon_table();
#else
      break;
#endif
  }
  throw EnvelopeError("kernel backend '" + backend_name(b) + "' not built on this host");
}

const Table& dispatch() { return table_for(active_backend()); }

}  // namespace timan::kernels
