// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace timan {

// Error categories used across the library. Every failure that a caller can
// act on is thrown as one of the typed subclasses below; the category enum is
// kept for switch-style handling at the CLI boundary.
enum class Errc {
  shape_mismatch,
  band_limit_exceeded,
  certificate_failed,
  divergent_series,
  radius_exceeded,
  cfl_violation,
  solution_blowup,
  ladder_overflow,
  nonconverged_quadrature,
  tail_fit_unstable,
  out_of_envelope,
  window_too_short,
  io_error,
  usage,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

#define TIMAN_DEFINE_ERROR(Name, code)                                 \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(std::string msg) : Error(code, std::move(msg)) {}    \
  }

TIMAN_DEFINE_ERROR(ShapeError, Errc::shape_mismatch);
TIMAN_DEFINE_ERROR(BandLimitExceeded, Errc::band_limit_exceeded);
TIMAN_DEFINE_ERROR(CertificateFailed, Errc::certificate_failed);
TIMAN_DEFINE_ERROR(DivergentSeries, Errc::divergent_series);
TIMAN_DEFINE_ERROR(RadiusExceeded, Errc::radius_exceeded);
TIMAN_DEFINE_ERROR(CflViolation, Errc::cfl_violation);
TIMAN_DEFINE_ERROR(SolutionBlowup, Errc::solution_blowup);
TIMAN_DEFINE_ERROR(LadderOverflow, Errc::ladder_overflow);
TIMAN_DEFINE_ERROR(NonConvergedQuadrature, Errc::nonconverged_quadrature);
TIMAN_DEFINE_ERROR(TailFitUnstable, Errc::tail_fit_unstable);
TIMAN_DEFINE_ERROR(EnvelopeError, Errc::out_of_envelope);
TIMAN_DEFINE_ERROR(WindowError, Errc::window_too_short);
TIMAN_DEFINE_ERROR(IoError, Errc::io_error);
TIMAN_DEFINE_ERROR(UsageError, Errc::usage);
TIMAN_DEFINE_ERROR(InternalError, Errc::internal);

#undef TIMAN_DEFINE_ERROR

}  // namespace timan
