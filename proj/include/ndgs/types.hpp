#pragma once

#include <complex>
#include <stdexcept>

namespace ndgs {

using cplx = std::complex<double>;

// Execution policy for the data-parallel kernels. Parallel runs the OpenMP
// path, Serial the reference loop the tests compare against.
enum class Exec { Serial, Parallel };

Exec default_exec() noexcept;
void set_default_exec(Exec e) noexcept;

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MaxIters : SolverError {
  using SolverError::SolverError;
};
struct NonConcaveStep : SolverError {
  using SolverError::SolverError;
};
struct CapViolation : SolverError {
  using SolverError::SolverError;
};
struct GapViolation : SolverError {
  using SolverError::SolverError;
};
struct NoBracket : SolverError {
  using SolverError::SolverError;
};
struct TailTooShort : SolverError {
  using SolverError::SolverError;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadMagic : IoError {
  using IoError::IoError;
};
struct VersionMismatch : IoError {
  using IoError::IoError;
};
struct TruncatedPayload : IoError {
  using IoError::IoError;
};

}  // namespace ndgs
