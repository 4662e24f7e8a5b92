#pragma once
// Failure taxonomy for the bound library.  Every throw carries a message that
// names the offending argument or resource; CLI maps these onto exit codes.

#include <stdexcept>
#include <string>

namespace dk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error { using Error::Error; };
// Argument outside the supported (declared) range of the implementation.
struct RangeError : Error { using Error::Error; };
// An enclosure meets a pole of the evaluated function.
struct PoleError : Error { using Error::Error; };
// Width / residual target unreachable at the precision cap.
struct PrecisionExhausted : Error { using Error::Error; };
// Sieve memory budget exceeded.
struct CapacityError : Error { using Error::Error; };
// Point evaluator could not finish factoring within the trial-division range.
struct FactorizationTimeout : Error { using Error::Error; };
// Series tail not certifiable at the requested truncation order.
struct TruncationError : Error { using Error::Error; };
// Certified quadrature failed to reach tolerance within the subdivision cap.
struct QuadratureError : Error { using Error::Error; };
// Threshold system has no admissible solution.
struct ConstraintUnsatisfiable : Error { using Error::Error; };
// Method/k/parameter combination outside the theorem hypotheses.
struct UnsupportedCombination : Error { using Error::Error; };
// Cache or reference-data validation mismatch.
struct MismatchError : Error { using Error::Error; };
// Query point below every available threshold.
struct NoApplicableBound : Error { using Error::Error; };
// Malformed configuration input.
struct ConfigError : Error { using Error::Error; };

}  // namespace dk
