#pragma once

#include <span>

namespace radialgeo {

/// Estimated limit of a sequence: a finite value with a nonnegative error estimate,
/// or Divergent together with the last finite probe value.
struct LimitEstimate {
  enum class Status { Finite, Divergent };

  Status status = Status::Finite;
  double value = 0.0;
  double err = 0.0;
  double last_probe = 0.0;

  static LimitEstimate finite(double value, double err) {
    return {Status::Finite, value, err, value};
  }
  static LimitEstimate divergent(double last_probe) {
    return {Status::Divergent, 0.0, 0.0, last_probe};
  }
  bool is_finite() const noexcept { return status == Status::Finite; }
};

/// Growth past which a monotonically increasing probe sequence is declared divergent.
inline constexpr double kDivergenceThreshold = 1e6;

/// Richardson extrapolation of probes taken at t, 2t, 4t, ... (ascending t).
///
/// The leading exponent q of the remainder c t^-q is first estimated from the three
/// largest-t probes, then refined to the value that makes the last three entries of
/// the deepest column agree best; exponents q, q+1, q+2 are eliminated. The estimate
/// is the last entry of the deepest column and err is the larger of that column's
/// spread and the last correction. Probes whose successive differences do not contract, or that grow
/// monotonically beyond kDivergenceThreshold, give Divergent.
LimitEstimate richardson_limit(std::span<const double> probes);

}  // namespace radialgeo
