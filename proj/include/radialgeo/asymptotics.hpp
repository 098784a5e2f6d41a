#pragma once

#include "radialgeo/curvature_profile.hpp"
#include "radialgeo/jacobi.hpp"
#include "radialgeo/limit_estimate.hpp"

namespace radialgeo {

/// Total curvature 2 pi int_0^inf K f dt of the model surface, split into the
/// contributions of K_+ and K_-. Divergent parts are reported as +/-inf.
struct TotalCurvatureResult {
  enum class Classification { Finite, NegativeDivergent, PositiveDivergent };

  Classification classification = Classification::Finite;
  double value = 0.0;
  double err = 0.0;
  double c_plus = 0.0;
  double c_minus = 0.0;

  bool is_finite() const noexcept { return classification == Classification::Finite; }
};

/// Horizon past which the m' doubling search gives up.
inline constexpr double kMaxHorizon = 1048576.0;  // 2^20
inline constexpr double kInitialHorizon = 64.0;

/// Quadrature of K_+- f over [0, T] (T = f.reach()) plus an analytic tail estimate
/// from the tail model. Divergent tails are classified without quadrature.
///
/// Throws DomainError if f has a first zero and ConfigurationError if the solution
/// window does not reach the tail regime (or was cut short by blow-up) while the
/// tails are integrable.
TotalCurvatureResult total_curvature(const CurvatureProfile& K, const WarpingSolution& f, double tol);

/// lim f'(t) (= lim f(t)/t) from Richardson acceleration of f' probed at T/2^k, k = 0..6.
LimitEstimate slope_limit(const WarpingSolution& f);

/// lim m'(t) for m'' + K_- m = 0. Divergent when the tail moment of K_- diverges;
/// otherwise the horizon doubles from 64 until |m'(2T) - m'(T)| < tol. The result is
/// cross-checked against 1 - c(M*)/2pi, c(M*) being the total curvature of (K_-, m).
///
/// Throws NonConvergenceError past a horizon of 2^20 or when the two routes disagree
/// by more than 10 tol.
LimitEstimate m_prime_limit(const CurvatureProfile& K, double tol);

}  // namespace radialgeo
