#pragma once

#include <optional>

#include "radialgeo/curvature_profile.hpp"
#include "radialgeo/limit_estimate.hpp"

namespace radialgeo {

/// Cap on the number of ends from the angle separation of end-defining rays.
/// When m'(inf) diverges the bound is inconclusive: two_lambda is empty,
/// raw_bound is +inf and integer_bound is 0.
struct EndsBound {
  LimitEstimate m_prime_inf;
  std::optional<double> two_lambda;
  double raw_bound = 0.0;
  long long integer_bound = 0;
  bool conclusive = false;
};

/// 2 lambda = pi / m'(inf). Requires m'(inf) >= 1 (DomainError otherwise).
double angle_bound(double m_prime_inf);
/// Empty for a divergent estimate.
std::optional<double> angle_bound(const LimitEstimate& m_prime_inf);

/// Packing count 2 (pi / two_lambda)^(n-1). Requires 0 < two_lambda <= pi and n >= 2.
double packing_bound(double two_lambda, int n);

/// Composes angle_bound and packing_bound for a known m'(inf).
EndsBound ends_bound_from(const LimitEstimate& m_prime_inf, int n);

/// m_prime_limit -> angle_bound -> packing_bound.
EndsBound ends_bound(const CurvatureProfile& K, int n, double tol);

}  // namespace radialgeo
