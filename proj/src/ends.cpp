#include "radialgeo/ends.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "radialgeo/asymptotics.hpp"
#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

// m'(inf) >= 1 holds exactly; estimates may undershoot by rounding.
constexpr double kUnitSlack = 1e-9;

}  // namespace

double angle_bound(double m_prime_inf) {
  if (!(m_prime_inf >= 1.0 - kUnitSlack) || !std::isfinite(m_prime_inf)) {
    throw DomainError("lim m' must be finite and at least 1, got " + std::to_string(m_prime_inf));
  }
  return std::numbers::pi / std::max(m_prime_inf, 1.0);
}

std::optional<double> angle_bound(const LimitEstimate& m_prime_inf) {
  if (!m_prime_inf.is_finite()) return std::nullopt;
  return angle_bound(m_prime_inf.value);
}

double packing_bound(double two_lambda, int n) {
  if (!(two_lambda > 0.0) || two_lambda > std::numbers::pi) {
    throw DomainError("angle must lie in (0, pi], got " + std::to_string(two_lambda));
  }
  if (n < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(n));
  return 2.0 * std::pow(std::numbers::pi / two_lambda, n - 1);
}

EndsBound ends_bound_from(const LimitEstimate& m_prime_inf, int n) {
  if (n < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(n));
  EndsBound out;
  out.m_prime_inf = m_prime_inf;
  out.two_lambda = angle_bound(m_prime_inf);
  if (!out.two_lambda) {
    out.raw_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  out.raw_bound = packing_bound(*out.two_lambda, n);
  // Propagate the error of m'(inf) upward before flooring so that rounding
  // never cuts the cap below the true bound.
  const double x = std::max(m_prime_inf.value, 1.0);
  const double slack = 2.0 * (n - 1) * std::pow(x, n - 2) * m_prime_inf.err + 1e-12 * out.raw_bound;
  out.integer_bound = static_cast<long long>(std::floor(out.raw_bound + slack));
  out.conclusive = true;
  return out;
}

EndsBound ends_bound(const CurvatureProfile& K, int n, double tol) {
  if (n < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(n));
  return ends_bound_from(m_prime_limit(K, tol), n);
}

}  // namespace radialgeo
