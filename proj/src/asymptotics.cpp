#include "radialgeo/asymptotics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "radialgeo/errors.hpp"
#include "solution_quadrature.hpp"

namespace radialgeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kProbeCount = 7;

bool diverges_negatively(const TailModel& tail) {
  if (const auto* c = std::get_if<ConstantTail>(&tail)) return c->kappa < 0.0;
  if (const auto* pd = std::get_if<PowerDecayTail>(&tail)) return pd->a < 0.0 && pd->p <= 2.0;
  return false;
}

// Oscillatory positive tails: f keeps returning to zero, so int K_+ f has no limit.
bool diverges_positively(const TailModel& tail) {
  if (const auto* c = std::get_if<ConstantTail>(&tail)) return c->kappa > 0.0;
  if (const auto* pd = std::get_if<PowerDecayTail>(&tail)) {
    return pd->a > 0.0 && (pd->p < 2.0 || (pd->p == 2.0 && pd->a > 0.25));
  }
  return false;
}

// Integral of the tail model times f over [T, inf).
detail::QuadResult tail_integral(const TailModel& tail, const WarpingSolution& f, double T, double tol) {
  const auto* pd = std::get_if<PowerDecayTail>(&tail);
  if (pd == nullptr || pd->a == 0.0) return {};

  const JacobiState y = f.eval(T);
  if (pd->p == 2.0) {
    // Non-oscillatory a/(1+t)^2 with 0 < a <= 1/4: f grows like (1+t)^alpha with
    // alpha < 1, so f' -> 0 and the tail equals f'(T) - f'(inf) = f'(T).
    return {y.fp, std::abs(y.fp) * tol};
  }

  // f continued linearly from T: f(t) ~ f(T) + f'(T)(t - T), with x = 1 + t.
  const double a = pd->a;
  const double p = pd->p;
  const double X = 1.0 + T;
  const double intercept = y.f - y.fp * X;
  const double value =
      a * (intercept * std::pow(X, 1.0 - p) / (p - 1.0) + y.fp * std::pow(X, 2.0 - p) / (p - 2.0));
  // Relative drift of f' over the tail bounds the error of the linear continuation.
  const double drift = 2.0 * std::abs(a) * std::pow(X, 2.0 - p) / (p - 2.0);
  return {value, std::abs(value) * (drift + tol)};
}

// 2 pi-free integral of part * f over [0, T] plus its tail.
detail::QuadResult part_integral(const CurvatureProfile& part, const WarpingSolution& f, double T,
                                 double tol) {
  const double rel_tol = std::max(0.5 * tol, 1e-13);
  detail::QuadResult total;
  for (std::size_t i = 0; i < part.piece_count(); ++i) {
    const auto [lo, hi] = part.piece_bounds(i);
    const double b = std::min(hi, T);
    if (lo >= b) continue;
    if (i < part.segments().size() && part.segments()[i].num.is_zero()) continue;
    const auto r = detail::integrate_along(
        f, lo, b, [&part, i](double t, double fv) { return part.eval_piece(i, t) * fv; }, rel_tol);
    total.value += r.value;
    total.err += r.err;
  }
  const auto tail = tail_integral(part.tail(), f, T, tol);
  total.value += tail.value;
  total.err += tail.err;
  return total;
}

}  // namespace

TotalCurvatureResult total_curvature(const CurvatureProfile& K, const WarpingSolution& f, double tol) {
  if (f.first_zero()) {
    throw DomainError("total curvature needs a warping function without zeros; f vanishes at t=" +
                      std::to_string(*f.first_zero()));
  }
  const CurvatureProfile plus = positive_part(K);
  const CurvatureProfile minus = negative_part(K);
  const bool neg_div = diverges_negatively(minus.tail());
  const bool pos_div = diverges_positively(plus.tail());

  const double T = f.reach();
  const bool window_ok = !f.blowup_at() && T >= K.tail_start();

  TotalCurvatureResult result;
  if (neg_div || pos_div) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    result.classification = neg_div ? TotalCurvatureResult::Classification::NegativeDivergent
                                    : TotalCurvatureResult::Classification::PositiveDivergent;
    result.c_minus = neg_div ? -inf : (window_ok ? kTwoPi * part_integral(minus, f, T, tol).value : nan);
    result.c_plus = pos_div ? inf : (window_ok ? kTwoPi * part_integral(plus, f, T, tol).value : nan);
    result.value = neg_div ? -inf : inf;
    return result;
  }

  if (f.blowup_at()) {
    throw ConfigurationError("warping function blew up at t=" + std::to_string(*f.blowup_at()) +
                             " before the tail regime could be resolved");
  }
  if (T < K.tail_start()) {
    throw ConfigurationError("solution window T=" + std::to_string(T) +
                             " is shorter than the tail start " + std::to_string(K.tail_start()));
  }

  const auto p = part_integral(plus, f, T, tol);
  const auto m = part_integral(minus, f, T, tol);
  result.c_plus = kTwoPi * p.value;
  result.c_minus = kTwoPi * m.value;
  result.value = result.c_plus + result.c_minus;
  result.err = kTwoPi * (p.err + m.err);
  return result;
}

LimitEstimate slope_limit(const WarpingSolution& f) {
  const double T = f.reach();
  std::array<double, kProbeCount> probes{};
  for (int j = 0; j < kProbeCount; ++j) {
    probes[j] = f.fp(T / std::exp2(kProbeCount - 1 - j));
  }
  return richardson_limit(probes);
}

LimitEstimate m_prime_limit(const CurvatureProfile& K, double tol) {
  if (tail_moment_class(K) == MomentClass::DivergentMoment) {
    const WarpingSolution m = solve_m(K, kInitialHorizon, tol);
    return LimitEstimate::divergent(m.fp(m.reach()));
  }

  double horizon = kInitialHorizon;
  for (;;) {
    if (2.0 * horizon > kMaxHorizon) {
      throw NonConvergenceError("m' did not settle within horizon 2^20");
    }
    const WarpingSolution m = solve_m(K, 2.0 * horizon, tol);
    if (m.blowup_at()) {
      throw NonConvergenceError("m blew up at t=" + std::to_string(*m.blowup_at()));
    }
    const double near = m.fp(horizon);
    const double far = m.fp(2.0 * horizon);
    const double change = std::abs(far - near);
    if (change < tol * std::max(1.0, std::abs(far)) && 2.0 * horizon >= K.tail_start()) {
      // Second route: m'(inf) = 1 - int K_- m = 1 - c(M*)/2pi.
      const CurvatureProfile minus = negative_part(K);
      const TotalCurvatureResult c_star = total_curvature(minus, m, tol);
      const double integral_route = 1.0 - c_star.value / kTwoPi;
      if (std::abs(integral_route - far) > 10.0 * tol * std::max(1.0, std::abs(far))) {
        throw NonConvergenceError("m' limit routes disagree: " + std::to_string(far) + " vs " +
                                  std::to_string(integral_route));
      }
      return LimitEstimate::finite(far, change);
    }
    horizon *= 2.0;
  }
}

}  // namespace radialgeo
