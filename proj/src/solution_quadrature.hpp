#pragma once

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "radialgeo/jacobi.hpp"

namespace radialgeo::detail {

struct QuadResult {
  double value = 0.0;
  double err = 0.0;
};

inline constexpr unsigned kMaxQuadDepth = 12;

/// Adaptive 15-point Gauss-Kronrod on [a, b].
template <class F>
QuadResult integrate(F&& fn, double a, double b, double rel_tol) {
  if (!(b > a)) return {};
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      fn, a, b, kMaxQuadDepth, rel_tol, &err);
  return {v, err};
}

/// Integrates g(t, f(t)) over [a, b] along the dense output of `sol`, one panel
/// per accepted step so that the interpolant is smooth on every panel. The caller
/// keeps [a, b] inside a single profile piece when g involves K.
template <class G>
QuadResult integrate_along(const WarpingSolution& sol, double a, double b, G&& g, double rel_tol) {
  QuadResult total;
  if (!(b > a)) return total;
  const auto steps = sol.steps();
  for (std::size_t i = sol.step_index(a); i < steps.size(); ++i) {
    const DenseStep& s = steps[i];
    const double lo = std::max(a, s.t0);
    const double hi = std::min(b, s.t1());
    if (lo >= b) break;
    if (hi <= lo) continue;
    const QuadResult r = integrate([&](double t) { return g(t, s.eval(t).f); }, lo, hi, rel_tol);
    total.value += r.value;
    total.err += r.err;
  }
  return total;
}

}  // namespace radialgeo::detail
