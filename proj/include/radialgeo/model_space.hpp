#pragma once

#include <span>
#include <vector>

#include "radialgeo/asymptotics.hpp"
#include "radialgeo/jacobi.hpp"
#include "radialgeo/limit_estimate.hpp"

namespace radialgeo {

/// Volume of the unit (n-1)-sphere, 2 pi^(n/2) / Gamma(n/2). Throws DomainError for n < 2.
double unit_sphere_volume(int n);

/// Rotationally symmetric n-manifold with metric dt^2 + f(t)^2 ds^2 on S^(n-1).
class ModelSpace {
 public:
  /// Throws DomainError for n < 2 and ModelCompactnessError when f has a first zero.
  ModelSpace(int n, WarpingSolution f);

  int dimension() const noexcept { return n_; }
  const WarpingSolution& warping() const noexcept { return f_; }
  double sphere_volume() const noexcept { return omega_; }

 private:
  int n_;
  WarpingSolution f_;
  double omega_;
};

/// omega_{n-1} int_0^t f^(n-1) dr. Throws DomainError outside [0, f.reach()].
double ball_volume(const ModelSpace& ms, double t);

/// Ball volumes at ascending radii, integrating each gap once.
std::vector<double> ball_volumes(const ModelSpace& ms, std::span<const double> radii);

/// lim vol B_t / t^n by two routes: Richardson-accelerated probes at t_end/2^k,
/// k = 0..6, and (omega_{n-1}/n)(1 - c/2pi)^(n-1) from the total curvature.
/// When c is not finite the closed form is Divergent and `discrepancy` is NaN.
struct GrowthCoefficient {
  LimitEstimate direct;
  LimitEstimate closed_form;
  double discrepancy = 0.0;
};

GrowthCoefficient growth_coefficient(const ModelSpace& ms, const TotalCurvatureResult& c);

}  // namespace radialgeo
