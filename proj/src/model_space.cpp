#include "radialgeo/model_space.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "radialgeo/errors.hpp"
#include "solution_quadrature.hpp"

namespace radialgeo {

namespace {

constexpr double kVolumeRelTol = 1e-10;
constexpr int kProbeCount = 7;

void check_radius(const ModelSpace& ms, double t) {
  const double end = ms.warping().reach();
  if (!(t >= 0.0) || t > end * (1.0 + 1e-12)) {
    throw DomainError("radius " + std::to_string(t) + " outside the solution window [0, " +
                      std::to_string(end) + "]");
  }
}

}  // namespace

double unit_sphere_volume(int n) {
  if (n < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(n));
  const double half = 0.5 * n;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

ModelSpace::ModelSpace(int n, WarpingSolution f)
    : n_(n), f_(std::move(f)), omega_(unit_sphere_volume(n)) {
  if (f_.first_zero()) throw ModelCompactnessError(*f_.first_zero());
}

std::vector<double> ball_volumes(const ModelSpace& ms, std::span<const double> radii) {
  const int power = ms.dimension() - 1;
  auto integrand = [power](double, double f) { return std::pow(f, power); };

  std::vector<double> out;
  out.reserve(radii.size());
  double prev = 0.0;
  double acc = 0.0;
  for (double r : radii) {
    check_radius(ms, r);
    if (r < prev) throw DomainError("ball_volumes needs ascending radii");
    acc += detail::integrate_along(ms.warping(), prev, r, integrand, kVolumeRelTol).value;
    prev = r;
    out.push_back(ms.sphere_volume() * acc);
  }
  return out;
}

double ball_volume(const ModelSpace& ms, double t) {
  const std::array<double, 1> r{t};
  return ball_volumes(ms, r).front();
}

GrowthCoefficient growth_coefficient(const ModelSpace& ms, const TotalCurvatureResult& c) {
  const double T = ms.warping().reach();
  const int n = ms.dimension();

  std::array<double, kProbeCount> radii{};
  for (int j = 0; j < kProbeCount; ++j) radii[j] = T / std::exp2(kProbeCount - 1 - j);
  const std::vector<double> vols = ball_volumes(ms, radii);
  std::array<double, kProbeCount> ratios{};
  for (int j = 0; j < kProbeCount; ++j) ratios[j] = vols[j] / std::pow(radii[j], n);

  GrowthCoefficient g;
  g.direct = richardson_limit(ratios);
  if (c.is_finite()) {
    const double base = 1.0 - c.value / (2.0 * std::numbers::pi);
    const double value = ms.sphere_volume() / n * std::pow(base, n - 1);
    // d/dc of the closed form times the error of c.
    const double err = ms.sphere_volume() / n * (n - 1) * std::pow(std::abs(base), n - 2) *
                       c.err / (2.0 * std::numbers::pi);
    g.closed_form = LimitEstimate::finite(value, err);
  } else {
    g.closed_form = LimitEstimate::divergent(std::numeric_limits<double>::infinity());
  }
  g.discrepancy = (g.direct.is_finite() && g.closed_form.is_finite())
                      ? std::abs(g.direct.value - g.closed_form.value)
                      : std::numeric_limits<double>::quiet_NaN();
  return g;
}

}  // namespace radialgeo
