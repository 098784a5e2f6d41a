#pragma once

#include <optional>
#include <span>
#include <vector>

#include "radialgeo/curvature_profile.hpp"

namespace radialgeo {

/// (f, f') at some t.
struct JacobiState {
  double f = 0.0;
  double fp = 0.0;
};

/// One accepted integration step with the data needed for quintic Hermite
/// interpolation; f'' is -K f evaluated with the piece the step lies in.
struct DenseStep {
  double t0 = 0.0;
  double h = 0.0;
  double f0 = 0.0, fp0 = 0.0, fpp0 = 0.0;
  double f1 = 0.0, fp1 = 0.0, fpp1 = 0.0;

  double t1() const noexcept { return t0 + h; }
  JacobiState eval(double t) const noexcept;
};

struct DenseNode {
  double t;
  double f;
  double fp;
};

/// Dense solution of f'' + K f = 0 on [0, reach()].
///
/// reach() equals t_end() unless integration stopped early at a first zero of f
/// or because |f| or |f'| exceeded the blow-up threshold.
class WarpingSolution {
 public:
  WarpingSolution(CurvatureProfile profile, double t_end, double tol, std::vector<DenseStep> steps,
                  std::optional<double> first_zero, std::optional<double> blowup_at);

  const CurvatureProfile& profile() const noexcept { return profile_; }
  double t_end() const noexcept { return t_end_; }
  double tol() const noexcept { return tol_; }
  double reach() const noexcept;
  std::optional<double> first_zero() const noexcept { return first_zero_; }
  std::optional<double> blowup_at() const noexcept { return blowup_at_; }

  std::span<const DenseStep> steps() const noexcept { return steps_; }
  /// Grid nodes, starting with (0, 0, 1).
  std::vector<DenseNode> nodes() const;

  /// Throws DomainError outside [0, reach()].
  JacobiState eval(double t) const;
  double f(double t) const { return eval(t).f; }
  double fp(double t) const { return eval(t).fp; }

  /// Index of the step whose closed interval contains t (t within [0, reach()]).
  std::size_t step_index(double t) const noexcept;

 private:
  CurvatureProfile profile_;
  double t_end_;
  double tol_;
  std::vector<DenseStep> steps_;
  std::optional<double> first_zero_;
  std::optional<double> blowup_at_;
};

/// Magnitude of f or f' at which integration halts and records blow-up.
inline constexpr double kBlowupThreshold = 1e100;

/// Integrates f'' + K f = 0 from (t0, y0) to t1 with the same embedded pair and
/// control as solve(), without zero detection. Used for re-integration checks.
JacobiState integrate(const CurvatureProfile& K, double t0, JacobiState y0, double t1, double tol);

/// Solves f'' + K f = 0, f(0) = 0, f'(0) = 1 on [0, t_end] with Dormand-Prince 5(4)
/// and PI step control, restarting at every profile breakpoint. Requires t_end > 0 and
/// 1e-14 <= tol <= 1e-3 (DomainError otherwise). Throws IntegrationError on step-size underflow.
WarpingSolution solve(const CurvatureProfile& K, double t_end, double tol);

/// solve() applied to negative_part(K). The solution m is convex with m'(0) = 1,
/// so it never vanishes on (0, t_end].
WarpingSolution solve_m(const CurvatureProfile& K, double t_end, double tol);

}  // namespace radialgeo
