#include "radialgeo/jacobi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

// PI controller (Gustafsson) exponents for a 4th-order error estimate.
constexpr double kAlpha = 0.7 / 5.0;
constexpr double kBeta = 0.4 / 5.0;
constexpr double kSafety = 0.9;
constexpr double kFacMin = 0.2;
constexpr double kFacMax = 5.0;

constexpr double kZeroTolerance = 1e-12;
constexpr long kMaxSteps = 5'000'000;
constexpr double kInitialStep = 1e-2;

struct RunResult {
  double t;
  JacobiState y;
  std::optional<double> first_zero;
  std::optional<double> blowup_at;
};

// Advances f'' = -K f from (t0, y0) to t1 piece by piece. Steps never straddle a
// profile breakpoint; each piece is evaluated on its closed interval.
RunResult run(const CurvatureProfile& K, double t0, JacobiState y0, double t1, double tol,
              bool detect_zero, std::vector<DenseStep>* out) {
  double t = t0;
  JacobiState y = y0;
  double h = std::min(kInitialStep, t1 - t0);
  double err_old = 1e-4;
  bool rejected = false;
  long n_steps = 0;

  while (t < t1) {
    const std::size_t piece = K.piece_index(t);
    const double b = std::min(t1, K.piece_bounds(piece).second);
    auto curv = [&K, piece](double s) { return K.eval_piece(piece, s); };

    double kf1 = y.fp;
    double kp1 = -curv(t) * y.f;

    while (t < b) {
      if (++n_steps > kMaxSteps) throw IntegrationError("step budget exhausted", t);
      // t + (b - t) can round below b; the last step of a piece lands on b exactly.
      const bool last = t + 1.1 * h >= b;
      if (last) h = b - t;
      if (h <= 1e-14 * std::max(1.0, std::abs(t))) {
        throw IntegrationError("step size underflow", t);
      }

      std::array<double, 7> kappa{};
      kappa[0] = curv(t);
      auto stage = [&](int i, double s, double f, double fp, double& kf, double& kp) {
        kappa[i] = curv(s);
        kf = fp;
        kp = -kappa[i] * f;
      };

      double kf2, kp2, kf3, kp3, kf4, kp4, kf5, kp5, kf6, kp6, kf7, kp7;
      stage(1, t + c2 * h, y.f + h * a21 * kf1, y.fp + h * a21 * kp1, kf2, kp2);
      stage(2, t + c3 * h, y.f + h * (a31 * kf1 + a32 * kf2), y.fp + h * (a31 * kp1 + a32 * kp2),
            kf3, kp3);
      stage(3, t + c4 * h, y.f + h * (a41 * kf1 + a42 * kf2 + a43 * kf3),
            y.fp + h * (a41 * kp1 + a42 * kp2 + a43 * kp3), kf4, kp4);
      stage(4, t + c5 * h, y.f + h * (a51 * kf1 + a52 * kf2 + a53 * kf3 + a54 * kf4),
            y.fp + h * (a51 * kp1 + a52 * kp2 + a53 * kp3 + a54 * kp4), kf5, kp5);
      const double t_new = (last || t + h >= b) ? b : t + h;
      stage(5, t_new, y.f + h * (a61 * kf1 + a62 * kf2 + a63 * kf3 + a64 * kf4 + a65 * kf5),
            y.fp + h * (a61 * kp1 + a62 * kp2 + a63 * kp3 + a64 * kp4 + a65 * kp5), kf6, kp6);
      const JacobiState y_new{
          y.f + h * (b1 * kf1 + b3 * kf3 + b4 * kf4 + b5 * kf5 + b6 * kf6),
          y.fp + h * (b1 * kp1 + b3 * kp3 + b4 * kp4 + b5 * kp5 + b6 * kp6)};
      stage(6, t_new, y_new.f, y_new.fp, kf7, kp7);

      // A step may not span more than a quarter period of the local oscillation,
      // so a sign change of f at the step ends cannot hide two zeros.
      const double kappa_max = *std::max_element(kappa.begin(), kappa.end());
      if (kappa_max > 0.0 && h * std::sqrt(kappa_max) > 0.5 * std::numbers::pi) {
        h = kSafety * 0.5 * std::numbers::pi / std::sqrt(kappa_max);
        rejected = true;
        continue;
      }

      const double ef = h * (e1 * kf1 + e3 * kf3 + e4 * kf4 + e5 * kf5 + e6 * kf6 + e7 * kf7);
      const double ep = h * (e1 * kp1 + e3 * kp3 + e4 * kp4 + e5 * kp5 + e6 * kp6 + e7 * kp7);
      const double sf = tol + tol * std::max(std::abs(y.f), std::abs(y_new.f));
      const double sp = tol + tol * std::max(std::abs(y.fp), std::abs(y_new.fp));
      const double err = std::sqrt(0.5 * ((ef / sf) * (ef / sf) + (ep / sp) * (ep / sp)));

      if (!std::isfinite(err) || !std::isfinite(y_new.f) || !std::isfinite(y_new.fp)) {
        h *= kFacMin;
        rejected = true;
        continue;
      }

      if (err > 1.0) {
        h *= std::max(kFacMin, kSafety * std::pow(err, -0.2));
        rejected = true;
        continue;
      }

      const DenseStep step{t, t_new - t, y.f, y.fp, kp1, y_new.f, y_new.fp, kp7};
      if (out != nullptr) out->push_back(step);

      double fac = kSafety * std::pow(std::max(err, 1e-10), -kAlpha) * std::pow(err_old, kBeta);
      fac = std::clamp(fac, kFacMin, rejected ? 1.0 : kFacMax);
      err_old = std::max(err, 1e-4);
      rejected = false;

      const double t_prev = t;
      t = t_new;
      y = y_new;
      kf1 = kf7;
      kp1 = kp7;
      h *= fac;

      if (detect_zero && y.f <= 0.0) {
        double lo = t_prev;
        double hi = t;
        for (int i = 0; i < 200 && hi - lo > kZeroTolerance; ++i) {
          const double mid = 0.5 * (lo + hi);
          if (step.eval(mid).f > 0.0) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        const double zero = 0.5 * (lo + hi);
        return {zero, step.eval(zero), zero, std::nullopt};
      }
      if (std::abs(y.f) > kBlowupThreshold || std::abs(y.fp) > kBlowupThreshold) {
        return {t, y, std::nullopt, t};
      }
    }
  }
  return {t, y, std::nullopt, std::nullopt};
}

void check_window(double t_end, double tol) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw DomainError("integration window must be positive, got t_end=" + std::to_string(t_end));
  }
  if (!(tol >= 1e-14 && tol <= 1e-3)) {
    throw DomainError("tolerance must lie in [1e-14, 1e-3], got " + std::to_string(tol));
  }
}

}  // namespace

JacobiState DenseStep::eval(double t) const noexcept {
  const double s = (t - t0) / h;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;

  const double H0 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
  const double H1 = s - 6 * s3 + 8 * s4 - 3 * s5;
  const double H2 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5);
  const double H3 = 0.5 * (s3 - 2 * s4 + s5);
  const double H4 = -4 * s3 + 7 * s4 - 3 * s5;
  const double H5 = 10 * s3 - 15 * s4 + 6 * s5;

  const double D0 = -30 * s2 + 60 * s3 - 30 * s4;
  const double D1 = 1 - 18 * s2 + 32 * s3 - 15 * s4;
  const double D2 = s - 4.5 * s2 + 6 * s3 - 2.5 * s4;
  const double D3 = 1.5 * s2 - 4 * s3 + 2.5 * s4;
  const double D4 = -12 * s2 + 28 * s3 - 15 * s4;
  const double D5 = 30 * s2 - 60 * s3 + 30 * s4;

  const double hh = h * h;
  const double f = H0 * f0 + h * H1 * fp0 + hh * H2 * fpp0 + hh * H3 * fpp1 + h * H4 * fp1 + H5 * f1;
  const double fp =
      (D0 * f0 + h * D1 * fp0 + hh * D2 * fpp0 + hh * D3 * fpp1 + h * D4 * fp1 + D5 * f1) / h;
  return {f, fp};
}

WarpingSolution::WarpingSolution(CurvatureProfile profile, double t_end, double tol,
                                 std::vector<DenseStep> steps, std::optional<double> first_zero,
                                 std::optional<double> blowup_at)
    : profile_(std::move(profile)),
      t_end_(t_end),
      tol_(tol),
      steps_(std::move(steps)),
      first_zero_(first_zero),
      blowup_at_(blowup_at) {}

double WarpingSolution::reach() const noexcept {
  if (first_zero_) return *first_zero_;
  if (blowup_at_) return *blowup_at_;
  return t_end_;
}

std::vector<DenseNode> WarpingSolution::nodes() const {
  std::vector<DenseNode> out{{0.0, 0.0, 1.0}};
  const double end = reach();
  for (const DenseStep& s : steps_) {
    if (s.t1() >= end) {
      const JacobiState y = s.eval(end);
      out.push_back({end, y.f, y.fp});
      break;
    }
    out.push_back({s.t1(), s.f1, s.fp1});
  }
  return out;
}

std::size_t WarpingSolution::step_index(double t) const noexcept {
  const auto it = std::upper_bound(steps_.begin(), steps_.end(), t,
                                   [](double v, const DenseStep& s) { return v < s.t0; });
  if (it == steps_.begin()) return 0;
  return static_cast<std::size_t>(it - steps_.begin()) - 1;
}

JacobiState WarpingSolution::eval(double t) const {
  const double end = reach();
  if (!(t >= 0.0) || t > end + 1e-12 * std::max(1.0, end)) {
    throw DomainError("t=" + std::to_string(t) + " outside the solution window [0, " +
                      std::to_string(end) + "]");
  }
  if (steps_.empty()) return {0.0, 1.0};
  return steps_[step_index(t)].eval(t);
}

JacobiState integrate(const CurvatureProfile& K, double t0, JacobiState y0, double t1, double tol) {
  check_window(t1 - t0, tol);
  if (t0 < 0.0) throw DomainError("integration must start at t >= 0");
  return run(K, t0, y0, t1, tol, false, nullptr).y;
}

WarpingSolution solve(const CurvatureProfile& K, double t_end, double tol) {
  check_window(t_end, tol);
  std::vector<DenseStep> steps;
  const RunResult r = run(K, 0.0, {0.0, 1.0}, t_end, tol, true, &steps);
  return WarpingSolution(K, t_end, tol, std::move(steps), r.first_zero, r.blowup_at);
}

WarpingSolution solve_m(const CurvatureProfile& K, double t_end, double tol) {
  WarpingSolution m = solve(negative_part(K), t_end, tol);
  if (m.first_zero()) {
    throw IntegrationError("m-function vanished, which contradicts its convexity", *m.first_zero());
  }
  return m;
}

}  // namespace radialgeo
