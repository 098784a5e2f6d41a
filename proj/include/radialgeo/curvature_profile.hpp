#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace radialgeo {

/// Polynomial in t with coefficients in ascending powers. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  double operator()(double t) const noexcept;
  Polynomial derivative() const;
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const double> coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

/// Points in the open interval (lo, hi) where `p` changes sign, ascending.
/// Monotone pieces are isolated through the roots of p' and then bisected
/// to 1e-13 in t (at most 64 halvings each).
std::vector<double> sign_changes(const Polynomial& p, double lo, double hi);

/// K(t) = num(t) / den(t) on [start, end). An empty denominator means 1.
struct Segment {
  double start = 0.0;
  double end = 0.0;
  Polynomial num;
  Polynomial den;

  double operator()(double t) const noexcept;
  bool is_rational() const noexcept { return !den.is_zero(); }
};

struct ZeroTail {};
struct ConstantTail {
  double kappa = 0.0;
};
/// a / (1 + t)^p, p > 0.
struct PowerDecayTail {
  double a = 0.0;
  double p = 1.0;
};
using TailModel = std::variant<ZeroTail, ConstantTail, PowerDecayTail>;

double eval_tail(const TailModel& tail, double t) noexcept;

enum class MomentClass { FiniteMoment, DivergentMoment };

/// Piecewise-analytic radial curvature function on [0, inf): segments cover
/// [0, tail_start) contiguously and the tail model takes over from tail_start.
///
/// Pieces are indexed 0..segments().size(); the last index is the tail. A piece
/// can be evaluated on its closed interval, which is what integrators use so that
/// a jump at a breakpoint never leaks into the neighbouring piece.
class CurvatureProfile {
 public:
  /// Throws ConfigurationError on gaps, overlaps, non-finite coefficients, a vanishing
  /// denominator, or a PowerDecay exponent p <= 0.
  CurvatureProfile(std::vector<Segment> segments, TailModel tail);

  static CurvatureProfile zero();
  static CurvatureProfile constant(double kappa);
  static CurvatureProfile power_decay(double a, double p);

  /// Throws DomainError for t < 0.
  double operator()(double t) const;

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  const TailModel& tail() const noexcept { return tail_; }
  double tail_start() const noexcept { return tail_start_; }

  std::size_t piece_count() const noexcept { return segments_.size() + 1; }
  std::size_t piece_index(double t) const noexcept;
  /// [start, end) of a piece; the tail ends at +inf.
  std::pair<double, double> piece_bounds(std::size_t piece) const noexcept;
  double eval_piece(std::size_t piece, double t) const noexcept;

  /// Interior breakpoints: every segment end (which includes tail_start when segments exist).
  std::vector<double> breakpoints() const;

  /// Largest relative jump |left - right| / max(|left|, |right|) over all breakpoints.
  double continuity_defect() const;

  /// True when every piece evaluates to zero identically.
  bool is_identically_zero() const noexcept;

 private:
  std::vector<Segment> segments_;
  TailModel tail_;
  double tail_start_ = 0.0;
};

double eval(const CurvatureProfile& K, double t);

/// Pointwise min(K, 0), with segments split at sign changes.
CurvatureProfile negative_part(const CurvatureProfile& K);
/// Pointwise max(K, 0).
CurvatureProfile positive_part(const CurvatureProfile& K);

/// Convergence of the improper integral of t K_-(t), decided from the tail model of K_-.
MomentClass tail_moment_class(const CurvatureProfile& K);

}  // namespace radialgeo
