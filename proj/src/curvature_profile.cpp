#include "radialgeo/curvature_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

constexpr double kRootTolerance = 1e-13;
constexpr int kMaxBisections = 64;

int sign_of(double v) noexcept { return (v > 0.0) - (v < 0.0); }

double bisect_sign_change(const Polynomial& p, double lo, double hi) {
  const int sign_lo = sign_of(p(lo));
  for (int i = 0; i < kMaxBisections && hi - lo > kRootTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    const int s = sign_of(p(mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void require_finite(std::span<const double> values, const std::string& what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigurationError(what + " has a non-finite coefficient");
  }
}

// Splits one piece into subintervals of constant sign and returns, for each, the
// subinterval and whether K keeps the requested sign there.
struct SignedPiece {
  double start;
  double end;
  bool keep;
};

std::vector<SignedPiece> split_by_sign(const Segment& seg, int wanted_sign) {
  std::vector<double> cuts{seg.start};
  for (double r : sign_changes(seg.num, seg.start, seg.end)) cuts.push_back(r);
  cuts.push_back(seg.end);

  std::vector<SignedPiece> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    out.push_back({cuts[i], cuts[i + 1], sign_of(seg(mid)) == wanted_sign});
  }
  return out;
}

TailModel clip_tail(const TailModel& tail, int wanted_sign) {
  return std::visit(
      [wanted_sign](const auto& t) -> TailModel {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ZeroTail>) {
          return ZeroTail{};
        } else if constexpr (std::is_same_v<T, ConstantTail>) {
          if (sign_of(t.kappa) == wanted_sign) return t;
          return ZeroTail{};
        } else {
          if (sign_of(t.a) == wanted_sign) return t;
          return ZeroTail{};
        }
      },
      tail);
}

CurvatureProfile clip(const CurvatureProfile& K, int wanted_sign) {
  std::vector<Segment> out;
  auto push = [&out](Segment s) {
    // Adjacent zero pieces collapse into one.
    if (!out.empty() && out.back().num.is_zero() && s.num.is_zero()) {
      out.back().end = s.end;
      return;
    }
    out.push_back(std::move(s));
  };
  for (const Segment& seg : K.segments()) {
    for (const SignedPiece& piece : split_by_sign(seg, wanted_sign)) {
      if (piece.keep) {
        push(Segment{piece.start, piece.end, seg.num, seg.den});
      } else {
        push(Segment{piece.start, piece.end, Polynomial{}, Polynomial{}});
      }
    }
  }
  return CurvatureProfile(std::move(out), clip_tail(K.tail(), wanted_sign));
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<double> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(static_cast<double>(i) * coeffs_[i]);
  return Polynomial(std::move(d));
}

std::vector<double> sign_changes(const Polynomial& p, double lo, double hi) {
  if (p.degree() <= 0 || !(hi > lo)) return {};

  // p is monotone between consecutive sign changes of p'.
  std::vector<double> knots{lo};
  for (double c : sign_changes(p.derivative(), lo, hi)) knots.push_back(c);
  knots.push_back(hi);

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    const int sa = sign_of(p(a));
    const int sb = sign_of(p(b));
    if (sa * sb < 0) roots.push_back(bisect_sign_change(p, a, b));
  }
  return roots;
}

double Segment::operator()(double t) const noexcept {
  const double n = num(t);
  return den.is_zero() ? n : n / den(t);
}

double eval_tail(const TailModel& tail, double t) noexcept {
  return std::visit(
      [t](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ZeroTail>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, ConstantTail>) {
          return m.kappa;
        } else {
          return m.a / std::pow(1.0 + t, m.p);
        }
      },
      tail);
}

CurvatureProfile::CurvatureProfile(std::vector<Segment> segments, TailModel tail)
    : segments_(std::move(segments)), tail_(std::move(tail)) {
  double cursor = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    const std::string name = "segment " + std::to_string(i);
    if (!std::isfinite(s.start) || !std::isfinite(s.end) || !(s.end > s.start)) {
      throw ConfigurationError(name + " has an empty or non-finite interval");
    }
    if (s.start != cursor) {
      throw ConfigurationError(name + " starts at " + std::to_string(s.start) + ", expected " +
                               std::to_string(cursor) + " (segments must tile [0, T_tail))");
    }
    require_finite(s.num.coefficients(), name + " numerator");
    if (s.is_rational()) {
      require_finite(s.den.coefficients(), name + " denominator");
      // The denominator keeps one strict sign on the closed interval: no sign changes,
      // and nonzero at the ends and at every local extremum.
      const int s0 = sign_of(s.den(s.start));
      bool ok = s0 != 0 && sign_of(s.den(s.end)) == s0 &&
                sign_changes(s.den, s.start, s.end).empty();
      for (double c : sign_changes(s.den.derivative(), s.start, s.end)) {
        ok = ok && sign_of(s.den(c)) == s0;
      }
      if (!ok) throw ConfigurationError(name + " has a denominator vanishing on its interval");
    }
    cursor = s.end;
  }
  tail_start_ = cursor;

  if (const auto* c = std::get_if<ConstantTail>(&tail_); c && !std::isfinite(c->kappa)) {
    throw ConfigurationError("constant tail must be finite");
  }
  if (const auto* pd = std::get_if<PowerDecayTail>(&tail_)) {
    if (!std::isfinite(pd->a) || !std::isfinite(pd->p)) {
      throw ConfigurationError("power-decay tail must be finite");
    }
    if (!(pd->p > 0.0)) throw ConfigurationError("power-decay tail requires p > 0");
  }
}

CurvatureProfile CurvatureProfile::zero() { return CurvatureProfile({}, ZeroTail{}); }

CurvatureProfile CurvatureProfile::constant(double kappa) {
  if (kappa == 0.0) return zero();
  return CurvatureProfile({}, ConstantTail{kappa});
}

CurvatureProfile CurvatureProfile::power_decay(double a, double p) {
  return CurvatureProfile({}, PowerDecayTail{a, p});
}

std::size_t CurvatureProfile::piece_index(double t) const noexcept {
  if (t >= tail_start_) return segments_.size();
  const auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                                   [](double v, const Segment& s) { return v < s.end; });
  return static_cast<std::size_t>(it - segments_.begin());
}

std::pair<double, double> CurvatureProfile::piece_bounds(std::size_t piece) const noexcept {
  if (piece >= segments_.size()) return {tail_start_, std::numeric_limits<double>::infinity()};
  return {segments_[piece].start, segments_[piece].end};
}

double CurvatureProfile::eval_piece(std::size_t piece, double t) const noexcept {
  if (piece >= segments_.size()) return eval_tail(tail_, t);
  return segments_[piece](t);
}

double CurvatureProfile::operator()(double t) const {
  if (!(t >= 0.0)) throw DomainError("curvature evaluated at negative t=" + std::to_string(t));
  return eval_piece(piece_index(t), t);
}

std::vector<double> CurvatureProfile::breakpoints() const {
  std::vector<double> out;
  out.reserve(segments_.size());
  for (const Segment& s : segments_) out.push_back(s.end);
  return out;
}

double CurvatureProfile::continuity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const double b = segments_[i].end;
    const double left = eval_piece(i, b);
    const double right = eval_piece(i + 1, b);
    const double scale = std::max(std::abs(left), std::abs(right));
    if (scale > 0.0) worst = std::max(worst, std::abs(left - right) / scale);
  }
  return worst;
}

bool CurvatureProfile::is_identically_zero() const noexcept {
  const bool segments_zero = std::all_of(segments_.begin(), segments_.end(),
                                         [](const Segment& s) { return s.num.is_zero(); });
  const bool tail_zero = std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ZeroTail>) {
          return true;
        } else if constexpr (std::is_same_v<T, ConstantTail>) {
          return m.kappa == 0.0;
        } else {
          return m.a == 0.0;
        }
      },
      tail_);
  return segments_zero && tail_zero;
}

double eval(const CurvatureProfile& K, double t) { return K(t); }

CurvatureProfile negative_part(const CurvatureProfile& K) { return clip(K, -1); }

CurvatureProfile positive_part(const CurvatureProfile& K) { return clip(K, +1); }

MomentClass tail_moment_class(const CurvatureProfile& K) {
  const TailModel tail = clip_tail(K.tail(), -1);
  if (const auto* c = std::get_if<ConstantTail>(&tail)) {
    return c->kappa < 0.0 ? MomentClass::DivergentMoment : MomentClass::FiniteMoment;
  }
  if (const auto* pd = std::get_if<PowerDecayTail>(&tail)) {
    // The integral of t / (1 + t)^p converges iff p > 2.
    return pd->p > 2.0 ? MomentClass::FiniteMoment : MomentClass::DivergentMoment;
  }
  return MomentClass::FiniteMoment;
}

}  // namespace radialgeo
