#include "radialgeo/gallery.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// For K = a/(1+t)^4 with a < 0 the warping function is (1+t) sinh(k t/(1+t)) / k, k = sqrt(-a).
GalleryEntry quartic_tail_entry(std::string name, double a, std::string notes) {
  const double k = std::sqrt(-a);
  const double slope = std::sinh(k) / k;
  GalleryOracle oracle;
  oracle.total_curvature = kTwoPi * (1.0 - slope);
  oracle.slope_limit = slope;
  oracle.m_prime_inf = slope;
  oracle.moment = MomentClass::FiniteMoment;
  oracle.warping = [k](double t) { return (1.0 + t) * std::sinh(k * t / (1.0 + t)) / k; };
  return {std::move(name), CurvatureProfile::power_decay(a, 4.0), std::move(oracle), std::move(notes)};
}

GalleryEntry beta_entry(std::string name, double beta) {
  GalleryOracle oracle;
  oracle.total_curvature = kTwoPi * (1.0 - std::exp(-beta));
  oracle.slope_limit = std::exp(-beta);
  oracle.moment = MomentClass::FiniteMoment;
  oracle.warping = [beta](double t) { return t * std::exp(-beta * t * t / (1.0 + t * t)); };
  return {std::move(name), sign_changing_beta_profile(beta), std::move(oracle),
          "K = -f''/f for f = t exp(-beta t^2/(1+t^2)); K(0) = 6 beta, K ~ -2 beta/t^4 for large t"};
}

std::vector<GalleryEntry> build_gallery() {
  std::vector<GalleryEntry> g;

  {
    GalleryOracle o;
    o.total_curvature = 0.0;
    o.slope_limit = 1.0;
    o.m_prime_inf = 1.0;
    o.moment = MomentClass::FiniteMoment;
    o.warping = [](double t) { return t; };
    g.push_back({"flat", CurvatureProfile::zero(), std::move(o), "K = 0, f = t (Euclidean plane)"});
  }
  {
    GalleryOracle o;
    o.total_curvature = -kInf;
    o.m_prime_inf = kInf;
    o.moment = MomentClass::DivergentMoment;
    o.warping = [](double t) { return std::sinh(t); };
    g.push_back({"hyperbolic", CurvatureProfile::constant(-1.0), std::move(o),
                 "K = -1, f = sinh t (hyperbolic plane)"});
  }
  {
    GalleryOracle o;
    o.first_zero = std::numbers::pi;
    o.m_prime_inf = 1.0;
    o.moment = MomentClass::FiniteMoment;
    o.warping = [](double t) { return std::sin(t); };
    g.push_back({"spherical", CurvatureProfile::constant(1.0), std::move(o),
                 "K = +1, f = sin t vanishes at pi (compact model, rejected downstream)"});
  }
  g.push_back(quartic_tail_entry("abresch_tail", -6.0,
                                 "K = -6/(1+t)^4: negative, nondecreasing, finite moment; "
                                 "f = (1+t) sinh(sqrt6 t/(1+t))/sqrt6"));
  g.push_back(quartic_tail_entry("abresch_tail_mild", -3.0,
                                 "K = -3/(1+t)^4, pointwise above abresch_tail"));
  g.push_back(beta_entry("sign_changing_beta_ln2", std::numbers::ln2));
  g.push_back(beta_entry("sign_changing_beta_neg_ln2", -std::numbers::ln2));
  {
    GalleryOracle o;
    o.total_curvature = -kInf;
    o.m_prime_inf = kInf;
    o.moment = MomentClass::DivergentMoment;
    g.push_back({"moment_boundary", CurvatureProfile::power_decay(-1.0, 2.0), std::move(o),
                 "K = -1/(1+t)^2: int t K_- dt diverges, f grows like (1+t)^1.618"});
  }
  return g;
}

}  // namespace

CurvatureProfile sign_changing_beta_profile(double beta) {
  // -f''/f = beta (6 + (4 - 4 beta) t^2 - 2 t^4) / (1 + t^2)^4.
  Polynomial num({6.0 * beta, 0.0, (4.0 - 4.0 * beta) * beta, 0.0, -2.0 * beta});
  Polynomial den({1.0, 0.0, 4.0, 0.0, 6.0, 0.0, 4.0, 0.0, 1.0});
  Segment seg{0.0, kBetaTailStart, std::move(num), std::move(den)};
  const double amplitude = seg(kBetaTailStart) * std::pow(1.0 + kBetaTailStart, 4.0);
  return CurvatureProfile({std::move(seg)}, PowerDecayTail{amplitude, 4.0});
}

const std::vector<GalleryEntry>& list_gallery() {
  static const std::vector<GalleryEntry> gallery = build_gallery();
  return gallery;
}

const GalleryEntry& entry_by_name(std::string_view name) {
  for (const GalleryEntry& e : list_gallery()) {
    if (e.name == name) return e;
  }
  throw LookupError("unknown gallery entry '" + std::string(name) + "'");
}

}  // namespace radialgeo
