#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radialgeo/curvature_profile.hpp"

namespace radialgeo {

/// Closed-form values known for a gallery profile. Divergent quantities are
/// stored as infinities (c = -inf, m'(inf) = +inf).
struct GalleryOracle {
  std::optional<double> total_curvature;
  std::optional<double> slope_limit;
  std::optional<double> m_prime_inf;
  std::optional<double> first_zero;
  std::optional<MomentClass> moment;
  std::function<double(double)> warping;  // f(t), when known
};

struct GalleryEntry {
  std::string name;
  CurvatureProfile profile;
  GalleryOracle oracle;
  std::string notes;
};

/// Start of the fitted power tail for the beta family.
inline constexpr double kBetaTailStart = 4096.0;

/// K = -f''/f for f(t) = t exp(-beta t^2 / (1 + t^2)) on [0, 4096), continued by the
/// a/(1+t)^4 tail matching it at 4096. Total curvature 2 pi (1 - e^-beta).
CurvatureProfile sign_changing_beta_profile(double beta);

const std::vector<GalleryEntry>& list_gallery();

/// Throws LookupError for unknown names.
const GalleryEntry& entry_by_name(std::string_view name);

}  // namespace radialgeo
