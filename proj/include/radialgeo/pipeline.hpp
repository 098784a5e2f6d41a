#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radialgeo/asymptotics.hpp"
#include "radialgeo/curvature_profile.hpp"
#include "radialgeo/ends.hpp"
#include "radialgeo/limit_estimate.hpp"
#include "radialgeo/model_space.hpp"

namespace radialgeo {

struct VolumeSample {
  double t;
  double vol;
};

/// Measured ball volumes vol B_t(p) of a manifold, t strictly increasing, vol > 0.
struct VolumeSamples {
  int n = 2;
  std::vector<VolumeSample> rows;
};

/// Parses CSV with header `t,vol`. Throws IngestionError naming the offending
/// 1-based line for malformed rows, non-increasing t or nonpositive volumes.
VolumeSamples parse_samples(std::istream& in, int n);
VolumeSamples ingest_samples(const std::filesystem::path& path, int n);

/// Bishop-Gromov ratios vol_i / vol B_{t_i}(o) of the samples against the model.
struct RatioCheck {
  std::vector<double> ratios;
  bool monotone_ok = true;
  LimitEstimate ratio_limit;
  std::vector<std::string> warnings;
};

/// Tolerance on nonincrease and on the upper bound 1 of the ratios.
inline constexpr double kRatioSlack = 1e-9;

/// Throws DomainError on a dimension mismatch or a sample radius outside the model window.
RatioCheck bg_ratio_check(const VolumeSamples& s, const ModelSpace& ms);

struct AnalysisOptions {
  double tol = 1e-8;
  double t_end = 4096.0;
};

struct Conclusion {
  std::string id;
  std::string statement;
  std::string reason;
};

struct TheoremReport {
  int n = 2;
  AnalysisOptions options;
  nlohmann::ordered_json profile_echo;
  std::optional<std::size_t> sample_count;

  bool hypothesis_holds = false;
  TotalCurvatureResult total_curvature;
  LimitEstimate slope_limit;
  LimitEstimate m_prime_limit;
  GrowthCoefficient growth;
  std::optional<RatioCheck> ratio_check;
  std::optional<LimitEstimate> manifold_growth_limit;
  /// Tail average of vol_i / t_i^n, the unfactored counterpart of manifold_growth_limit.
  std::optional<LimitEstimate> manifold_growth_direct;
  EndsBound ends;
  std::vector<Conclusion> conclusions;
  std::vector<std::string> warnings;

  bool has_conclusion(std::string_view id) const;
};

/// Runs solve -> total_curvature -> slope and m' limits -> growth coefficient -> ends
/// bound, then the ratio check and growth-limit factorization when samples are given.
/// Throws ModelCompactnessError if the warping function has a zero in the window.
TheoremReport evaluate_theorem(const CurvatureProfile& K, int n, const AnalysisOptions& opts,
                               const std::optional<VolumeSamples>& samples = std::nullopt);

/// Report as JSON with stable key order and numbers rounded to 12 significant digits.
nlohmann::ordered_json report_to_json(const TheoremReport& report);
std::string render_report(const TheoremReport& report);

/// Parsed `analyze`/`tabulate` configuration.
struct AnalysisConfig {
  CurvatureProfile profile = CurvatureProfile::zero();
  int n = 2;
  AnalysisOptions options;
};

/// Reads {"profile": {...}, "n": int, "tol": float, "t_end": float}. The environment
/// variable RADIALGEO_TOL, when set, overrides tol. Throws ConfigurationError.
AnalysisConfig parse_config(const nlohmann::json& j);
AnalysisConfig load_config(const std::filesystem::path& path);

/// Applies RADIALGEO_TOL to `opts` when the variable is set.
void apply_tol_override(AnalysisOptions& opts);

}  // namespace radialgeo
