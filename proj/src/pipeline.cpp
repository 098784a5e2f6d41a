#include "radialgeo/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "radialgeo/errors.hpp"
#include "radialgeo/jacobi.hpp"
#include "radialgeo/profile_json.hpp"

namespace radialgeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kTailWindow = 5;
constexpr double kSignalToError = 10.0;
constexpr double kFactorizationWarn = 0.05;

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool parse_double(const std::string& text, double& out) {
  const std::string s = trim(text);
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Mean of the last k values, with their spread as the error.
LimitEstimate tail_average(const std::vector<double>& v) {
  const std::size_t k = std::min(kTailWindow, v.size());
  const auto first = v.end() - static_cast<std::ptrdiff_t>(k);
  double sum = 0.0;
  for (auto it = first; it != v.end(); ++it) sum += *it;
  const auto [lo, hi] = std::minmax_element(first, v.end());
  return LimitEstimate::finite(sum / static_cast<double>(k), *hi - *lo);
}

ordered_json limit_json(const LimitEstimate& e) {
  ordered_json j;
  if (e.is_finite()) {
    j["status"] = "finite";
    j["value"] = report_number(e.value);
    j["err"] = report_number(e.err);
  } else {
    j["status"] = "divergent";
    j["last_probe"] = report_number(e.last_probe);
  }
  return j;
}

const char* classification_name(TotalCurvatureResult::Classification c) {
  switch (c) {
    case TotalCurvatureResult::Classification::Finite:
      return "finite";
    case TotalCurvatureResult::Classification::NegativeDivergent:
      return "negative_divergent";
    case TotalCurvatureResult::Classification::PositiveDivergent:
      return "positive_divergent";
  }
  return "unknown";
}

}  // namespace

bool TheoremReport::has_conclusion(std::string_view id) const {
  return std::any_of(conclusions.begin(), conclusions.end(),
                     [id](const Conclusion& c) { return c.id == id; });
}

VolumeSamples parse_samples(std::istream& in, int n) {
  VolumeSamples out;
  out.n = n;
  std::string line;
  std::size_t row = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++row;
    line = trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      std::string compact;
      for (char ch : line) {
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
      }
      if (compact != "t,vol") throw IngestionError("expected header 't,vol', got '" + line + "'", row);
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw IngestionError("expected two comma-separated fields", row);
    }
    VolumeSample s{};
    if (!parse_double(line.substr(0, comma), s.t) || !parse_double(line.substr(comma + 1), s.vol)) {
      throw IngestionError("fields must be decimal numbers", row);
    }
    if (!std::isfinite(s.t) || !(s.t > 0.0)) throw IngestionError("t must be positive", row);
    if (!std::isfinite(s.vol) || !(s.vol > 0.0)) throw IngestionError("vol must be positive", row);
    if (!out.rows.empty() && !(s.t > out.rows.back().t)) {
      throw IngestionError("t must be strictly increasing", row);
    }
    out.rows.push_back(s);
  }
  if (!header_seen) throw IngestionError("empty sample file", 0);
  if (out.rows.empty()) throw IngestionError("no samples after the header", 0);
  return out;
}

VolumeSamples ingest_samples(const std::filesystem::path& path, int n) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open sample file " + path.string(), 0);
  return parse_samples(in, n);
}

RatioCheck bg_ratio_check(const VolumeSamples& s, const ModelSpace& ms) {
  if (s.n != ms.dimension()) {
    throw DomainError("samples declare n=" + std::to_string(s.n) + " but the model has n=" +
                      std::to_string(ms.dimension()));
  }
  if (s.rows.empty()) throw DomainError("no volume samples");

  std::vector<double> radii;
  radii.reserve(s.rows.size());
  for (const VolumeSample& r : s.rows) radii.push_back(r.t);
  const std::vector<double> model = ball_volumes(ms, radii);

  RatioCheck out;
  for (std::size_t i = 0; i < s.rows.size(); ++i) out.ratios.push_back(s.rows[i].vol / model[i]);

  for (std::size_t i = 0; i < out.ratios.size(); ++i) {
    if (out.ratios[i] > 1.0 + kRatioSlack) {
      out.monotone_ok = false;
      out.warnings.push_back("volume ratio " + fmt(out.ratios[i]) + " exceeds 1 at t=" +
                             fmt(radii[i]) +
                             ": the samples contradict the declared radial curvature lower bound");
      break;
    }
  }
  for (std::size_t i = 0; i + 1 < out.ratios.size(); ++i) {
    if (out.ratios[i + 1] > out.ratios[i] + kRatioSlack) {
      out.monotone_ok = false;
      out.warnings.push_back("volume ratio increases from " + fmt(out.ratios[i]) + " at t=" +
                             fmt(radii[i]) + " to " + fmt(out.ratios[i + 1]) + " at t=" +
                             fmt(radii[i + 1]) +
                             ": the samples contradict the declared radial curvature lower bound");
      break;
    }
  }
  out.ratio_limit = tail_average(out.ratios);
  return out;
}

TheoremReport evaluate_theorem(const CurvatureProfile& K, int n, const AnalysisOptions& opts,
                               const std::optional<VolumeSamples>& samples) {
  if (n < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(n));

  TheoremReport report;
  report.n = n;
  report.options = opts;
  report.profile_echo = profile_to_json(K);
  if (samples) report.sample_count = samples->rows.size();

  WarpingSolution f = solve(K, opts.t_end, opts.tol);
  if (f.first_zero()) throw ModelCompactnessError(*f.first_zero());

  report.total_curvature = total_curvature(K, f, opts.tol);
  report.slope_limit = slope_limit(f);
  report.m_prime_limit = m_prime_limit(K, opts.tol);
  const ModelSpace ms(n, std::move(f));
  report.growth = growth_coefficient(ms, report.total_curvature);
  report.ends = ends_bound_from(report.m_prime_limit, n);

  const TotalCurvatureResult& c = report.total_curvature;
  report.hypothesis_holds = c.is_finite();
  switch (c.classification) {
    case TotalCurvatureResult::Classification::NegativeDivergent:
      report.warnings.push_back(
          "hypothesis fails: the integral of K_- over the model surface is -inf (c = -inf); "
          "no conclusions are certified");
      break;
    case TotalCurvatureResult::Classification::PositiveDivergent:
      report.warnings.push_back(
          "hypothesis fails: the positive curvature tail is oscillatory, so the model surface "
          "is not noncompact with finite total curvature; no conclusions are certified");
      break;
    case TotalCurvatureResult::Classification::Finite:
      if (c.value > kTwoPi + 1e-6) {
        report.warnings.push_back("total curvature " + fmt(c.value) +
                                  " exceeds 2pi; the numerical result is unreliable");
      }
      if (report.slope_limit.is_finite()) {
        const double gap = std::abs(c.value - kTwoPi * (1.0 - report.slope_limit.value));
        if (gap > std::max(1e-5, 10.0 * (c.err + kTwoPi * report.slope_limit.err))) {
          report.warnings.push_back("c and 2pi(1 - lim f') differ by " + fmt(gap) +
                                    "; consider a longer window or a tighter tol");
        }
      }
      break;
  }

  if (samples) {
    report.ratio_check = bg_ratio_check(*samples, ms);
    for (const std::string& w : report.ratio_check->warnings) report.warnings.push_back(w);

    const LimitEstimate& r = report.ratio_check->ratio_limit;
    const LimitEstimate& g = report.growth.direct;
    if (report.hypothesis_holds && g.is_finite()) {
      report.manifold_growth_limit =
          LimitEstimate::finite(r.value * g.value, r.err * std::abs(g.value) + std::abs(r.value) * g.err);

      std::vector<double> scaled;
      for (const VolumeSample& row : samples->rows) scaled.push_back(row.vol / std::pow(row.t, n));
      report.manifold_growth_direct = tail_average(scaled);

      const double a = report.manifold_growth_limit->value;
      const double b = report.manifold_growth_direct->value;
      if (std::abs(a - b) > kFactorizationWarn * std::max(std::abs(a), std::abs(b))) {
        report.warnings.push_back("factorized growth limit " + fmt(a) +
                                  " and direct tail average " + fmt(b) + " differ by more than 5%");
      }
    }
  }

  if (!report.hypothesis_holds) return report;

  report.conclusions.push_back(
      {"volume_growth_limit_exists", "lim vol B_t(p)/t^n exists",
       "total curvature of the model surface is finite (c = " + fmt(c.value) + ")"});

  if (!samples) return report;

  const auto& mgl = report.manifold_growth_limit;
  const bool nonzero = mgl && mgl->is_finite() && mgl->value > kSignalToError * mgl->err;
  if (!report.ratio_check->monotone_ok) {
    report.warnings.push_back(
        "volume ratios are not nonincreasing; finite-topology and ends conclusions are withheld");
    return report;
  }
  if (!nonzero) {
    report.warnings.push_back(
        "manifold growth limit is not certified nonzero; finite-topology and ends conclusions "
        "are withheld");
    return report;
  }

  const std::string growth_reason =
      "lim vol B_t(p)/t^n = " + fmt(mgl->value) + " > 10 x err (" + fmt(mgl->err) + ")";
  report.conclusions.push_back({"total_curvature_below_2pi", "c(model) in (-inf, 2pi)",
                                growth_reason + " forces c < 2pi; c = " + fmt(c.value)});
  report.conclusions.push_back({"finite_topological_type", "M has finite topological type", growth_reason});
  if (report.ends.conclusive) {
    report.conclusions.push_back(
        {"ends_bound", "number of ends <= " + std::to_string(report.ends.integer_bound),
         "2 (lim m')^(n-1) = " + fmt(report.ends.raw_bound) + " with lim m' = " +
             fmt(report.ends.m_prime_inf.value)});
  } else {
    report.warnings.push_back(
        "growth limit is nonzero but lim m' diverges; the inputs are inconsistent and no ends "
        "bound is emitted");
  }
  return report;
}

nlohmann::ordered_json report_to_json(const TheoremReport& report) {
  ordered_json j;

  ordered_json inputs;
  inputs["n"] = report.n;
  inputs["tol"] = report_number(report.options.tol);
  inputs["t_end"] = report_number(report.options.t_end);
  inputs["profile"] = report.profile_echo;
  inputs["samples"] = report.sample_count ? ordered_json(*report.sample_count) : ordered_json(nullptr);
  j["inputs"] = std::move(inputs);

  ordered_json hyp;
  hyp["holds"] = report.hypothesis_holds;
  hyp["statement"] = "integral of K_- over the model surface is finite";
  j["hypothesis"] = std::move(hyp);

  const TotalCurvatureResult& c = report.total_curvature;
  ordered_json tc;
  tc["classification"] = classification_name(c.classification);
  tc["value"] = report_number(c.value);
  tc["err"] = report_number(c.err);
  tc["c_plus"] = report_number(c.c_plus);
  tc["c_minus"] = report_number(c.c_minus);
  j["total_curvature"] = std::move(tc);

  j["slope_limit"] = limit_json(report.slope_limit);
  j["m_prime_limit"] = limit_json(report.m_prime_limit);

  ordered_json growth;
  growth["direct"] = limit_json(report.growth.direct);
  growth["closed_form"] = limit_json(report.growth.closed_form);
  growth["discrepancy"] = report_number(report.growth.discrepancy);
  j["growth"] = std::move(growth);

  if (report.ratio_check) {
    ordered_json rl = limit_json(report.ratio_check->ratio_limit);
    rl["estimator"] = "mean of the last min(5, count) ratios, err = their spread (heuristic)";
    rl["monotone_ok"] = report.ratio_check->monotone_ok;
    ordered_json ratios = ordered_json::array();
    for (double r : report.ratio_check->ratios) ratios.push_back(report_number(r));
    rl["ratios"] = std::move(ratios);
    j["ratio_limit"] = std::move(rl);
  } else {
    j["ratio_limit"] = nullptr;
  }
  j["manifold_growth_limit"] =
      report.manifold_growth_limit ? limit_json(*report.manifold_growth_limit) : ordered_json(nullptr);
  j["manifold_growth_direct"] =
      report.manifold_growth_direct ? limit_json(*report.manifold_growth_direct) : ordered_json(nullptr);

  const EndsBound& e = report.ends;
  ordered_json ends;
  ends["conclusive"] = e.conclusive;
  ends["m_prime_inf"] = limit_json(e.m_prime_inf);
  ends["two_lambda"] = e.two_lambda ? report_number(*e.two_lambda) : ordered_json(nullptr);
  ends["raw_bound"] = e.conclusive ? report_number(e.raw_bound) : ordered_json(nullptr);
  ends["integer_bound"] = e.conclusive ? ordered_json(e.integer_bound) : ordered_json(nullptr);
  j["ends_bound"] = std::move(ends);

  ordered_json conclusions = ordered_json::array();
  for (const Conclusion& con : report.conclusions) {
    ordered_json o;
    o["id"] = con.id;
    o["statement"] = con.statement;
    o["reason"] = con.reason;
    conclusions.push_back(std::move(o));
  }
  j["conclusions"] = std::move(conclusions);
  j["warnings"] = report.warnings;
  return j;
}

std::string render_report(const TheoremReport& report) { return report_to_json(report).dump(2) + "\n"; }

void apply_tol_override(AnalysisOptions& opts) {
  const char* env = std::getenv("RADIALGEO_TOL");
  if (env == nullptr) return;
  double v = 0.0;
  if (!parse_double(env, v) || !(v > 0.0)) {
    throw ConfigurationError(std::string("RADIALGEO_TOL is not a positive number: '") + env + "'");
  }
  opts.tol = v;
}

AnalysisConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigurationError("config must be a JSON object");
  if (!j.contains("profile")) throw ConfigurationError("config is missing 'profile'");
  AnalysisConfig cfg;
  cfg.profile = profile_from_json(j.at("profile"));
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer()) throw ConfigurationError("'n' must be an integer");
    cfg.n = j.at("n").get<int>();
    if (cfg.n < 2) throw ConfigurationError("'n' must be at least 2");
  }
  if (j.contains("tol")) {
    if (!j.at("tol").is_number()) throw ConfigurationError("'tol' must be a number");
    cfg.options.tol = j.at("tol").get<double>();
  }
  if (j.contains("t_end")) {
    if (!j.at("t_end").is_number()) throw ConfigurationError("'t_end' must be a number");
    cfg.options.t_end = j.at("t_end").get<double>();
  }
  apply_tol_override(cfg.options);
  return cfg;
}

AnalysisConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

}  // namespace radialgeo
