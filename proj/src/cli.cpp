#include "radialgeo/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radialgeo/errors.hpp"
#include "radialgeo/gallery.hpp"
#include "radialgeo/jacobi.hpp"
#include "radialgeo/model_space.hpp"
#include "radialgeo/pipeline.hpp"

namespace radialgeo {

namespace {

std::string g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int write_report(const TheoremReport& report, const std::string& out_path, std::ostream& out) {
  const std::string text = render_report(report);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ConfigurationError("cannot write report to " + out_path);
    file << text;
  }
  return report.hypothesis_holds ? kExitOk : kExitHypothesis;
}

std::optional<VolumeSamples> maybe_samples(const std::string& path, int n) {
  if (path.empty()) return std::nullopt;
  return ingest_samples(path, n);
}

void tabulate(const AnalysisConfig& cfg, double t_max, double step, bool with_volume, std::ostream& out,
              std::ostream& err) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("--t-max must be positive");
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("--step must be positive");

  const WarpingSolution f = solve(cfg.profile, t_max, cfg.options.tol);
  const WarpingSolution m = solve_m(cfg.profile, t_max, cfg.options.tol);
  if (f.first_zero() && with_volume) throw ModelCompactnessError(*f.first_zero());

  double stop = std::min(f.reach(), m.reach());
  if (f.first_zero()) {
    err << "note: f vanishes at t=" << g12(*f.first_zero()) << "; table stops there\n";
  } else if (stop < t_max) {
    err << "note: integration stopped at t=" << g12(stop) << " (blow-up)\n";
  }

  std::vector<double> grid;
  for (long long k = 0;; ++k) {
    const double t = static_cast<double>(k) * step;
    if (t > stop * (1.0 + 1e-12)) break;
    grid.push_back(std::min(t, stop));
  }

  std::vector<double> vols;
  if (with_volume) {
    const ModelSpace ms(cfg.n, f);
    vols = ball_volumes(ms, grid);
  }

  out << "t,f,fp,m,mp" << (with_volume ? ",vol_n" : "") << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const JacobiState fs = f.eval(t);
    const JacobiState ms = m.eval(t);
    out << g12(t) << ',' << g12(fs.f) << ',' << g12(fs.fp) << ',' << g12(ms.f) << ',' << g12(ms.fp);
    if (with_volume) out << ',' << g12(vols[i]);
    out << '\n';
  }
}

void print_gallery(std::ostream& out) {
  auto opt = [](const std::optional<double>& v) { return v ? g12(*v) : std::string("-"); };
  for (const GalleryEntry& e : list_gallery()) {
    const GalleryOracle& o = e.oracle;
    out << e.name << "\n  c=" << opt(o.total_curvature) << " slope=" << opt(o.slope_limit)
        << " m'inf=" << opt(o.m_prime_inf) << " first_zero=" << opt(o.first_zero) << " moment="
        << (o.moment ? (*o.moment == MomentClass::FiniteMoment ? "finite" : "divergent") : "-")
        << "\n  " << e.notes << '\n';
  }
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial curvature comparison toolkit", "radialgeo"};
  app.require_subcommand(1);

  std::string config_path, samples_path, out_path;
  auto* analyze = app.add_subcommand("analyze", "Evaluate the volume-growth theorem for a configured profile");
  analyze->add_option("--config", config_path, "Config JSON")->required();
  analyze->add_option("--samples", samples_path, "CSV of measured ball volumes (header t,vol)");
  analyze->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  double t_max = 0.0, step = 0.0;
  bool with_volume = false;
  auto* tab = app.add_subcommand("tabulate", "CSV of f, f', m, m' on a uniform grid");
  tab->add_option("--config", config_path, "Config JSON")->required();
  tab->add_option("--t-max", t_max, "Last grid point")->required();
  tab->add_option("--step", step, "Grid spacing")->required();
  tab->add_flag("--with-volume", with_volume, "Add the vol_n column for the configured n");

  auto* gallery = app.add_subcommand("gallery", "Built-in profiles");
  gallery->require_subcommand(1);
  auto* glist = gallery->add_subcommand("list", "List gallery entries and their closed-form values");
  std::string name;
  int n = 2;
  double tol = 1e-8;
  auto* ganalyze = gallery->add_subcommand("analyze", "Evaluate the theorem for a gallery entry");
  ganalyze->add_option("name", name, "Entry name")->required();
  ganalyze->add_option("-n", n, "Dimension")->check(CLI::Range(2, 64));
  ganalyze->add_option("--tol", tol, "Integration tolerance");
  ganalyze->add_option("--samples", samples_path, "CSV of measured ball volumes (header t,vol)");
  ganalyze->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (analyze->parsed()) {
      const AnalysisConfig cfg = load_config(config_path);
      const auto samples = maybe_samples(samples_path, cfg.n);
      return write_report(evaluate_theorem(cfg.profile, cfg.n, cfg.options, samples), out_path, out);
    }
    if (tab->parsed()) {
      tabulate(load_config(config_path), t_max, step, with_volume, out, err);
      return kExitOk;
    }
    if (glist->parsed()) {
      print_gallery(out);
      return kExitOk;
    }
    if (ganalyze->parsed()) {
      const GalleryEntry& entry = entry_by_name(name);
      AnalysisOptions opts;
      opts.tol = tol;
      apply_tol_override(opts);
      const auto samples = maybe_samples(samples_path, n);
      return write_report(evaluate_theorem(entry.profile, n, opts, samples), out_path, out);
    }
  } catch (const ModelCompactnessError& e) {
    err << "hypothesis failure: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  err << app.help();
  return kExitInput;
}

}  // namespace radialgeo
