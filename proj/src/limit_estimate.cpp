#include "radialgeo/limit_estimate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

constexpr int kLevels = 3;
constexpr double kConvergedRel = 1e-12;
constexpr double kNoiseRel = 1e-9;
constexpr double kMinExponent = 0.25;
constexpr double kMaxExponent = 8.0;

double spread(std::span<const double> v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace

LimitEstimate richardson_limit(std::span<const double> probes) {
  if (probes.empty()) throw DomainError("richardson_limit needs at least one probe");
  const std::size_t n = probes.size();

  double last_finite = 0.0;
  for (double v : probes) {
    if (!std::isfinite(v)) return LimitEstimate::divergent(last_finite);
    last_finite = v;
  }
  const double last = probes.back();
  if (n < 3) return LimitEstimate::finite(last, n == 2 ? std::abs(probes[1] - probes[0]) : 0.0);

  const bool increasing = std::adjacent_find(probes.begin(), probes.end(),
                                             [](double a, double b) { return b <= a; }) == probes.end();
  if (increasing && last > kDivergenceThreshold) return LimitEstimate::divergent(last);

  const double scale = std::max(1.0, std::abs(last));
  const auto tail3 = probes.subspan(n - 3);
  const double d1 = probes[n - 2] - probes[n - 3];
  const double d2 = probes[n - 1] - probes[n - 2];
  if (std::abs(d1) <= kConvergedRel * scale && std::abs(d2) <= kConvergedRel * scale) {
    return LimitEstimate::finite(last, spread(tail3));
  }

  const double ratio = d2 != 0.0 ? d1 / d2 : INFINITY;
  if (ratio < -1.0) {
    // Alternating but contracting: no monotone remainder model to accelerate.
    return LimitEstimate::finite(last, 2.0 * std::abs(d2));
  }
  if (!(ratio > 1.0 + 1e-3)) {
    if (std::abs(d2) <= kNoiseRel * scale) return LimitEstimate::finite(last, std::abs(d1) + std::abs(d2));
    return LimitEstimate::divergent(last);
  }

  // Eliminates the exponents q, q+1, q+2. Returns the deepest entry, the spread of the
  // last three accelerants and the last correction.
  const int levels = std::min<int>(kLevels, static_cast<int>(n) - 3);
  struct Table {
    double value, spread, correction;
  };
  auto accelerate = [&](double q) {
    std::vector<double> column(probes.begin(), probes.end());
    double previous = column[n - 1];
    for (int level = 1; level <= levels; ++level) {
      previous = column[n - 1];
      const double factor = std::exp2(q + level - 1);
      // Entries j < level are no longer valid; iterate downward to update in place.
      for (std::size_t j = n - 1; j >= static_cast<std::size_t>(level); --j) {
        column[j] = (factor * column[j] - column[j - 1]) / (factor - 1.0);
      }
    }
    return Table{column[n - 1], spread(std::span<const double>(column).subspan(n - 3)),
                 std::abs(column[n - 1] - previous)};
  };

  // The ratio of the last differences is biased by the subleading terms, so the exponent
  // is refined to the one that makes the deepest accelerants agree best.
  const double q0 = std::clamp(std::log2(ratio), kMinExponent, kMaxExponent);
  double lo = std::max(kMinExponent, q0 - 0.5);
  double hi = std::min(kMaxExponent, q0 + 0.5);
  double best_q = q0;
  double best = accelerate(q0).spread;
  constexpr int kGrid = 100;
  for (int i = 0; i <= kGrid; ++i) {
    const double q = lo + (hi - lo) * i / kGrid;
    const double sp = accelerate(q).spread;
    if (sp < best) {
      best = sp;
      best_q = q;
    }
  }
  lo = std::max(kMinExponent, best_q - (hi - lo) / kGrid);
  hi = std::min(kMaxExponent, best_q + (hi - lo) / kGrid);
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i < 60; ++i) {
    const double a = hi - golden * (hi - lo);
    const double b = lo + golden * (hi - lo);
    if (accelerate(a).spread < accelerate(b).spread) {
      hi = b;
    } else {
      lo = a;
    }
  }
  const double mid = 0.5 * (lo + hi);
  if (accelerate(mid).spread < best) best_q = mid;

  const Table t = accelerate(best_q);
  return LimitEstimate::finite(t.value, std::max(t.spread, t.correction));
}

}  // namespace radialgeo
