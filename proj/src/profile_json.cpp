#include "radialgeo/profile_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

double number_at(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ConfigurationError(where + ": missing numeric field '" + key + "'");
  }
  return j.at(key).get<double>();
}

std::vector<double> numbers_of(const nlohmann::json& arr, std::size_t from, const std::string& where) {
  std::vector<double> out;
  for (std::size_t i = from; i < arr.size(); ++i) {
    if (!arr[i].is_number()) throw ConfigurationError(where + ": coefficients must be numbers");
    out.push_back(arr[i].get<double>());
  }
  return out;
}

Segment segment_from_json(const nlohmann::json& j, std::size_t index) {
  const std::string where = "segment " + std::to_string(index);
  if (j.is_array()) {
    if (j.size() < 2) throw ConfigurationError(where + ": expected [t_start, t_end, coefficients...]");
    const auto all = numbers_of(j, 0, where);
    return Segment{all[0], all[1], Polynomial(numbers_of(j, 2, where)), Polynomial{}};
  }
  if (j.is_object()) {
    Segment s{number_at(j, "t_start", where), number_at(j, "t_end", where), Polynomial{}, Polynomial{}};
    if (!j.contains("num") || !j.at("num").is_array()) {
      throw ConfigurationError(where + ": missing 'num' coefficient array");
    }
    s.num = Polynomial(numbers_of(j.at("num"), 0, where));
    if (j.contains("den")) {
      if (!j.at("den").is_array()) throw ConfigurationError(where + ": 'den' must be an array");
      s.den = Polynomial(numbers_of(j.at("den"), 0, where));
      if (s.den.is_zero()) throw ConfigurationError(where + ": zero denominator");
    }
    return s;
  }
  throw ConfigurationError(where + ": expected an array or an object");
}

TailModel tail_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigurationError("tail: expected an object with a string 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return ZeroTail{};
  if (kind == "constant") return ConstantTail{number_at(j, "kappa", "tail")};
  if (kind == "power") return PowerDecayTail{number_at(j, "a", "tail"), number_at(j, "p", "tail")};
  throw ConfigurationError("tail: unknown kind '" + kind + "'");
}

ordered_json coefficients_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (double c : p.coefficients()) arr.push_back(report_number(c));
  return arr;
}

}  // namespace

CurvatureProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigurationError("profile must be a JSON object");
  std::vector<Segment> segments;
  if (j.contains("segments")) {
    const auto& segs = j.at("segments");
    if (!segs.is_array()) throw ConfigurationError("'segments' must be an array");
    for (std::size_t i = 0; i < segs.size(); ++i) segments.push_back(segment_from_json(segs[i], i));
  }
  const TailModel tail = j.contains("tail") ? tail_from_json(j.at("tail")) : TailModel{ZeroTail{}};
  return CurvatureProfile(std::move(segments), tail);
}

ordered_json profile_to_json(const CurvatureProfile& K) {
  ordered_json segs = ordered_json::array();
  for (const Segment& s : K.segments()) {
    if (s.is_rational()) {
      ordered_json o;
      o["t_start"] = report_number(s.start);
      o["t_end"] = report_number(s.end);
      o["num"] = coefficients_json(s.num);
      o["den"] = coefficients_json(s.den);
      segs.push_back(std::move(o));
    } else {
      ordered_json arr = ordered_json::array({report_number(s.start), report_number(s.end)});
      for (double c : s.num.coefficients()) arr.push_back(report_number(c));
      segs.push_back(std::move(arr));
    }
  }
  ordered_json tail;
  std::visit(
      [&tail](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ZeroTail>) {
          tail["kind"] = "zero";
        } else if constexpr (std::is_same_v<T, ConstantTail>) {
          tail["kind"] = "constant";
          tail["kappa"] = report_number(m.kappa);
        } else {
          tail["kind"] = "power";
          tail["a"] = report_number(m.a);
          tail["p"] = report_number(m.p);
        }
      },
      K.tail());

  ordered_json out;
  out["segments"] = std::move(segs);
  out["tail"] = std::move(tail);
  return out;
}

ordered_json report_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double rounded = std::strtod(buf, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;  // no "-0.0"
}

}  // namespace radialgeo
