#pragma once

#include <json.hpp>

#include "radialgeo/curvature_profile.hpp"

namespace radialgeo {

using ordered_json = nlohmann::ordered_json;

/// Reads a profile object:
///
///   {"segments": [[t0, t1, c0, c1, ...],                       // polynomial in t
///                 {"t_start": t1, "t_end": t2, "num": [...], "den": [...]}],  // rational
///    "tail": {"kind": "zero"} | {"kind": "constant", "kappa": k}
///          | {"kind": "power", "a": a, "p": p}}
///
/// Coefficients are in ascending powers of t. Throws ConfigurationError on malformed input.
CurvatureProfile profile_from_json(const nlohmann::json& j);

ordered_json profile_to_json(const CurvatureProfile& K);

/// Report number: rounded to 12 significant digits; infinities become "inf"/"-inf"
/// and NaN becomes null.
ordered_json report_number(double v);

}  // namespace radialgeo
