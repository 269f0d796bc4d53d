#pragma once
// Helpers shared by the report builders.

#include "qrconf/projective.hpp"
#include "qrconf/reports.hpp"
#include "qrconf/scalar.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <type_traits>
#include <vector>

namespace qrconf::detail {

using nlohmann::json;

json real_json(const Real& x);
json number_json(const Rational& x);
json number_json(const Real& x);

template <class S>
json tail_json(const TailEstimate<S>& t)
{
  return {{"value", real_json(t.extrapolated)}, {"error", real_json(t.error_bound)}, {"diverges", t.diverges}};
}

json estimate_json(const Estimate& e);

template <class S>
json weight_json(const Weight<S>& w)
{
  json j{{"h", number_json(w.h)}, {"nondegenerate", w.nondegenerate}, {"unitarizable", w.unitarizable}};
  j["q_R"] = w.q_r ? number_json(*w.q_r) : json("undefined");
  return j;
}

/// Cell text for CSV output.
std::string cell(const Rational& x);
std::string cell(const Real& x);

/// Parsed weights in the requested mode, in the order given.
template <class S>
std::vector<std::pair<std::string, S>> parse_weights(const RunConfig& config);

/// h sits on a root of 6h^2 - 6h + 1, where the fundamental form vanishes.
template <class S>
bool near_root(const Weight<S>& w)
{
  if constexpr (std::is_same_v<S, Rational>) {
    return is_zero(kappa(w));
  } else {
    // Decimal input carries about 30 digits, so the root is only hit approximately.
    return abs_of(kappa(w)) < Real("1e-20");
  }
}

template <class S>
bool in_contraction_domain(const Weight<S>& w)
{
  return sign_of(w.h - from_ratio<S>(1, 2)) > 0 && !near_root(w);
}

json config_json(const RunConfig& config, const std::string& command);

}  // namespace qrconf::detail
