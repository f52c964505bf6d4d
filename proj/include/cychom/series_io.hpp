#pragma once

#include <json.hpp>

#include "cychom/series.hpp"

namespace cychom {

/// {"trunc": N, "terms": [[q, "even", "odd"], ...]}; zero weights are omitted.
nlohmann::json to_json(const SignedSeries& f);
/// {"trunc": N, "terms": [[n, q, e, "coef"], ...]} in (q, n, e) order.
nlohmann::json to_json(const TriSeries& f);

SignedSeries signed_series_from_json(const nlohmann::json& j);
TriSeries tri_series_from_json(const nlohmann::json& j);

}  // namespace cychom
