#include "cychom/series_io.hpp"

#include <algorithm>

#include "cychom/error.hpp"

namespace cychom {

using nlohmann::json;

json to_json(const SignedSeries& f) {
  json terms = json::array();
  for (int q = 0; q <= f.trunc(); ++q) {
    if (f[q].is_zero()) continue;
    terms.push_back(json::array({q, to_string(f.even(q)), to_string(f.odd(q))}));
  }
  return json{{"trunc", f.trunc()}, {"terms", terms}};
}

json to_json(const TriSeries& f) {
  std::vector<std::pair<TriKey, Rational>> sorted(f.terms().begin(), f.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.q, a.first.n, a.first.sign) < std::tie(b.first.q, b.first.n, b.first.sign);
  });
  json terms = json::array();
  for (const auto& [k, c] : sorted) terms.push_back(json::array({k.n, k.q, k.sign, to_string(c)}));
  return json{{"trunc", f.trunc()}, {"terms", terms}};
}

namespace {

Rational rational_field(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw SchemaError("coefficient must be a string \"p/q\" or an integer");
}

}  // namespace

SignedSeries signed_series_from_json(const json& j) {
  try {
    SignedSeries f(j.at("trunc").get<int>());
    for (const auto& t : j.at("terms")) {
      const int q = t.at(0).get<int>();
      if (q < 0 || q > f.trunc()) throw SchemaError("weight out of range in series");
      f.at(q) = CoefPair{rational_field(t.at(1)), rational_field(t.at(2))};
    }
    return f;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed series: ") + e.what());
  }
}

TriSeries tri_series_from_json(const json& j) {
  try {
    TriSeries f(j.at("trunc").get<int>());
    for (const auto& t : j.at("terms")) {
      f.set(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), rational_field(t.at(3)));
    }
    return f;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed series: ") + e.what());
  }
}

}  // namespace cychom
