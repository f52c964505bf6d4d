#include "cychom/presentation_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cychom/error.hpp"

namespace cychom {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + ": missing field '" + key + "'");
  return *it;
}

int small_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) throw SchemaError(path + ": integer out of range");
  return static_cast<int>(x);
}

Rational coefficient(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw SchemaError(path + ": coefficient must be a \"p/q\" string or an integer");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw SchemaError(path + ": malformed rational '" + v.get<std::string>() + "'");
  }
}

}  // namespace

Presentation presentation_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("$: expected an object");
  for (const auto& [key, value] : j.items()) {
    static const std::set<std::string> known{"generators", "relations", "order", "trunc"};
    if (!known.count(key)) throw SchemaError("$: unknown field '" + key + "'");
  }
  const json& gens = field(j, "generators", "$");
  if (!gens.is_array() || gens.empty()) throw SchemaError("$.generators: expected a nonempty array");
  std::vector<Generator> list;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "$.generators[" + std::to_string(i) + "]";
    const json& name = field(gens[i], "name", path);
    if (!name.is_string()) throw SchemaError(path + ".name: expected a string");
    Generator g{name.get<std::string>(), 1, 0};
    if (gens[i].contains("weight")) g.weight = small_int(gens[i]["weight"], path + ".weight");
    if (gens[i].contains("parity")) g.parity = small_int(gens[i]["parity"], path + ".parity");
    if (g.weight < 1) throw SchemaError(path + ".weight: must be positive");
    if (g.parity != 0 && g.parity != 1) throw SchemaError(path + ".parity: must be 0 or 1");
    list.push_back(std::move(g));
  }
  Presentation p;
  try {
    p.alphabet = Alphabet(std::move(list));
  } catch (const SchemaError& e) {
    throw SchemaError(std::string("$.generators: ") + e.what());
  }

  if (j.contains("order")) {
    const json& order = j["order"];
    if (!order.is_array()) throw SchemaError("$.order: expected an array of generator names");
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::string path = "$.order[" + std::to_string(i) + "]";
      if (!order[i].is_string()) throw SchemaError(path + ": expected a generator name");
      try {
        p.order.push_back(p.alphabet.index_of(order[i].get<std::string>()));
      } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
      }
    }
    if (std::set<Letter>(p.order.begin(), p.order.end()).size() != p.order.size() ||
        p.order.size() != p.alphabet.size()) {
      throw SchemaError("$.order: must list every generator exactly once");
    }
  } else {
    for (Letter l = 0; l < p.alphabet.size(); ++l) p.order.push_back(l);
  }

  if (j.contains("trunc")) {
    p.trunc = small_int(j["trunc"], "$.trunc");
    if (p.trunc < 0) throw SchemaError("$.trunc: must be nonnegative");
  }

  if (j.contains("relations")) {
    const json& rels = j["relations"];
    if (!rels.is_array()) throw SchemaError("$.relations: expected an array");
    for (std::size_t r = 0; r < rels.size(); ++r) {
      const std::string rpath = "$.relations[" + std::to_string(r) + "]";
      if (!rels[r].is_array() || rels[r].empty()) throw SchemaError(rpath + ": expected a nonempty array of terms");
      Polynomial poly;
      for (std::size_t t = 0; t < rels[r].size(); ++t) {
        const std::string tpath = rpath + "[" + std::to_string(t) + "]";
        const json& word = field(rels[r][t], "word", tpath);
        if (!word.is_array() || word.empty()) throw SchemaError(tpath + ".word: expected a nonempty array of names");
        Term term{{}, rels[r][t].contains("coef") ? coefficient(rels[r][t]["coef"], tpath + ".coef") : Rational(1)};
        for (std::size_t k = 0; k < word.size(); ++k) {
          if (!word[k].is_string()) throw SchemaError(tpath + ".word[" + std::to_string(k) + "]: expected a name");
          try {
            term.word.push_back(p.alphabet.index_of(word[k].get<std::string>()));
          } catch (const SchemaError& e) {
            throw SchemaError(tpath + ".word[" + std::to_string(k) + "]: " + e.what());
          }
        }
        poly.push_back(std::move(term));
      }
      p.relations.push_back(std::move(poly));
    }
  }
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open presentation file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": invalid JSON: " + e.what());
  }
  return presentation_from_json(j);
}

json to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.alphabet.generators()) gens.push_back({{"name", g.name}, {"weight", g.weight}, {"parity", g.parity}});
  json rels = json::array();
  for (const auto& r : p.relations) {
    json terms = json::array();
    for (const auto& t : r) {
      json word = json::array();
      for (Letter l : t.word) word.push_back(p.alphabet[l].name);
      terms.push_back({{"coef", to_string(t.coef)}, {"word", word}});
    }
    rels.push_back(terms);
  }
  json order = json::array();
  for (Letter l : p.order) order.push_back(p.alphabet[l].name);
  return {{"generators", gens}, {"relations", rels}, {"order", order}, {"trunc", p.trunc}};
}

std::string presentation_hash(const Presentation& p) {
  // the weight bound is a run parameter, not part of the algebra
  json j = to_json(p);
  j.erase("trunc");
  const std::string text = j.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cychom
