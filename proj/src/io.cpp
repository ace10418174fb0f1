#include "demkit/io.hpp"

#include <istream>
#include <ostream>

namespace demkit {

namespace {

template <class Key>
Json term_json(const Key& key, const mpz_class& m) {
  Json t;
  t["w"] = weight_json(detail::key_weight(key));
  t["g"] = detail::key_grade(key);
  t["m"] = m.get_str();
  return t;
}

template <class X>
void write_terms(std::ostream& os, const X& x, const char* kind) {
  Json header;
  header["system"] = x.root_system().name();
  header["kind"] = kind;
  os << header.dump() << '\n';
  for (const auto& [key, m] : x.sorted_terms())
    os << term_json(key, m).dump() << '\n';
}

template <class X>
Json terms_array(const X& x) {
  Json out = Json::array();
  for (const auto& [key, m] : x.sorted_terms())
    out.push_back(term_json(key, m));
  return out;
}

} // namespace

Json weight_json(const Weight& w) {
  Json out = Json::array();
  for (auto c : w)
    out.push_back(c);
  return out;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array())
    throw FormatError("weight must be a JSON array");
  std::vector<int> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer())
      throw FormatError("weight coordinates must be integers");
    coords.push_back(c.get<int>());
  }
  return Weight(coords);
}

void write_character(std::ostream& os, const Character& x) { write_terms(os, x, "plain"); }
void write_character(std::ostream& os, const GradedCharacter& x) { write_terms(os, x, "graded"); }

CharacterFile read_character(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw FormatError("character file is empty");
  CharacterFile out;
  try {
    Json header = Json::parse(line);
    if (!header.is_object() || !header.contains("system") || !header.contains("kind") ||
        !header["system"].is_string() || !header["kind"].is_string())
      throw FormatError("character header must have string fields system and kind");
    const std::string kind = header["kind"].get<std::string>();
    if (kind != "graded" && kind != "plain")
      throw FormatError("unknown character kind '" + kind + "'");
    out.graded = kind == "graded";
    try {
      out.system = RootSystem::parse(header["system"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    out.terms = GradedCharacter(out.system);

    std::size_t lineno = 1;
    while (std::getline(is, line)) {
      ++lineno;
      if (line.empty())
        continue;
      Json t = Json::parse(line);
      if (!t.is_object() || !t.contains("w") || !t.contains("g") || !t.contains("m") || !t["g"].is_number_integer() ||
          !t["m"].is_string())
        throw FormatError("malformed term on line " + std::to_string(lineno));
      Weight w = weight_from_json(t["w"]);
      if (w.rank() != static_cast<std::size_t>(out.system->rank()))
        throw FormatError("weight of wrong rank on line " + std::to_string(lineno));
      const int g = t["g"].get<int>();
      if (!out.graded && g != 0)
        throw FormatError("plain character with nonzero grade on line " + std::to_string(lineno));
      mpz_class m;
      if (m.set_str(t["m"].get<std::string>(), 10) != 0)
        throw FormatError("multiplicity is not a decimal integer on line " + std::to_string(lineno));
      out.terms.accumulate(GradedWeight{std::move(w), g}, m);
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON in character file: ") + e.what());
  }
  return out;
}

Json character_json(const Character& x) { return terms_array(x); }
Json character_json(const GradedCharacter& x) { return terms_array(x); }

Json decomposition_json(const Decomposition& d) {
  Json out = Json::object();
  for (const auto& [nu, m] : d.entries)
    out[nu.to_string()] = m.get_str();
  return out;
}

Json graded_dimension_json(const std::map<int, mpz_class>& series) {
  Json out = Json::object();
  for (const auto& [g, m] : series)
    out[std::to_string(g)] = m.get_str();
  return out;
}

Json presentation_json(const RootSystem& rs, int level, const Weight& lambda,
                       const std::vector<RelationDescriptor>& relations) {
  Json out;
  out["system"] = rs.name();
  out["level"] = level;
  out["weight"] = weight_json(lambda);
  Json rows = Json::array();
  for (const auto& r : relations) {
    Json row;
    row["alpha"] = r.root;
    row["d"] = r.d;
    row["pairing"] = r.pairing;
    row["s"] = r.s;
    row["m"] = r.m;
    Json kinds = Json::array();
    Json power;
    power["kind"] = "power";
    power["t_exponent"] = r.power_exponent;
    kinds.push_back(power);
    if (r.nilpotency) {
      Json nil;
      nil["kind"] = "nilpotency";
      nil["t_exponent"] = r.nilpotency_exponent;
      nil["power"] = r.nilpotency_power;
      kinds.push_back(nil);
    }
    row["relations"] = kinds;
    rows.push_back(row);
  }
  out["relations"] = rows;
  return out;
}

} // namespace demkit
