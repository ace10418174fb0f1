#include "demkit/character.hpp"

#include <sstream>

namespace demkit {

Character unit_character(RootSystemPtr system) {
  Weight z = system->zero();
  return Character::monomial(std::move(system), std::move(z));
}

GradedCharacter unit_graded_character(RootSystemPtr system) {
  GradedWeight z{system->zero(), 0};
  return GradedCharacter::monomial(std::move(system), std::move(z));
}

Character collapse(const GradedCharacter& x) {
  Character out(x.system());
  for (const auto& [k, c] : x.terms())
    out.accumulate(k.weight, c);
  return out;
}

Character slice(const GradedCharacter& x, int grade) {
  Character out(x.system());
  for (const auto& [k, c] : x.terms())
    if (k.grade == grade)
      out.accumulate(k.weight, c);
  return out;
}

GradedCharacter at_grade(const Character& x, int grade) {
  GradedCharacter out(x.system());
  for (const auto& [w, c] : x.terms())
    out.accumulate(GradedWeight{w, grade}, c);
  return out;
}

GradedCharacter shift(const GradedCharacter& x, int k) {
  GradedCharacter out(x.system());
  for (const auto& [key, c] : x.terms())
    out.accumulate(GradedWeight{key.weight, key.grade + k}, c);
  return out;
}

GradedCharacter truncate(const GradedCharacter& x, int max_grade) {
  GradedCharacter out(x.system());
  for (const auto& [key, c] : x.terms())
    if (key.grade <= max_grade)
      out.accumulate(key, c);
  return out;
}

std::map<int, mpz_class> graded_dimension(const GradedCharacter& x) {
  std::map<int, mpz_class> out;
  for (const auto& [k, c] : x.terms())
    out[k.grade] += c;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::string format_graded_dimension(const std::map<int, mpz_class>& series) {
  if (series.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : series) {
    if (!first)
      os << " + ";
    first = false;
    os << c.get_str();
    if (g == 1)
      os << "·q";
    else if (g != 0)
      os << "·q^" << g;
  }
  return os.str();
}

bool is_W_invariant(const Character& x) {
  const RootSystem& rs = x.root_system();
  for (const auto& [w, c] : x.terms())
    for (int node = 1; node <= rs.rank(); ++node) {
      if (w[node - 1] == 0)
        continue;
      if (x.coefficient(rs.simple_reflection(node, w)) != c)
        return false;
    }
  return true;
}

std::map<Weight, mpz_class> dominant_part(const Character& x) {
  std::map<Weight, mpz_class> out;
  for (const auto& [w, c] : x.terms())
    if (w.is_dominant())
      out.emplace(w, c);
  return out;
}

Character power(const Character& x, unsigned k) {
  Character result = unit_character(x.system());
  Character base = x;
  while (k) {
    if (k & 1u)
      result = result * base;
    k >>= 1u;
    if (k)
      base = base * base;
  }
  return result;
}

} // namespace demkit
