#ifndef DEMKIT_IO_HPP
#define DEMKIT_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "demkit/affine.hpp"
#include "demkit/character.hpp"
#include "demkit/finite.hpp"

namespace demkit {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/*
  Character files are JSON lines. The first line is a header
    {"system":"A2","kind":"graded"}
  followed by one line per term
    {"w":[1,0],"g":0,"m":"3"}
  in canonical order (grade ascending, weight lexicographically descending).
  Plain characters carry "g":0 on every term.
*/
void write_character(std::ostream& os, const Character& x);
void write_character(std::ostream& os, const GradedCharacter& x);

struct CharacterFile {
  RootSystemPtr system;
  bool graded = false;
  GradedCharacter terms;
};

/// Throws FormatError on a malformed header or term line.
CharacterFile read_character(std::istream& is);

Json weight_json(const Weight& w);
Weight weight_from_json(const Json& j);

/// Term arrays in the same shape as the file format, without the header.
Json character_json(const Character& x);
Json character_json(const GradedCharacter& x);
/// {"1,0": "1", ...} in ascending weight order.
Json decomposition_json(const Decomposition& d);
/// {"0": "3", "1": "1"}
Json graded_dimension_json(const std::map<int, mpz_class>& series);
Json presentation_json(const RootSystem& rs, int level, const Weight& lambda,
                       const std::vector<RelationDescriptor>& relations);

} // namespace demkit

#endif
