#ifndef DEMKIT_FINITE_HPP
#define DEMKIT_FINITE_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "demkit/character.hpp"
#include "demkit/root_system.hpp"

namespace demkit {

/// Multiplicities of the dominant weights of V(lambda), highest first.
using DominantMultiplicities = std::vector<std::pair<Weight, mpz_class>>;

/// Freudenthal's recursion on dominant weights. Results are memoized per
/// thread.
std::shared_ptr<const DominantMultiplicities> weyl_dominant_multiplicities(const RootSystem& rs,
                                                                           const Weight& lambda);

/// char V(lambda) via Freudenthal.
Character weyl_character(const RootSystemPtr& rs, const Weight& lambda);
/// char V(lambda) via finite Demazure operators along a reduced word of w_0.
Character weyl_character_demazure(const RootSystemPtr& rs, const Weight& lambda);
/// Weyl's product formula.
mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Isotypic decomposition: dominant weight -> positive multiplicity.
struct Decomposition {
  std::map<Weight, mpz_class> entries;

  mpz_class multiplicity(const Weight& nu) const {
    auto it = entries.find(nu);
    return it == entries.end() ? mpz_class(0) : it->second;
  }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// sum mult(nu) char V(nu)
Character reconstruct(const RootSystemPtr& rs, const Decomposition& d);

class NotACharacter : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Tie-break among dominant weights of equal height during extraction.
enum class ExtractionOrder { lexicographic_descending, lexicographic_ascending };

/// Peels off irreducible characters from the top. Throws NotACharacter when
/// the input is not W-invariant or extraction drives a multiplicity negative.
Decomposition tensor_decompose(const Character& x,
                               ExtractionOrder order = ExtractionOrder::lexicographic_descending);

struct SurjectionCheck {
  bool exists = false;
  /// First dominant weight (in ascending order) where the target multiplicity exceeds the source one.
  std::optional<Weight> witness;
  Decomposition source;
  Decomposition target;
};

/// Multiplicity domination: a g-module surjection source -> target exists iff
/// every isotypic multiplicity of the target is at most that of the source.
SurjectionCheck surjection_exists(const Character& source, const Character& target);
SurjectionCheck surjection_exists(const Decomposition& source, const Decomposition& target);

/// lambda1 + lambda2 = mu1 + mu2 and
/// min(lambda1(h_a), lambda2(h_a)) <= min(mu1(h_a), mu2(h_a)) for all positive roots a.
bool conjecture_conditions(const RootSystem& rs, const Weight& lambda1, const Weight& lambda2, const Weight& mu1,
                           const Weight& mu2);

} // namespace demkit

#endif
