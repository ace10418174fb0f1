#ifndef DEMKIT_CHARACTER_HPP
#define DEMKIT_CHARACTER_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "demkit/root_system.hpp"
#include "demkit/weight.hpp"

namespace demkit {

namespace detail {

inline Weight key_sum(const Weight& a, const Weight& b) { return a + b; }
inline GradedWeight key_sum(const GradedWeight& a, const GradedWeight& b) {
  return {a.weight + b.weight, a.grade + b.grade};
}
inline const Weight& key_weight(const Weight& k) { return k; }
inline const Weight& key_weight(const GradedWeight& k) { return k.weight; }
inline int key_grade(const Weight&) { return 0; }
inline int key_grade(const GradedWeight& k) { return k.grade; }

// canonical order: grade ascending, then weights lexicographically descending
inline bool key_less(const Weight& a, const Weight& b) { return b < a; }
inline bool key_less(const GradedWeight& a, const GradedWeight& b) {
  if (a.grade != b.grade)
    return a.grade < b.grade;
  return b.weight < a.weight;
}

} // namespace detail

/*
  A finitely supported element of Z[P] (or Z[P][q, q^-1] when Key carries a
  grade) with arbitrary-precision coefficients. Zero coefficients are never
  stored. Two characters can only be combined when they belong to the same
  root system (compared by type name).

  The public operations are value-returning; the mutating accumulate() exists
  for builders and is not used on shared values.
*/
template <class Key, class Hash>
class SparseCharacter {
public:
  using key_type = Key;
  using map_type = std::unordered_map<Key, mpz_class, Hash>;

  SparseCharacter() = default;
  explicit SparseCharacter(RootSystemPtr system) : system_(std::move(system)) {}

  /// e^key
  static SparseCharacter monomial(RootSystemPtr system, Key key, const mpz_class& coeff = 1) {
    SparseCharacter c(std::move(system));
    c.accumulate(std::move(key), coeff);
    return c;
  }

  const RootSystemPtr& system() const noexcept { return system_; }
  const RootSystem& root_system() const {
    if (!system_)
      throw std::logic_error("character is not attached to a root system");
    return *system_;
  }
  const map_type& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  mpz_class coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  void accumulate(const Key& k, const mpz_class& coeff) {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  void accumulate(Key&& k, const mpz_class& coeff) {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  /// Sum of all coefficients: the dimension of the module for a module character.
  mpz_class dimension() const {
    mpz_class s = 0;
    for (const auto& [k, c] : terms_)
      s += c;
    return s;
  }

  /// Terms in canonical order (used for serialization and comparisons that need order).
  std::vector<std::pair<Key, mpz_class>> sorted_terms() const {
    std::vector<std::pair<Key, mpz_class>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return detail::key_less(a.first, b.first); });
    return out;
  }

  SparseCharacter scaled(const mpz_class& k) const {
    SparseCharacter out(system_);
    if (k == 0)
      return out;
    for (const auto& [key, c] : terms_)
      out.terms_.emplace(key, c * k);
    return out;
  }

  friend SparseCharacter operator+(const SparseCharacter& x, const SparseCharacter& y) {
    SparseCharacter out = x;
    out.system_ = check_same(x, y);
    for (const auto& [k, c] : y.terms_)
      out.accumulate(k, c);
    return out;
  }

  friend SparseCharacter operator-(const SparseCharacter& x, const SparseCharacter& y) {
    SparseCharacter out = x;
    out.system_ = check_same(x, y);
    for (const auto& [k, c] : y.terms_)
      out.accumulate(k, -c);
    return out;
  }

  /// Convolution product: weights add, grades add.
  friend SparseCharacter operator*(const SparseCharacter& x, const SparseCharacter& y) {
    SparseCharacter out(check_same(x, y));
    const auto& big = x.size() >= y.size() ? x : y;
    const auto& small = x.size() >= y.size() ? y : x;
    out.terms_.reserve(big.size() + small.size() * 4);
    mpz_class prod;
    for (const auto& [ks, cs] : small.terms_)
      for (const auto& [kb, cb] : big.terms_) {
        prod = cs * cb;
        out.accumulate(detail::key_sum(kb, ks), prod);
      }
    return out;
  }

  friend bool operator==(const SparseCharacter& x, const SparseCharacter& y) {
    if (x.system_ && y.system_ && x.system_->name() != y.system_->name())
      return false;
    return x.terms_ == y.terms_;
  }

private:
  static RootSystemPtr check_same(const SparseCharacter& x, const SparseCharacter& y) {
    if (!x.system_)
      return y.system_;
    if (y.system_ && x.system_ != y.system_ && x.system_->name() != y.system_->name())
      throw std::invalid_argument("characters belong to different root systems (" + x.system_->name() + " vs " +
                                  y.system_->name() + ")");
    return x.system_;
  }

  RootSystemPtr system_;
  map_type terms_;
};

/// Ungraded h-character: an element of Z[P].
using Character = SparseCharacter<Weight, WeightHash>;
/// Graded character: an element of Z[P][q, q^-1], grade = q-degree.
using GradedCharacter = SparseCharacter<GradedWeight, GradedWeightHash>;

/// e^0 at grade 0.
Character unit_character(RootSystemPtr system);
GradedCharacter unit_graded_character(RootSystemPtr system);

/// Forgets the grade.
Character collapse(const GradedCharacter& x);
/// Terms of a single grade, as an ungraded character.
Character slice(const GradedCharacter& x, int grade);
/// Places an ungraded character at the given grade.
GradedCharacter at_grade(const Character& x, int grade = 0);
/// Multiplies by q^k.
GradedCharacter shift(const GradedCharacter& x, int k);
/// Keeps only grades <= max_grade.
GradedCharacter truncate(const GradedCharacter& x, int max_grade);
/// Hilbert series: grade -> sum of multiplicities in that grade.
std::map<int, mpz_class> graded_dimension(const GradedCharacter& x);
/// "3 + 1·q + 2·q^2"
std::string format_graded_dimension(const std::map<int, mpz_class>& series);

/// True iff the coefficient is constant on every W-orbit of the support.
bool is_W_invariant(const Character& x);
/// The coefficients on dominant weights only.
std::map<Weight, mpz_class> dominant_part(const Character& x);

/// x^k for k >= 0.
Character power(const Character& x, unsigned k);

} // namespace demkit

#endif
