#ifndef DEMKIT_WEIGHT_HPP
#define DEMKIT_WEIGHT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace demkit {

/// An integral weight in the fundamental-weight basis: coords[i] = lambda(h_{i+1}).
///
/// Weights are plain values and carry no reference to a root system; the
/// caller is responsible for only combining weights of the same rank.
class Weight {
public:
  using value_type = std::int32_t;
  using storage = boost::container::small_vector<value_type, 8>;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  Weight(std::initializer_list<value_type> init) : coords_(init) {}
  explicit Weight(std::span<const value_type> c) : coords_(c.begin(), c.end()) {}
  explicit Weight(const std::vector<int>& c) : coords_(c.begin(), c.end()) {}

  static Weight zero(std::size_t rank) { return Weight(rank); }
  static Weight fundamental(std::size_t rank, int node);

  std::size_t rank() const noexcept { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  std::span<const value_type> coords() const noexcept { return {coords_.data(), coords_.size()}; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_dominant() const noexcept;
  bool is_zero() const noexcept;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(value_type k);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(value_type k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight& a, const Weight& b) noexcept { return a.coords_ == b.coords_; }
  friend bool operator<(const Weight& a, const Weight& b) noexcept { return a.coords_ < b.coords_; }

  /// "1,0,2"
  std::string to_string() const;
  /// Parses "1,0,2"; throws std::invalid_argument on malformed input.
  static Weight parse(const std::string& text);

  std::size_t hash() const noexcept;

private:
  storage coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept { return w.hash(); }
};

/// A weight together with an integer grade (the delta / t-degree).
struct GradedWeight {
  Weight weight;
  int grade = 0;

  friend bool operator==(const GradedWeight& a, const GradedWeight& b) noexcept {
    return a.grade == b.grade && a.weight == b.weight;
  }
};

struct GradedWeightHash {
  std::size_t operator()(const GradedWeight& k) const noexcept {
    return k.weight.hash() ^ (static_cast<std::size_t>(k.grade) * 0x9e3779b97f4a7c15ULL);
  }
};

/// A word in the simple reflections. Letter 0 is the affine reflection s_0;
/// letters 1..n are the finite simple reflections.
struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const noexcept { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

} // namespace demkit

#endif
