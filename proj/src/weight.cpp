#include "demkit/weight.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

namespace demkit {

Weight Weight::fundamental(std::size_t rank, int node) {
  if (node < 1 || static_cast<std::size_t>(node) > rank)
    throw std::invalid_argument("fundamental weight index " + std::to_string(node) +
                                " out of range 1.." + std::to_string(rank));
  Weight w(rank);
  w.coords_[node - 1] = 1;
  return w;
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c >= 0; });
}

bool Weight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank())
    throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank())
    throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] -= o.coords_[i];
  return *this;
}

Weight& Weight::operator*=(value_type k) {
  for (auto& c : coords_)
    c *= k;
  return *this;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

Weight Weight::parse(const std::string& text) {
  Weight w;
  if (text.empty())
    throw std::invalid_argument("empty weight");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos)
      comma = text.size();
    std::string_view piece(text.data() + pos, comma - pos);
    while (!piece.empty() && piece.front() == ' ')
      piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ')
      piece.remove_suffix(1);
    value_type v{};
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw std::invalid_argument("malformed weight '" + text + "'");
    w.coords_.push_back(v);
    pos = comma + 1;
  }
  return w;
}

std::size_t Weight::hash() const noexcept {
  return boost::hash_range(coords_.begin(), coords_.end());
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << '(' << w.to_string() << ')';
}

} // namespace demkit
