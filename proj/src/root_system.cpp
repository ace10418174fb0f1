#include "demkit/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <gmpxx.h>

namespace demkit {

namespace {

std::string type_name(char series, int rank) {
  return std::string(1, series) + std::to_string(rank);
}

// cartan[i][j] = <alpha_j, h_i>, Bourbaki numbering, 0-based.
std::vector<int> bourbaki_cartan(char series, int n) {
  std::vector<int> c(n * n, 0);
  auto at = [&](int i, int j) -> int& { return c[i * n + j]; };
  auto simple_bond = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  // multiple bond between a short and a long node: <alpha_long, h_short> = -ratio
  auto multi_bond = [&](int short_node, int long_node, int ratio) {
    at(short_node, long_node) = -ratio;
    at(long_node, short_node) = -1;
  };
  for (int i = 0; i < n; ++i)
    at(i, i) = 2;

  switch (series) {
  case 'A':
    for (int i = 0; i + 1 < n; ++i)
      simple_bond(i, i + 1);
    break;
  case 'B':
    for (int i = 0; i + 2 < n; ++i)
      simple_bond(i, i + 1);
    multi_bond(n - 1, n - 2, 2);
    break;
  case 'C':
    for (int i = 0; i + 2 < n; ++i)
      simple_bond(i, i + 1);
    multi_bond(n - 2, n - 1, 2);
    break;
  case 'D':
    for (int i = 0; i + 3 < n; ++i)
      simple_bond(i, i + 1);
    simple_bond(n - 3, n - 2);
    simple_bond(n - 3, n - 1);
    break;
  case 'E':
    // 1 - 3 - 4 - 5 - 6 (- 7 - 8), with 2 attached to 4
    simple_bond(0, 2);
    simple_bond(1, 3);
    for (int i = 2; i + 1 < n; ++i)
      simple_bond(i, i + 1);
    break;
  case 'F':
    simple_bond(0, 1);
    multi_bond(2, 1, 2);
    simple_bond(2, 3);
    break;
  case 'G':
    multi_bond(0, 1, 3);
    break;
  default:
    break;
  }
  return c;
}

// Gauss-Jordan inverse over the rationals.
std::vector<mpq_class> rational_inverse(const std::vector<mpq_class>& m, int n) {
  std::vector<mpq_class> a = m;
  std::vector<mpq_class> inv(n * n, 0);
  for (int i = 0; i < n; ++i)
    inv[i * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot * n + col] == 0)
      ++pivot;
    if (pivot == n)
      throw std::logic_error("singular matrix");
    if (pivot != col)
      for (int k = 0; k < n; ++k) {
        std::swap(a[pivot * n + k], a[col * n + k]);
        std::swap(inv[pivot * n + k], inv[col * n + k]);
      }
    mpq_class p = a[col * n + col];
    for (int k = 0; k < n; ++k) {
      a[col * n + k] /= p;
      inv[col * n + k] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0)
        continue;
      mpq_class f = a[r * n + col];
      for (int k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[col * n + k];
        inv[r * n + k] -= f * inv[col * n + k];
      }
    }
  }
  return inv;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("value does not fit in 64 bits");
  return z.get_si();
}

// Integer matrix s * m where s is the lcm of all denominators.
std::pair<std::vector<std::int64_t>, std::int64_t> clear_denominators(const std::vector<mpq_class>& m) {
  mpz_class s = 1;
  for (const auto& q : m)
    mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
  std::vector<std::int64_t> out;
  out.reserve(m.size());
  for (const auto& q : m) {
    mpq_class scaled = q * s;
    out.push_back(to_int64(scaled.get_num()));
  }
  return {out, to_int64(s)};
}

} // namespace

bool is_valid_type(char series, int rank) noexcept {
  switch (series) {
  case 'A': return rank >= 1;
  case 'B': return rank >= 2;
  case 'C': return rank >= 2;
  case 'D': return rank >= 4;
  case 'E': return rank >= 6 && rank <= 8;
  case 'F': return rank == 4;
  case 'G': return rank == 2;
  default: return false;
  }
}

std::shared_ptr<const RootSystem> RootSystem::build(char series, int rank) {
  series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  if (!is_valid_type(series, rank))
    throw std::invalid_argument("invalid simple type (" + std::string(1, series) + ", " +
                                std::to_string(rank) + ")");
  return std::shared_ptr<const RootSystem>(new RootSystem(series, rank, bourbaki_cartan(series, rank)));
}

std::shared_ptr<const RootSystem> RootSystem::parse(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw std::invalid_argument("malformed root system name '" + name + "'");
  std::size_t pos = 1;
  if (name[pos] == '_')
    ++pos;
  std::string digits = name.substr(pos);
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw std::invalid_argument("malformed root system name '" + name + "'");
  return build(name[0], std::stoi(digits));
}

RootSystem::RootSystem(char series, int rank, std::vector<int> cartan)
    : series_(series), rank_(rank), cartan_(std::move(cartan)) {
  const int n = rank_;

  // relative square lengths from the symmetrizability of the Cartan matrix
  std::vector<std::int64_t> len(n, 0);
  len[0] = 6;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || this->cartan(i, j) == 0)
        continue;
      std::int64_t num = this->cartan(i, j) * len[i];
      std::int64_t den = this->cartan(j, i);
      if (num % den != 0)
        throw std::logic_error("Cartan matrix is not symmetrizable over the chosen base");
      std::int64_t lj = num / den;
      if (len[j] == 0) {
        len[j] = lj;
        queue.push_back(j);
      } else if (len[j] != lj) {
        throw std::logic_error("inconsistent root lengths in " + name());
      }
    }
  }
  const std::int64_t longest = *std::max_element(len.begin(), len.end());
  d_.resize(n);
  for (int i = 0; i < n; ++i)
    d_[i] = static_cast<int>(longest / len[i]);

  for (int j = 0; j < n; ++j) {
    Weight a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      a[i] = this->cartan(i, j);
    simple_roots_.push_back(a);
  }

  generate_roots();

  // square length of every root, in the same units as len[]
  for (auto& r : roots_) {
    std::int64_t twice = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        twice += static_cast<std::int64_t>(r.simple_coords[i]) * r.simple_coords[j] * this->cartan(i, j) * len[i];
    std::int64_t l = twice / 2;
    if (l <= 0 || longest % l != 0)
      throw std::logic_error("bad root length in " + name());
    r.d = static_cast<int>(longest / l);
    r.coroot_coords.resize(n);
    for (int i = 0; i < n; ++i) {
      std::int64_t num = static_cast<std::int64_t>(r.simple_coords[i]) * r.d;
      if (num % d_[i] != 0)
        throw std::logic_error("non-integral coroot in " + name());
      r.coroot_coords[i] = static_cast<int>(num / d_[i]);
    }
  }

  theta_ = 0;
  for (std::size_t k = 1; k < roots_.size(); ++k)
    if (roots_[k].height > roots_[theta_].height)
      theta_ = k;

  int rho_theta = 0;
  for (int k : roots_[theta_].coroot_coords)
    rho_theta += k;
  dual_coxeter_ = 1 + rho_theta;

  compute_forms();
}

void RootSystem::generate_roots() {
  const int n = rank_;
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    known.insert(c);
    layer.push_back(c);
  }
  auto to_weight = [&](const std::vector<int>& c) {
    Weight w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      if (c[j])
        w += c[j] * simple_roots_[j];
    return w;
  };
  int height = 1;
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : layer) {
      Weight w = to_weight(c);
      roots_.push_back(PositiveRoot{w, c, {}, 1, height});
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
        int p = 0;
        for (;;) {
          std::vector<int> down = c;
          down[i] -= p + 1;
          if (down[i] < 0 || !known.count(down))
            break;
          ++p;
        }
        int q = p - w[i];
        if (q > 0) {
          std::vector<int> up = c;
          up[i] += 1;
          if (known.insert(up).second)
            next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
    ++height;
  }
}

void RootSystem::compute_forms() {
  const int n = rank_;
  // (alpha_j, omega_k) = delta_jk / d_j  =>  G = (C^T)^{-1} diag(1/d)
  std::vector<mpq_class> ct(n * n);
  std::vector<mpq_class> c(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ct[i * n + j] = cartan(j, i);
      c[i * n + j] = cartan(i, j);
    }
  auto ct_inv = rational_inverse(ct, n);
  std::vector<mpq_class> g(n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      g[i * n + k] = ct_inv[i * n + k] / mpq_class(d_[k]);
  std::tie(gram_, form_scale_) = clear_denominators(g);
  std::tie(inv_cartan_, root_scale_) = clear_denominators(rational_inverse(c, n));
}

std::string RootSystem::name() const { return type_name(series_, rank_); }

int RootSystem::d_simple(int node) const {
  if (node < 1 || node > rank_)
    throw std::out_of_range("node " + std::to_string(node) + " out of range for " + name());
  return d_[node - 1];
}

const Weight& RootSystem::simple_root(int node) const {
  if (node < 1 || node > rank_)
    throw std::out_of_range("node " + std::to_string(node) + " out of range for " + name());
  return simple_roots_[node - 1];
}

Weight RootSystem::rho() const {
  Weight r(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    r[i] = 1;
  return r;
}

std::int64_t RootSystem::pairing(const Weight& lambda, std::size_t root_index) const {
  if (root_index >= roots_.size())
    throw std::out_of_range("positive root index " + std::to_string(root_index) + " out of range for " + name());
  const auto& k = roots_[root_index].coroot_coords;
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    s += static_cast<std::int64_t>(lambda[i]) * k[i];
  return s;
}

Weight RootSystem::simple_reflection(int node, const Weight& lambda) const {
  const Weight& a = simple_root(node);
  Weight out = lambda;
  const auto c = lambda[node - 1];
  if (c != 0)
    out -= c * a;
  return out;
}

WeylWord RootSystem::longest_element() const {
  WeylWord word;
  Weight w = rho();
  for (;;) {
    int node = 0;
    for (int i = 0; i < rank_; ++i)
      if (w[i] > 0) {
        node = i + 1;
        break;
      }
    if (node == 0)
      break;
    w = simple_reflection(node, w);
    word.letters.push_back(node);
  }
  return word;
}

Weight RootSystem::apply(const WeylWord& word, const Weight& lambda) const {
  Weight w = lambda;
  for (int node : word.letters)
    w = simple_reflection(node, w);
  return w;
}

Weight RootSystem::dominant_representative(const Weight& lambda) const {
  Weight w = lambda;
  for (;;) {
    int i = 0;
    while (i < rank_ && w[i] >= 0)
      ++i;
    if (i == rank_)
      return w;
    w -= w[i] * simple_roots_[i];
  }
}

Weight RootSystem::antidominant_representative(const Weight& lambda) const {
  Weight w = lambda;
  for (;;) {
    int i = 0;
    while (i < rank_ && w[i] <= 0)
      ++i;
    if (i == rank_)
      return w;
    w -= w[i] * simple_roots_[i];
  }
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& lambda) const {
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (int node = 1; node <= rank_; ++node) {
        Weight r = simple_reflection(node, w);
        if (seen.insert(r).second)
          next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool RootSystem::in_gamma(const Weight& lambda) const {
  if (!lambda.is_dominant())
    throw std::invalid_argument("Gamma membership requires a dominant weight, got " + lambda.to_string());
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] % d_[i] != 0)
      return false;
  return true;
}

std::vector<int> RootSystem::gamma_s_values(const Weight& lambda) const {
  if (!in_gamma(lambda))
    throw std::invalid_argument(lambda.to_string() + " is not in Gamma for " + name());
  std::vector<int> s(rank_);
  for (int i = 0; i < rank_; ++i)
    s[i] = lambda[i] / d_[i];
  return s;
}

bool RootSystem::in_level_alcove(const Weight& lambda, std::int64_t level) const {
  return pairing_theta(lambda) <= level;
}

std::int64_t RootSystem::gamma_root_quotient(const Weight& lambda, std::size_t root_index) const {
  const std::int64_t p = pairing(lambda, root_index);
  const int d = roots_[root_index].d;
  if (p % d != 0)
    throw std::logic_error("d_alpha does not divide lambda(h_alpha) for " + lambda.to_string() + " in " + name());
  return p / d;
}

std::int64_t RootSystem::form(const Weight& a, const Weight& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (!a[i])
      continue;
    std::int64_t row = 0;
    for (int j = 0; j < rank_; ++j)
      row += gram_[i * rank_ + j] * b[j];
    s += a[i] * row;
  }
  return s;
}

std::vector<std::int64_t> RootSystem::root_coords_scaled(const Weight& w) const {
  std::vector<std::int64_t> c(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      c[i] += inv_cartan_[i * rank_ + j] * w[j];
  return c;
}

std::int64_t RootSystem::height_scaled(const Weight& w) const {
  auto c = root_coords_scaled(w);
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

bool RootSystem::dominates(const Weight& hi, const Weight& lo) const {
  for (auto c : root_coords_scaled(hi - lo))
    if (c < 0 || c % root_scale_ != 0)
      return false;
  return true;
}

std::vector<Weight> RootSystem::dominant_weights_below(const Weight& top) const {
  if (!top.is_dominant())
    throw std::invalid_argument("dominant_weights_below requires a dominant weight");
  // Every dominant weight below a dominant top is reachable by subtracting
  // positive roots through dominant weights (Stembridge).
  std::unordered_set<Weight, WeightHash> seen{top};
  std::vector<Weight> frontier{top};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (const auto& r : roots_) {
        Weight v = w - r.weight;
        if (v.is_dominant() && seen.insert(v).second)
          next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::int64_t, Weight>> keyed;
  keyed.reserve(seen.size());
  for (const auto& w : seen)
    keyed.emplace_back(height_scaled(w), w);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first)
      return a.first > b.first;
    return b.second < a.second;
  });
  std::vector<Weight> out;
  out.reserve(keyed.size());
  for (auto& [h, w] : keyed)
    out.push_back(std::move(w));
  return out;
}

} // namespace demkit
