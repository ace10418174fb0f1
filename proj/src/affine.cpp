#include "demkit/affine.hpp"

#include <stdexcept>
#include <string>
#include <type_traits>

namespace demkit {

std::int64_t affine_pairing(const RootSystem& rs, const AffineWeight& w, int node) {
  if (node < 0 || node > rs.rank())
    throw std::out_of_range("affine node " + std::to_string(node) + " out of range for " + rs.name());
  if (node == 0)
    return w.level - rs.pairing_theta(w.finite);
  return w.finite[node - 1];
}

bool is_affine_dominant(const RootSystem& rs, const AffineWeight& w) {
  for (int node = 0; node <= rs.rank(); ++node)
    if (affine_pairing(rs, w, node) < 0)
      return false;
  return true;
}

AffineWeight affine_reflect(const RootSystem& rs, const AffineWeight& w, int node) {
  const std::int64_t p = affine_pairing(rs, w, node);
  AffineWeight out = w;
  if (p == 0)
    return out;
  if (node == 0) {
    // alpha_0 = delta - theta
    out.finite += static_cast<Weight::value_type>(p) * rs.theta().weight;
    out.delta -= static_cast<int>(p);
  } else {
    out.finite -= static_cast<Weight::value_type>(p) * rs.simple_root(node);
  }
  return out;
}

Straightening straighten(const RootSystem& rs, const AffineWeight& nu, std::size_t step_cap) {
  if (nu.level < 1)
    throw std::invalid_argument("straightening needs level >= 1, got " + std::to_string(nu.level));
  std::vector<int> reversed;
  AffineWeight cur = nu;
  for (;;) {
    int node = -1;
    for (int i = 0; i <= rs.rank(); ++i)
      if (affine_pairing(rs, cur, i) < 0) {
        node = i;
        break;
      }
    if (node < 0)
      break;
    if (reversed.size() >= step_cap)
      throw std::logic_error("straightening exceeded the step cap of " + std::to_string(step_cap));
    cur = affine_reflect(rs, cur, node);
    reversed.push_back(node);
  }
  Straightening out{cur, {}};
  out.word.letters.assign(reversed.rbegin(), reversed.rend());
  return out;
}

namespace {

// Adds D_i(c e^{key}) into out. `down` and `gdown` describe subtracting alpha_i.
template <class Out>
void expand_term(Out& out, const Weight& w, int g, const mpz_class& c, std::int64_t k, const Weight& down,
                 int gdown) {
  using key_type = typename Out::key_type;
  auto make_key = [](const Weight& wt, int grade) {
    if constexpr (std::is_same_v<key_type, GradedWeight>)
      return GradedWeight{wt, grade};
    else
      return wt;
  };
  if (k >= 0) {
    Weight cur = w;
    int grade = g;
    for (std::int64_t j = 0; j <= k; ++j) {
      out.accumulate(make_key(cur, grade), c);
      cur += down;
      grade += gdown;
    }
  } else if (k <= -2) {
    Weight cur = w;
    int grade = g;
    mpz_class neg = -c;
    for (std::int64_t j = 1; j <= -k - 1; ++j) {
      cur -= down;
      grade -= gdown;
      out.accumulate(make_key(cur, grade), neg);
    }
  }
}

} // namespace

LeveledCharacter demazure_operator(const RootSystem& rs, int node, const LeveledCharacter& x) {
  if (node < 0 || node > rs.rank())
    throw std::out_of_range("affine node " + std::to_string(node) + " out of range for " + rs.name());
  Weight down = node == 0 ? rs.theta().weight : -rs.simple_root(node);
  const int gdown = node == 0 ? -1 : 0;
  LeveledCharacter out{GradedCharacter(x.terms.system()), x.level};
  for (const auto& [key, c] : x.terms.terms()) {
    const std::int64_t k = node == 0 ? x.level - rs.pairing_theta(key.weight) : key.weight[node - 1];
    expand_term(out.terms, key.weight, key.grade, c, k, down, gdown);
  }
  return out;
}

Character demazure_operator(const RootSystem& rs, int node, const Character& x) {
  if (node < 1 || node > rs.rank())
    throw std::out_of_range("finite node " + std::to_string(node) + " out of range for " + rs.name());
  Weight down = -rs.simple_root(node);
  Character out(x.system());
  for (const auto& [w, c] : x.terms())
    expand_term(out, w, 0, c, w[node - 1], down, 0);
  return out;
}

DemazureModule demazure_module(const RootSystemPtr& rs, int level, const Weight& lambda) {
  if (level < 1)
    throw std::invalid_argument("Demazure module needs level >= 1");
  if (lambda.rank() != static_cast<std::size_t>(rs->rank()) || !lambda.is_dominant())
    throw std::invalid_argument("D(level, lambda) needs a dominant weight of rank " + std::to_string(rs->rank()) +
                                ", got " + lambda.to_string());
  AffineWeight nu{rs->antidominant_representative(lambda), level, 0};
  Straightening st = straighten(*rs, nu);

  LeveledCharacter x{GradedCharacter::monomial(rs, GradedWeight{st.dominant.finite, st.dominant.delta}), level};
  for (int node : st.word.letters)
    x = demazure_operator(*rs, node, x);

  for (const auto& [key, c] : x.terms.terms())
    if (key.grade < 0 || c < 0)
      throw std::logic_error("Demazure character of " + lambda.to_string() + " at level " + std::to_string(level) +
                             " has a negative grade or coefficient");
  return DemazureModule{std::move(x.terms), st.dominant, std::move(st.word)};
}

GradedCharacter demazure_character(const RootSystemPtr& rs, int level, const Weight& lambda) {
  if (level == 0) {
    if (!lambda.is_zero())
      throw std::invalid_argument("at level 0 only lambda = 0 is admissible");
    return unit_graded_character(rs);
  }
  return demazure_module(rs, level, lambda).character;
}

GradedCharacter depth_graded(const DemazureModule& module) {
  GradedCharacter out(module.character.system());
  for (const auto& [key, c] : module.character.terms())
    out.accumulate(GradedWeight{key.weight, module.highest.delta - key.grade}, c);
  return out;
}

GradedCharacter kr_character(const RootSystemPtr& rs, int level, int node) {
  const int d = rs->d_simple(node);
  Weight lambda = (d * level) * rs->fundamental_weight(node);
  return demazure_character(rs, level, lambda);
}

std::vector<RelationDescriptor> presentation(const RootSystem& rs, int level, const Weight& lambda) {
  if (level < 1)
    throw std::invalid_argument("presentation needs level >= 1");
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()) || !lambda.is_dominant())
    throw std::invalid_argument("presentation needs a dominant weight, got " + lambda.to_string());
  std::vector<RelationDescriptor> out;
  const auto roots = rs.positive_roots();
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    RelationDescriptor r;
    r.root_index = idx;
    r.root = roots[idx].simple_coords;
    r.d = roots[idx].d;
    r.pairing = rs.pairing(lambda, idx);
    const std::int64_t block = static_cast<std::int64_t>(r.d) * level;
    if (r.pairing > 0) {
      // lambda(h_alpha) = (s - 1) d level + m with 0 < m <= d level
      r.s = (r.pairing + block - 1) / block;
      r.m = r.pairing - (r.s - 1) * block;
    }
    r.power_exponent = r.s;
    if (r.pairing > 0 && r.m < block) {
      r.nilpotency = true;
      r.nilpotency_exponent = r.s - 1;
      r.nilpotency_power = r.m + 1;
    }
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace demkit
