#include "demkit/finite.hpp"

#include "demkit/affine.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace demkit {

namespace {

DominantMultiplicities freudenthal(const RootSystem& rs, const Weight& lambda) {
  const std::vector<Weight> dominant = rs.dominant_weights_below(lambda);
  const Weight rho = rs.rho();
  const std::int64_t top = rs.form(lambda + rho, lambda + rho);
  std::unordered_map<Weight, mpz_class, WeightHash> table;
  table.reserve(dominant.size());
  DominantMultiplicities out;
  out.reserve(dominant.size());

  for (const Weight& nu : dominant) {
    mpz_class mult;
    if (nu == lambda) {
      mult = 1;
    } else {
      const std::int64_t denom = top - rs.form(nu + rho, nu + rho);
      if (denom <= 0)
        throw std::logic_error("Freudenthal denominator vanished at " + nu.to_string());
      mpz_class sum = 0;
      for (const auto& r : rs.positive_roots()) {
        Weight cur = nu;
        for (;;) {
          cur += r.weight;
          auto it = table.find(rs.dominant_representative(cur));
          if (it == table.end())
            break;
          sum += it->second * rs.form(cur, r.weight);
        }
      }
      mpz_class num = 2 * sum;
      mpz_class den(denom);
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity at " + nu.to_string());
      mult = num / den;
    }
    table.emplace(nu, mult);
    out.emplace_back(nu, std::move(mult));
  }
  return out;
}

} // namespace

std::shared_ptr<const DominantMultiplicities> weyl_dominant_multiplicities(const RootSystem& rs,
                                                                           const Weight& lambda) {
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()) || !lambda.is_dominant())
    throw std::invalid_argument("V(lambda) needs a dominant weight of rank " + std::to_string(rs.rank()) + ", got " +
                                lambda.to_string());
  thread_local std::unordered_map<std::string, std::shared_ptr<const DominantMultiplicities>> memo;
  std::string key = rs.name() + ':' + lambda.to_string();
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  if (memo.size() > 20000)
    memo.clear();
  auto value = std::make_shared<const DominantMultiplicities>(freudenthal(rs, lambda));
  memo.emplace(std::move(key), value);
  return value;
}

Character weyl_character(const RootSystemPtr& rs, const Weight& lambda) {
  auto dom = weyl_dominant_multiplicities(*rs, lambda);
  Character out(rs);
  for (const auto& [nu, mult] : *dom)
    for (const Weight& w : rs->weyl_orbit(nu))
      out.accumulate(w, mult);
  return out;
}

Character weyl_character_demazure(const RootSystemPtr& rs, const Weight& lambda) {
  if (lambda.rank() != static_cast<std::size_t>(rs->rank()) || !lambda.is_dominant())
    throw std::invalid_argument("V(lambda) needs a dominant weight, got " + lambda.to_string());
  // D_{w_0} = D_{i_1} ... D_{i_N}; the letters are already in application order
  Character x = Character::monomial(rs, lambda);
  for (int node : rs->longest_element().letters)
    x = demazure_operator(*rs, node, x);
  return x;
}

mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()) || !lambda.is_dominant())
    throw std::invalid_argument("weyl_dimension needs a dominant weight, got " + lambda.to_string());
  const Weight rho = rs.rho();
  const Weight shifted = lambda + rho;
  mpz_class num = 1, den = 1;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    num *= rs.pairing(shifted, k);
    den *= rs.pairing(rho, k);
  }
  return num / den;
}

Character reconstruct(const RootSystemPtr& rs, const Decomposition& d) {
  Character out(rs);
  for (const auto& [nu, mult] : d.entries)
    out = out + weyl_character(rs, nu).scaled(mult);
  return out;
}

Decomposition tensor_decompose(const Character& x, ExtractionOrder order) {
  const RootSystem& rs = x.root_system();
  if (!is_W_invariant(x))
    throw NotACharacter("not a character: coefficients are not W-invariant");

  std::unordered_map<Weight, mpz_class, WeightHash> remaining;
  std::vector<std::pair<std::int64_t, Weight>> schedule;
  for (const auto& [w, c] : x.terms())
    if (w.is_dominant()) {
      remaining.emplace(w, c);
      schedule.emplace_back(rs.height_scaled(w), w);
    }
  // Any weight of maximal height is maximal for the dominance order, and
  // subtracting char V(nu) only touches weights strictly below nu.
  std::sort(schedule.begin(), schedule.end(), [order](const auto& a, const auto& b) {
    if (a.first != b.first)
      return a.first > b.first;
    return order == ExtractionOrder::lexicographic_descending ? b.second < a.second : a.second < b.second;
  });

  Decomposition out;
  for (const auto& [h, nu] : schedule) {
    auto it = remaining.find(nu);
    if (it == remaining.end() || it->second == 0)
      continue;
    const mpz_class m = it->second;
    if (m < 0)
      throw NotACharacter("not a character: negative isotypic multiplicity at " + nu.to_string());
    out.entries.emplace(nu, m);
    for (const auto& [kappa, c] : *weyl_dominant_multiplicities(rs, nu)) {
      mpz_class& slot = remaining[kappa];
      slot -= m * c;
      if (slot < 0)
        throw NotACharacter("not a character: extraction of V(" + nu.to_string() +
                            ") drives the multiplicity of " + kappa.to_string() + " negative");
    }
  }
  return out;
}

SurjectionCheck surjection_exists(const Decomposition& source, const Decomposition& target) {
  SurjectionCheck out;
  out.source = source;
  out.target = target;
  out.exists = true;
  for (const auto& [nu, mult] : target.entries)
    if (mult > source.multiplicity(nu)) {
      out.exists = false;
      out.witness = nu;
      break;
    }
  return out;
}

SurjectionCheck surjection_exists(const Character& source, const Character& target) {
  return surjection_exists(tensor_decompose(source), tensor_decompose(target));
}

bool conjecture_conditions(const RootSystem& rs, const Weight& lambda1, const Weight& lambda2, const Weight& mu1,
                           const Weight& mu2) {
  for (const Weight* w : {&lambda1, &lambda2, &mu1, &mu2})
    if (w->rank() != static_cast<std::size_t>(rs.rank()) || !w->is_dominant())
      throw std::invalid_argument("conjecture conditions need dominant weights, got " + w->to_string());
  if (!(lambda1 + lambda2 == mu1 + mu2))
    return false;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    auto lo = std::min(rs.pairing(lambda1, k), rs.pairing(lambda2, k));
    auto hi = std::min(rs.pairing(mu1, k), rs.pairing(mu2, k));
    if (lo > hi)
      return false;
  }
  return true;
}

} // namespace demkit
