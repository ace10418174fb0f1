// Freudenthal's multiplicity recursion for V(level Lambda_0 + lambda), run
// depth by depth. Every quantity is multiplied by the integer scale of the
// invariant form so the recursion stays in exact integer arithmetic.
//
// For mu = nu + level Lambda_0 - k delta (relative to the highest weight):
//
//   (|Lambda+rho^|^2 - |mu+rho^|^2) mult(mu)
//       = 2 sum_{alpha > 0} sum_{j >= 1} mult_alpha (mu + j alpha | alpha) mult(mu + j alpha)
//
// with positive affine roots beta (beta > 0), beta + k' delta (beta in R,
// k' >= 1, multiplicity 1) and k' delta (k' >= 1, multiplicity rank).

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "demkit/affine.hpp"

namespace demkit {

namespace {

using DepthTable = std::unordered_map<Weight, mpz_class, WeightHash>;

} // namespace

GradedCharacter affine_irreducible_character_truncated(const RootSystemPtr& rsp, int level, const Weight& lambda,
                                                       int max_grade) {
  const RootSystem& rs = *rsp;
  if (level < 1)
    throw std::invalid_argument("affine character needs level >= 1");
  if (max_grade < 0)
    throw std::invalid_argument("max grade must be non-negative");
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()) || !lambda.is_dominant() ||
      !rs.in_level_alcove(lambda, level))
    throw std::invalid_argument("level " + std::to_string(level) + " Lambda_0 + " + lambda.to_string() +
                                " is not dominant for the affine algebra");

  const std::int64_t scale = rs.form_scale();
  const Weight rho = rs.rho();
  const Weight& theta = rs.theta().weight;
  const std::int64_t top_norm = rs.form(lambda + rho, lambda + rho);
  const std::int64_t lambda_norm = rs.form(lambda, lambda);
  const std::int64_t shifted_level = level + rs.dual_coxeter_number();
  const auto roots = rs.positive_roots();

  std::vector<DepthTable> tables(max_grade + 1);
  auto lookup = [&](int depth, const Weight& w) -> const mpz_class* {
    const auto& t = tables[depth];
    auto it = t.find(rs.dominant_representative(w));
    return it == t.end() ? nullptr : &it->second;
  };

  GradedCharacter out(rsp);
  for (int k = 0; k <= max_grade; ++k) {
    // weights at depth k satisfy nu <= lambda + k theta and |nu|^2 <= |lambda|^2 + 2 k level
    Weight top = lambda + k * theta;
    const std::int64_t bound = lambda_norm + 2 * static_cast<std::int64_t>(k) * level * scale;
    DepthTable& table = tables[k];

    for (const Weight& nu : rs.dominant_weights_below(top)) {
      if (rs.form(nu, nu) > bound)
        continue;
      if (k == 0 && nu == lambda) {
        table.emplace(nu, 1);
        continue;
      }
      const std::int64_t denom =
          top_norm - rs.form(nu + rho, nu + rho) + 2 * static_cast<std::int64_t>(k) * scale * shifted_level;
      if (denom <= 0)
        continue;

      mpz_class sum = 0;

      // real roots beta + 0 delta, beta > 0: same depth, strictly higher finite part
      for (const auto& r : roots) {
        Weight cur = nu;
        for (int j = 1;; ++j) {
          cur += r.weight;
          const std::int64_t along = rs.form(cur, r.weight);
          if (along > 0 && rs.form(cur, cur) > bound)
            break;
          if (const mpz_class* m = lookup(k, cur))
            sum += *m * along;
        }
      }

      for (int kp = 1; kp <= k; ++kp) {
        // real roots +-beta + kp delta
        for (const auto& r : roots)
          for (int sign : {1, -1}) {
            Weight step = sign * r.weight;
            Weight cur = nu;
            for (int j = 1; j * kp <= k; ++j) {
              cur += step;
              if (const mpz_class* m = lookup(k - j * kp, cur))
                sum += *m * (rs.form(cur, step) + static_cast<std::int64_t>(kp) * level * scale);
            }
          }
        // imaginary roots kp delta with multiplicity rank
        for (int j = 1; j * kp <= k; ++j)
          if (const mpz_class* m = lookup(k - j * kp, nu))
            sum += *m * (static_cast<std::int64_t>(rs.rank()) * kp * level * scale);
      }

      mpz_class num = 2 * sum;
      if (num == 0)
        continue;
      if (!mpz_divisible_p(num.get_mpz_t(), mpz_class(denom).get_mpz_t()))
        throw std::logic_error("affine Freudenthal recursion produced a non-integral multiplicity");
      mpz_class mult = num / denom;
      if (mult < 0)
        throw std::logic_error("affine Freudenthal recursion produced a negative multiplicity");
      table.emplace(nu, mult);
    }

    for (const auto& [nu, mult] : table)
      for (const Weight& w : rs.weyl_orbit(nu))
        out.accumulate(GradedWeight{w, k}, mult);
  }
  return out;
}

} // namespace demkit
