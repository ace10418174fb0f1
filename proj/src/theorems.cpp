#include "demkit/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <thread>

namespace demkit {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::verified:
    return "verified";
  case Verdict::refuted:
    return "refuted";
  case Verdict::hypothesis_violated:
    return "hypothesis-violated";
  case Verdict::inconclusive:
    return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Notion n) {
  switch (n) {
  case Notion::graded_character:
    return "graded-character";
  case Notion::ungraded_character:
    return "ungraded-character";
  case Notion::dimension:
    return "dimension";
  case Notion::multiplicity_domination:
    return "multiplicity-domination";
  case Notion::coweight_pairing:
    return "coweight-pairing";
  }
  return "dimension";
}

int exit_code(Verdict v) {
  switch (v) {
  case Verdict::verified:
    return 0;
  case Verdict::refuted:
    return 1;
  case Verdict::hypothesis_violated:
    return 3;
  case Verdict::inconclusive:
    return 4;
  }
  return 4;
}

Json Certificate::to_json(bool with_timing) const {
  Json out;
  out["claim_id"] = claim_id;
  out["system"] = system;
  out["inputs"] = inputs;
  out["verdict"] = to_string(verdict);
  out["notion"] = to_string(notion);
  if (!note.empty())
    out["note"] = note;
  out["lhs"] = lhs;
  out["rhs"] = rhs;
  if (!witness.is_null())
    out["witness"] = witness;
  if (!details.empty())
    out["details"] = details;
  if (with_timing)
    out["elapsed"] = elapsed_ms;
  return out;
}

Json ScanSummary::to_json() const {
  Json out;
  out["total"] = total;
  out["verified"] = verified;
  out["refuted"] = refuted;
  out["hypothesis_violated"] = hypothesis_violated;
  out["inconclusive"] = inconclusive;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
  explicit Stopwatch(Certificate& c) : cert_(c), start_(Clock::now()) {}
  ~Stopwatch() {
    cert_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

private:
  Certificate& cert_;
  Clock::time_point start_;
};

Certificate make(const RootSystemPtr& rs, std::string claim, Notion notion) {
  Certificate c;
  c.claim_id = std::move(claim);
  c.system = rs->name();
  c.notion = notion;
  return c;
}

Certificate& violated(Certificate& c, std::string why) {
  c.verdict = Verdict::hypothesis_violated;
  c.note = std::move(why);
  return c;
}

bool dominant_of_rank(const RootSystem& rs, const Weight& w) {
  return w.rank() == static_cast<std::size_t>(rs.rank()) && w.is_dominant();
}

Json root_json(const RootSystem& rs, std::size_t idx) { return Json(rs.positive_roots()[idx].simple_coords); }

Json character_side(const Character& x) {
  Json out;
  out["character"] = character_json(x);
  out["dimension"] = x.dimension().get_str();
  return out;
}

Json decomposition_side(const Decomposition& d, const mpz_class& dim) {
  Json out;
  out["decomposition"] = decomposition_json(d);
  out["dimension"] = dim.get_str();
  return out;
}

// The first term in canonical order where x and y disagree.
template <class X>
Json first_difference(const X& x, const X& y) {
  const X diff = x - y;
  if (diff.empty())
    return nullptr;
  const auto key = diff.sorted_terms().front().first;
  Json w;
  w["weight"] = weight_json(detail::key_weight(key));
  w["grade"] = detail::key_grade(key);
  w["lhs"] = x.coefficient(key).get_str();
  w["rhs"] = y.coefficient(key).get_str();
  return w;
}

void settle_equality(Certificate& c, const Character& lhs, const Character& rhs) {
  c.lhs = character_side(lhs);
  c.rhs = character_side(rhs);
  c.witness = first_difference(lhs, rhs);
  c.verdict = c.witness.is_null() ? Verdict::verified : Verdict::refuted;
}

void settle_domination(Certificate& c, const Character& source, const Character& target) {
  const SurjectionCheck sc = surjection_exists(source, target);
  c.lhs = decomposition_side(sc.source, source.dimension());
  c.rhs = decomposition_side(sc.target, target.dimension());
  if (sc.exists) {
    c.verdict = Verdict::verified;
  } else {
    c.verdict = Verdict::refuted;
    c.witness = Json::object();
    c.witness["weight"] = weight_json(*sc.witness);
    c.witness["source"] = sc.source.multiplicity(*sc.witness).get_str();
    c.witness["target"] = sc.target.multiplicity(*sc.witness).get_str();
  }
}

Character demazure_collapsed(const RootSystemPtr& rs, int level, const Weight& lambda) {
  return collapse(demazure_character(rs, level, lambda));
}

Json weights_json(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws)
    out.push_back(weight_json(w));
  return out;
}

bool node_in_range(const RootSystem& rs, int node) { return node >= 1 && node <= rs.rank(); }

} // namespace

Certificate verify_demprop(const RootSystemPtr& rs, int level, const std::vector<Weight>& parts, const Weight& lambda) {
  Certificate c = make(rs, "demprop", Notion::ungraded_character);
  Stopwatch sw(c);
  c.inputs["level"] = level;
  c.inputs["parts"] = weights_json(parts);
  c.inputs["lambda"] = weight_json(lambda);

  if (level < 1)
    return violated(c, "level must be at least 1");
  if (!dominant_of_rank(*rs, lambda))
    return violated(c, "lambda is not a dominant weight of " + rs->name());
  if (!rs->in_level_alcove(lambda, level))
    return violated(c, "lambda(h_theta) exceeds the level");
  Weight mu = rs->zero();
  for (const auto& p : parts) {
    if (!dominant_of_rank(*rs, p) || !rs->in_gamma(p))
      return violated(c, "part " + p.to_string() + " is not in Gamma");
    mu += p;
  }

  const Character lhs = demazure_collapsed(rs, level, level * mu + lambda);
  Character rhs = weyl_character(rs, lambda);
  mpz_class dim_product = weyl_dimension(*rs, lambda);
  for (const auto& p : parts) {
    Character f = demazure_collapsed(rs, level, level * p);
    dim_product *= f.dimension();
    rhs = rhs * f;
  }
  settle_equality(c, lhs, rhs);
  c.details["dimension_lhs"] = lhs.dimension().get_str();
  c.details["dimension_product"] = dim_product.get_str();
  if (c.verdict == Verdict::verified && lhs.dimension() != dim_product) {
    c.verdict = Verdict::refuted;
    c.witness = Json::object();
    c.witness["dimension_lhs"] = lhs.dimension().get_str();
    c.witness["dimension_product"] = dim_product.get_str();
  }
  return c;
}

Certificate verify_mapsdem(const RootSystemPtr& rs, int level, const std::vector<MapsdemPart>& parts,
                           const Weight& lambda) {
  Certificate c = make(rs, "mapsdem", Notion::dimension);
  Stopwatch sw(c);
  c.inputs["level"] = level;
  Json pj = Json::array();
  for (const auto& p : parts) {
    Json e;
    e["level"] = p.level;
    e["mu"] = weight_json(p.mu);
    pj.push_back(e);
  }
  c.inputs["parts"] = pj;
  c.inputs["lambda"] = weight_json(lambda);

  if (level < 1)
    return violated(c, "level must be at least 1");
  if (!dominant_of_rank(*rs, lambda))
    return violated(c, "lambda is not a dominant weight of " + rs->name());
  Weight weighted = rs->zero();
  for (const auto& p : parts) {
    if (p.level < 1)
      return violated(c, "part levels must be at least 1");
    if (!dominant_of_rank(*rs, p.mu) || !rs->in_gamma(p.mu))
      return violated(c, "part " + p.mu.to_string() + " is not in Gamma");
    weighted += p.level * p.mu;
  }
  Weight mu = rs->zero();
  for (int i = 0; i < rs->rank(); ++i) {
    if (weighted[i] % level != 0)
      return violated(c, "sum p_j mu_j is not divisible by the level");
    mu[i] = weighted[i] / level;
  }
  if (!rs->in_gamma(mu))
    return violated(c, "mu = " + mu.to_string() + " is not in Gamma");
  c.details["mu"] = weight_json(mu);
  for (std::size_t a = 0; a < rs->positive_roots().size(); ++a) {
    std::int64_t sum = 0;
    for (const auto& p : parts)
      sum += rs->pairing(p.mu, a);
    if (rs->pairing(mu, a) < sum) {
      c.details["failing_root"] = root_json(*rs, a);
      return violated(c, "mu(h_alpha) < sum_j mu_j(h_alpha) at the reported root");
    }
  }

  const bool iso = rs->in_level_alcove(lambda, level) &&
                   std::all_of(parts.begin(), parts.end(), [level](const MapsdemPart& p) { return p.level == level; });
  const Character lhs = demazure_collapsed(rs, level, level * mu + lambda);

  if (iso) {
    c.claim_id = "mapsdem-isomorphism";
    c.notion = Notion::ungraded_character;
    Character rhs = weyl_character(rs, lambda);
    for (const auto& p : parts)
      rhs = rhs * demazure_collapsed(rs, level, level * p.mu);
    settle_equality(c, lhs, rhs);
    const bool forward = surjection_exists(lhs, rhs).exists;
    const bool backward = surjection_exists(rhs, lhs).exists;
    c.details["domination_forward"] = forward;
    c.details["domination_backward"] = backward;
    if (c.verdict == Verdict::verified && !(forward && backward))
      c.verdict = Verdict::refuted;
    return c;
  }

  c.claim_id = "mapsdem-surjection";
  mpz_class rhs = demazure_character(rs, level, lambda).dimension();
  for (const auto& p : parts)
    rhs *= demazure_character(rs, p.level, p.level * p.mu).dimension();
  c.lhs = Json::object({{"dimension", lhs.dimension().get_str()}});
  c.rhs = Json::object({{"dimension", rhs.get_str()}});
  c.note = "dimension inequality dim D(level, level mu + lambda) >= product of factor dimensions";
  if (lhs.dimension() >= rhs) {
    c.verdict = Verdict::verified;
  } else {
    c.verdict = Verdict::refuted;
    c.witness = Json::object({{"dimension_lhs", lhs.dimension().get_str()}, {"dimension_rhs", rhs.get_str()}});
  }
  return c;
}

Certificate verify_krdecom(const RootSystemPtr& rs, int level, const std::vector<int>& s, const Weight& lambda) {
  Certificate c = make(rs, "krdecom", Notion::ungraded_character);
  Stopwatch sw(c);
  c.inputs["level"] = level;
  c.inputs["s"] = s;
  c.inputs["lambda"] = weight_json(lambda);

  if (level < 1)
    return violated(c, "level must be at least 1");
  if (s.size() != static_cast<std::size_t>(rs->rank()) || std::any_of(s.begin(), s.end(), [](int x) { return x < 0; }))
    return violated(c, "s must have one non-negative entry per node");
  if (!dominant_of_rank(*rs, lambda))
    return violated(c, "lambda is not a dominant weight of " + rs->name());
  if (!rs->in_level_alcove(lambda, level))
    return violated(c, "lambda(h_theta) exceeds the level");

  Weight mu = rs->zero();
  for (int i = 1; i <= rs->rank(); ++i)
    mu += (rs->d_simple(i) * s[i - 1]) * rs->fundamental_weight(i);
  c.details["mu"] = weight_json(mu);

  const Character lhs = demazure_collapsed(rs, level, level * mu + lambda);
  Character rhs = weyl_character(rs, lambda);
  for (int i = 1; i <= rs->rank(); ++i)
    if (s[i - 1] > 0)
      rhs = rhs * power(collapse(kr_character(rs, level, i)), static_cast<unsigned>(s[i - 1]));
  settle_equality(c, lhs, rhs);
  return c;
}

Certificate verify_ev0(const RootSystemPtr& rs, int level, const Weight& lambda) {
  Certificate c = make(rs, "ev0", Notion::graded_character);
  Stopwatch sw(c);
  c.inputs["level"] = level;
  c.inputs["lambda"] = weight_json(lambda);

  if (level < 0)
    return violated(c, "level must be non-negative");
  if (!dominant_of_rank(*rs, lambda))
    return violated(c, "lambda is not a dominant weight of " + rs->name());
  if (level == 0 && !lambda.is_zero())
    return violated(c, "at level 0 only lambda = 0 is admissible");

  const GradedCharacter ch = demazure_character(rs, level, lambda);
  const auto series = graded_dimension(ch);
  if (rs->in_level_alcove(lambda, level)) {
    const GradedCharacter expected = at_grade(weyl_character(rs, lambda), 0);
    c.lhs = Json::object({{"character", character_json(ch)}, {"graded_dimension", graded_dimension_json(series)}});
    c.rhs = Json::object({{"character", character_json(expected)},
                          {"graded_dimension", graded_dimension_json(graded_dimension(expected))}});
    c.witness = first_difference(ch, expected);
    c.verdict = c.witness.is_null() ? Verdict::verified : Verdict::refuted;
    return c;
  }

  // converse: above the level some positive grade must be occupied
  c.claim_id = "ev0-converse";
  c.lhs = Json::object({{"graded_dimension", graded_dimension_json(series)}});
  c.rhs = Json::object({{"positive_grades", "nonempty"}});
  const bool positive = !series.empty() && series.rbegin()->first > 0;
  if (positive) {
    c.verdict = Verdict::verified;
  } else {
    c.verdict = Verdict::refuted;
    c.witness = Json::object({{"grade", 1}, {"lhs", "0"}});
  }
  return c;
}

std::vector<int> minuscule_table(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.d_simple(i) * rs.pairing_theta(rs.fundamental_weight(i)) <= 1)
      out.push_back(i);
  return out;
}

std::vector<int> reference_minuscule_table(char series, int rank) {
  std::vector<int> out;
  switch (series) {
  case 'A':
    for (int i = 1; i <= rank; ++i)
      out.push_back(i);
    break;
  case 'B':
    out = {1};
    break;
  case 'C':
    out = {rank};
    break;
  case 'D':
    out = {1, rank - 1, rank};
    break;
  case 'E':
    if (rank == 6)
      out = {1, 6};
    else if (rank == 7)
      out = {7};
    break;
  default:
    break;
  }
  return out;
}

Certificate verify_minuscule(const RootSystemPtr& rs) {
  Certificate c = make(rs, "minuscule", Notion::coweight_pairing);
  Stopwatch sw(c);
  const auto computed = minuscule_table(*rs);
  const auto reference = reference_minuscule_table(rs->series(), rs->rank());
  c.lhs = Json::object({{"nodes", computed}});
  c.rhs = Json::object({{"nodes", reference}});
  Json pairings = Json::array();
  for (int i = 1; i <= rs->rank(); ++i)
    pairings.push_back(rs->d_simple(i) * rs->pairing_theta(rs->fundamental_weight(i)));
  c.details["d_i_omega_i_theta"] = pairings;
  if (computed == reference) {
    c.verdict = Verdict::verified;
  } else {
    c.verdict = Verdict::refuted;
    for (int i = 1; i <= rs->rank(); ++i) {
      const bool a = std::find(computed.begin(), computed.end(), i) != computed.end();
      const bool b = std::find(reference.begin(), reference.end(), i) != reference.end();
      if (a != b) {
        c.witness = Json::object({{"node", i}, {"computed", a}, {"reference", b}});
        break;
      }
    }
  }
  return c;
}

Certificate verify_2fold(const RootSystemPtr& rs, int node, int level, const Weight& lambda, const Weight& mu1,
                         const Weight& mu2) {
  Certificate c = make(rs, "twofold", Notion::multiplicity_domination);
  Stopwatch sw(c);
  c.inputs["node"] = node;
  c.inputs["level"] = level;
  c.inputs["lambda"] = weight_json(lambda);
  c.inputs["mu1"] = weight_json(mu1);
  c.inputs["mu2"] = weight_json(mu2);

  if (!node_in_range(*rs, node))
    return violated(c, "node out of range");
  if (rs->d_simple(node) * rs->pairing_theta(rs->fundamental_weight(node)) > 1)
    return violated(c, "d_i omega_i(h_theta) > 1 for the chosen node");
  if (level < 1)
    return violated(c, "level must be at least 1");
  if (!dominant_of_rank(*rs, lambda) || !dominant_of_rank(*rs, mu1) || !dominant_of_rank(*rs, mu2))
    return violated(c, "lambda, mu1 and mu2 must be dominant weights of " + rs->name());
  if (!rs->in_level_alcove(lambda, level))
    return violated(c, "lambda(h_theta) exceeds the level");
  const Weight top = (rs->d_simple(node) * level) * rs->fundamental_weight(node);
  if (!(top + lambda == mu1 + mu2))
    return violated(c, "d_i level omega_i + lambda != mu1 + mu2");
  for (std::size_t a = 0; a < rs->positive_roots().size(); ++a) {
    const auto lo = std::min(rs->pairing(mu1, a), rs->pairing(mu2, a));
    const auto hi = std::min(rs->pairing(top, a), rs->pairing(lambda, a));
    if (lo > hi) {
      c.details["failing_root"] = root_json(*rs, a);
      return violated(c, "min(mu1, mu2)(h_alpha) > min(d_i level omega_i, lambda)(h_alpha) at the reported root");
    }
  }

  c.note = "g-level necessary condition of the graded surjection";
  settle_domination(c, weyl_character(rs, top) * weyl_character(rs, lambda),
                    weyl_character(rs, mu1) * weyl_character(rs, mu2));
  return c;
}

int twofold_corollary_threshold(const RootSystem& rs, int j) {
  const int n = rs.rank();
  switch (rs.series()) {
  case 'B':
    return j != 1 ? 2 : 1;
  case 'C':
    return j != n ? 2 : 1;
  case 'D':
    return (j != 1 && j != n - 1 && j != n) ? 2 : 1;
  case 'E':
    if (n == 6) {
      if (j == 2 || j == 3 || j == 5)
        return 2;
      if (j == 4)
        return 3;
    } else if (n == 7) {
      if (j == 1 || j == 2 || j == 6)
        return 2;
      if (j == 3 || j == 5)
        return 3;
      if (j == 4)
        return 4;
    }
    return 1;
  default:
    return 1;
  }
}

Certificate verify_2fold_corollary(const RootSystemPtr& rs, int node, int level, int j, int m, const Weight& mu1,
                                   const Weight& mu2) {
  Json inputs;
  inputs["node"] = node;
  inputs["level"] = level;
  inputs["j"] = j;
  inputs["m"] = m;
  inputs["mu1"] = weight_json(mu1);
  inputs["mu2"] = weight_json(mu2);

  auto reject = [&](const std::string& why) {
    Certificate c = make(rs, "twofold-corollary", Notion::multiplicity_domination);
    c.inputs = inputs;
    return violated(c, why);
  };
  if (!node_in_range(*rs, j))
    return reject("node j out of range");
  if (m < 1 || level < m)
    return reject("need level >= m >= 1");
  const int t = twofold_corollary_threshold(*rs, j);
  if (level < t * m)
    return reject("type threshold level >= " + std::to_string(t) + " m fails");

  const Weight lambda = (rs->d_simple(j) * m) * rs->fundamental_weight(j);
  if (!rs->in_level_alcove(lambda, level)) {
    Certificate c = make(rs, "twofold-corollary", Notion::multiplicity_domination);
    c.inputs = inputs;
    c.verdict = Verdict::refuted;
    c.note = "d_j m omega_j(h_theta) <= level fails although the thresholds hold";
    c.witness = Json::object({{"pairing", rs->pairing_theta(lambda)}, {"level", level}});
    return c;
  }
  Certificate c = verify_2fold(rs, node, level, lambda, mu1, mu2);
  c.claim_id = "twofold-corollary";
  inputs["lambda"] = weight_json(lambda);
  c.inputs = inputs;
  return c;
}

Certificate verify_genschurpos(const RootSystemPtr& rs, int node, int k, int level, int m, const Weight& lambda,
                               const Weight& mu) {
  Certificate c = make(rs, "genschurpos", Notion::multiplicity_domination);
  Stopwatch sw(c);
  c.inputs["node"] = node;
  c.inputs["k"] = k;
  c.inputs["level"] = level;
  c.inputs["m"] = m;
  c.inputs["lambda"] = weight_json(lambda);
  c.inputs["mu"] = weight_json(mu);

  if (!node_in_range(*rs, node))
    return violated(c, "node out of range");
  if (k < 0 || m < 1 || level < m)
    return violated(c, "need k >= 0 and level >= m >= 1");
  if (!dominant_of_rank(*rs, lambda) || !dominant_of_rank(*rs, mu))
    return violated(c, "lambda and mu must be dominant weights of " + rs->name());
  if (!rs->in_level_alcove(mu, m))
    return violated(c, "mu(h_theta) exceeds m");
  const Weight omega = rs->fundamental_weight(node);
  const int d = rs->d_simple(node);
  const Weight target_weight = (k * d * level) * omega + lambda;
  const Weight source_weight = (k * d * m) * omega + mu;
  if (!(target_weight == source_weight))
    return violated(c, "k d_i level omega_i + lambda != k d_i m omega_i + mu");
  if (!rs->in_level_alcove(lambda, level)) {
    c.verdict = Verdict::refuted;
    c.note = "lambda(h_theta) <= level is forced by the hypotheses but fails";
    c.witness = Json::object({{"pairing", rs->pairing_theta(lambda)}, {"level", level}});
    return c;
  }

  c.note = "g-level necessary condition of the graded surjection";
  settle_domination(c, demazure_collapsed(rs, m, source_weight), demazure_collapsed(rs, level, target_weight));
  return c;
}

Certificate verify_stabilization(const RootSystemPtr& rs, int level, const Weight& lambda, int max_grade, int n_max) {
  Certificate c = make(rs, "stabilization", Notion::graded_character);
  Stopwatch sw(c);
  c.inputs["level"] = level;
  c.inputs["lambda"] = weight_json(lambda);
  c.inputs["max_grade"] = max_grade;
  c.inputs["n_max"] = n_max;

  if (level < 1)
    return violated(c, "level must be at least 1");
  if (max_grade < 0)
    return violated(c, "max grade must be non-negative");
  if (n_max < 2)
    return violated(c, "n_max must be at least 2");
  if (!dominant_of_rank(*rs, lambda) || !rs->in_level_alcove(lambda, level))
    return violated(c, "lambda must be dominant with lambda(h_theta) <= level");

  std::vector<GradedCharacter> truncations;
  Json per_n = Json::array();
  for (int n = 1; n <= n_max; ++n) {
    const DemazureModule module = demazure_module(rs, level, (n * level) * rs->theta().weight + lambda);
    if (!(module.highest.finite == lambda))
      throw std::logic_error("Demazure module of N level theta + lambda is not a submodule of V(level Lambda_0 + lambda)");
    truncations.push_back(truncate(depth_graded(module), max_grade));
    per_n.push_back(graded_dimension_json(graded_dimension(truncations.back())));
  }
  c.details["truncated_graded_dimensions"] = per_n;

  int n0 = n_max;
  while (n0 > 1 && truncations[n0 - 2] == truncations.back())
    --n0;
  c.details["stable_from"] = n0;

  const GradedCharacter oracle = affine_irreducible_character_truncated(rs, level, lambda, max_grade);
  const GradedCharacter& stable = truncations.back();
  c.lhs = Json::object(
      {{"character", character_json(stable)}, {"graded_dimension", graded_dimension_json(graded_dimension(stable))}});
  c.rhs = Json::object(
      {{"character", character_json(oracle)}, {"graded_dimension", graded_dimension_json(graded_dimension(oracle))}});

  if (n0 == n_max) {
    c.verdict = Verdict::inconclusive;
    c.note = "truncations have not stabilized by n_max";
    return c;
  }
  c.witness = first_difference(stable, oracle);
  c.verdict = c.witness.is_null() ? Verdict::verified : Verdict::refuted;
  return c;
}

namespace {

struct ScanTuple {
  Weight lambda1, lambda2, mu1, mu2;
};

std::vector<Weight> weight_box(int rank, int bound) {
  std::vector<Weight> out;
  Weight w(static_cast<std::size_t>(rank));
  for (;;) {
    out.push_back(w);
    int i = rank - 1;
    while (i >= 0 && w[i] == bound) {
      w[i] = 0;
      --i;
    }
    if (i < 0)
      break;
    ++w[i];
  }
  return out;
}

const Decomposition& product_decomposition(const RootSystemPtr& rs, const Weight& a, const Weight& b) {
  thread_local std::map<std::pair<std::string, std::pair<Weight, Weight>>, Decomposition> memo;
  auto key = std::make_pair(rs->name(), b < a ? std::make_pair(b, a) : std::make_pair(a, b));
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo.emplace(key, tensor_decompose(weyl_character(rs, a) * weyl_character(rs, b))).first;
  return it->second;
}

Certificate scan_one(const RootSystemPtr& rs, const ScanTuple& t) {
  Certificate c = make(rs, "schur-positivity", Notion::multiplicity_domination);
  Stopwatch sw(c);
  c.inputs["lambda1"] = weight_json(t.lambda1);
  c.inputs["lambda2"] = weight_json(t.lambda2);
  c.inputs["mu1"] = weight_json(t.mu1);
  c.inputs["mu2"] = weight_json(t.mu2);
  const Decomposition& source = product_decomposition(rs, t.mu1, t.mu2);
  const Decomposition& target = product_decomposition(rs, t.lambda1, t.lambda2);
  const SurjectionCheck sc = surjection_exists(source, target);
  const mpz_class dim_source = weyl_dimension(*rs, t.mu1) * weyl_dimension(*rs, t.mu2);
  const mpz_class dim_target = weyl_dimension(*rs, t.lambda1) * weyl_dimension(*rs, t.lambda2);
  c.lhs = decomposition_side(source, dim_source);
  c.rhs = decomposition_side(target, dim_target);
  if (sc.exists) {
    c.verdict = Verdict::verified;
  } else {
    c.verdict = Verdict::refuted;
    c.witness = Json::object();
    c.witness["weight"] = weight_json(*sc.witness);
    c.witness["source"] = source.multiplicity(*sc.witness).get_str();
    c.witness["target"] = target.multiplicity(*sc.witness).get_str();
  }
  return c;
}

} // namespace

ScanResult schur_scan(const RootSystemPtr& rs, int height_bound, unsigned jobs) {
  if (height_bound < 0)
    throw std::invalid_argument("height bound must be non-negative");
  const auto box = weight_box(rs->rank(), height_bound);
  std::vector<ScanTuple> tuples;
  for (const Weight& l1 : box)
    for (const Weight& l2 : box) {
      const Weight sum = l1 + l2;
      for (const Weight& m1 : box) {
        const Weight m2 = sum - m1;
        bool inside = true;
        for (auto x : m2)
          inside = inside && x >= 0 && x <= height_bound;
        if (inside && conjecture_conditions(*rs, l1, l2, m1, m2))
          tuples.push_back({l1, l2, m1, m2});
      }
    }

  ScanResult result;
  result.certificates.resize(tuples.size());
  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tuples.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < tuples.size(); i = next++)
        result.certificates[i] = scan_one(rs, tuples[i]);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(worker, j);
    for (auto& th : pool)
      th.join();
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);

  for (const auto& c : result.certificates) {
    ++result.summary.total;
    switch (c.verdict) {
    case Verdict::verified:
      ++result.summary.verified;
      break;
    case Verdict::refuted:
      ++result.summary.refuted;
      break;
    case Verdict::hypothesis_violated:
      ++result.summary.hypothesis_violated;
      break;
    case Verdict::inconclusive:
      ++result.summary.inconclusive;
      break;
    }
  }
  return result;
}

} // namespace demkit
