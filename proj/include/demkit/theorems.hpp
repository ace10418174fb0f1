#ifndef DEMKIT_THEOREMS_HPP
#define DEMKIT_THEOREMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "demkit/affine.hpp"
#include "demkit/finite.hpp"
#include "demkit/io.hpp"

namespace demkit {

enum class Verdict { verified, refuted, hypothesis_violated, inconclusive };
/// Which mathematical consequence a certificate actually checks.
enum class Notion { graded_character, ungraded_character, dimension, multiplicity_domination, coweight_pairing };

std::string to_string(Verdict v);
std::string to_string(Notion n);
/// 0 verified, 1 refuted, 3 hypothesis violated, 4 inconclusive.
int exit_code(Verdict v);

struct Certificate {
  std::string claim_id;
  std::string system;
  Json inputs = Json::object();
  Json lhs;
  Json rhs;
  Verdict verdict = Verdict::inconclusive;
  Notion notion = Notion::ungraded_character;
  /// Set on refuted certificates: where the two sides first differ.
  Json witness;
  /// Extra computed data (dimension checks, stabilization index, failing root, ...).
  Json details = Json::object();
  std::string note;
  double elapsed_ms = 0;

  Json to_json(bool with_timing = true) const;
};

/// collapse D(level, level mu + lambda) against prod_j collapse D(level, level mu_j) * char V(lambda).
Certificate verify_demprop(const RootSystemPtr& rs, int level, const std::vector<Weight>& parts, const Weight& lambda);

struct MapsdemPart {
  int level = 1;
  Weight mu;
};

/// Isomorphism clause (all part levels equal `level`, lambda in P+_level): ungraded
/// character equality plus multiplicity domination both ways. Otherwise the
/// surjection clause, checked as a dimension inequality.
Certificate verify_mapsdem(const RootSystemPtr& rs, int level, const std::vector<MapsdemPart>& parts,
                           const Weight& lambda);

/// Demazure character against products of KR characters, mu = sum d_i s_i omega_i.
Certificate verify_krdecom(const RootSystemPtr& rs, int level, const std::vector<int>& s, const Weight& lambda);

/// Grade-0 concentration of D(level, lambda) iff lambda(h_theta) <= level.
Certificate verify_ev0(const RootSystemPtr& rs, int level, const Weight& lambda);

/// Nodes i with d_i omega_i(h_theta) <= 1, computed from pairings.
std::vector<int> minuscule_table(const RootSystem& rs);
/// The classical list of such nodes by Cartan type.
std::vector<int> reference_minuscule_table(char series, int rank);
Certificate verify_minuscule(const RootSystemPtr& rs);

/// V(d_i level omega_i) (x) V(lambda) dominating V(mu1) (x) V(mu2).
Certificate verify_2fold(const RootSystemPtr& rs, int node, int level, const Weight& lambda, const Weight& mu1,
                         const Weight& mu2);

/// Smallest t such that the two-fold corollary for node j asks for level >= t m
/// (1 when nothing beyond level >= m is required).
int twofold_corollary_threshold(const RootSystem& rs, int j);
/// verify_2fold with lambda = d_j m omega_j under the type-dependent threshold on level / m.
Certificate verify_2fold_corollary(const RootSystemPtr& rs, int node, int level, int j, int m, const Weight& mu1,
                                   const Weight& mu2);

/// collapse D(m, k d_i m omega_i + mu) dominating collapse D(level, k d_i level omega_i + lambda).
Certificate verify_genschurpos(const RootSystemPtr& rs, int node, int k, int level, int m, const Weight& lambda,
                               const Weight& mu);

/// Depth-graded truncations of D(level, N level theta + lambda), N = 1..n_max,
/// against the truncated character of V(level Lambda_0 + lambda).
Certificate verify_stabilization(const RootSystemPtr& rs, int level, const Weight& lambda, int max_grade, int n_max);

struct ScanSummary {
  std::size_t total = 0;
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t hypothesis_violated = 0;
  std::size_t inconclusive = 0;

  Json to_json() const;
};

struct ScanResult {
  std::vector<Certificate> certificates; // canonical tuple order
  ScanSummary summary;
};

/// Every (lambda1, lambda2, mu1, mu2) with coordinates in [0, height_bound]
/// satisfying conjecture_conditions, checked by multiplicity domination of
/// V(mu1) (x) V(mu2) over V(lambda1) (x) V(lambda2). jobs = 0 uses the
/// hardware concurrency.
ScanResult schur_scan(const RootSystemPtr& rs, int height_bound, unsigned jobs = 0);

} // namespace demkit

#endif
