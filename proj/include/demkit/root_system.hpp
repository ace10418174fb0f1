#ifndef DEMKIT_ROOT_SYSTEM_HPP
#define DEMKIT_ROOT_SYSTEM_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "demkit/weight.hpp"

namespace demkit {

/// A positive root, stored both in the fundamental-weight basis (its pairings
/// with the simple coroots) and in the simple-root basis.
struct PositiveRoot {
  Weight weight;                  // alpha(h_i)
  std::vector<int> simple_coords; // alpha = sum c_i alpha_i
  std::vector<int> coroot_coords; // h_alpha = sum k_i h_i
  int d = 1;                      // 2 / (alpha, alpha), long roots have d = 1
  int height = 0;
};

/*
  Immutable Cartan datum of a finite-dimensional simple Lie algebra.

  Numbering follows Bourbaki. The Cartan matrix is stored as
  cartan(i, j) = <alpha_j, h_i>, 0-based. Positive roots are generated by
  closure from the simple roots; nothing beyond the Cartan matrices is
  tabulated. The invariant form is normalized so that long roots have
  square length two.

  Node indices in the public reflection API are 1-based (node 0 is
  reserved for the affine reflection, see affine.hpp).
*/
class RootSystem {
public:
  /// Builds the datum for (series, rank); throws std::invalid_argument for an
  /// invalid pair such as ('B', 1) or ('E', 5).
  static std::shared_ptr<const RootSystem> build(char series, int rank);
  /// Parses "A2", "G2", "E6", ... (an optional '_' is accepted: "A_2").
  static std::shared_ptr<const RootSystem> parse(const std::string& name);

  char series() const noexcept { return series_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;

  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  std::span<const PositiveRoot> positive_roots() const noexcept { return roots_; }
  std::size_t theta_index() const noexcept { return theta_; }
  const PositiveRoot& theta() const noexcept { return roots_[theta_]; }
  /// d_{alpha_i} for node i in 1..n.
  int d_simple(int node) const;
  /// alpha_i in fundamental-weight coordinates, node in 1..n.
  const Weight& simple_root(int node) const;
  Weight fundamental_weight(int node) const { return Weight::fundamental(rank_, node); }
  Weight zero() const { return Weight::zero(rank_); }
  Weight rho() const;
  /// 1 + rho(h_theta).
  int dual_coxeter_number() const noexcept { return dual_coxeter_; }

  /// lambda(h_alpha) for the positive root with the given index.
  std::int64_t pairing(const Weight& lambda, std::size_t root_index) const;
  /// lambda(h_theta).
  std::int64_t pairing_theta(const Weight& lambda) const { return pairing(lambda, theta_); }

  /// s_i(lambda) = lambda - lambda(h_i) alpha_i for node i in 1..n.
  Weight simple_reflection(int node, const Weight& lambda) const;
  /// Reduced word for the longest element, letters in application order.
  WeylWord longest_element() const;
  /// Applies the letters of the word to lambda from first to last.
  Weight apply(const WeylWord& word, const Weight& lambda) const;
  /// The unique dominant weight in W.lambda.
  Weight dominant_representative(const Weight& lambda) const;
  /// The unique antidominant weight in W.lambda (equals w_0 applied to the dominant one).
  Weight antidominant_representative(const Weight& lambda) const;
  std::vector<Weight> weyl_orbit(const Weight& lambda) const;

  /// True iff d_i divides lambda(h_i) for every i (lambda must be dominant).
  bool in_gamma(const Weight& lambda) const;
  /// s_i = lambda(h_i) / d_i; requires in_gamma(lambda).
  std::vector<int> gamma_s_values(const Weight& lambda) const;
  /// lambda(h_theta) <= level (lambda must be dominant).
  bool in_level_alcove(const Weight& lambda, std::int64_t level) const;
  /// s_alpha with lambda(h_alpha) = d_alpha s_alpha for lambda in Gamma.
  /// Divisibility failure is an internal error (std::logic_error).
  std::int64_t gamma_root_quotient(const Weight& lambda, std::size_t root_index) const;

  /// Invariant form scaled to integers: form(a, b) = form_scale() * (a, b).
  std::int64_t form(const Weight& a, const Weight& b) const;
  std::int64_t form_scale() const noexcept { return form_scale_; }

  /// Simple-root coordinates of a weight multiplied by root_coord_scale().
  std::vector<std::int64_t> root_coords_scaled(const Weight& w) const;
  std::int64_t root_coord_scale() const noexcept { return root_scale_; }
  /// Height (sum of simple-root coordinates) times root_coord_scale().
  std::int64_t height_scaled(const Weight& w) const;
  /// True iff hi - lo is a non-negative integral combination of simple roots.
  bool dominates(const Weight& hi, const Weight& lo) const;

  /// Dominant weights nu with top - nu in Q+, top dominant.
  std::vector<Weight> dominant_weights_below(const Weight& top) const;

private:
  RootSystem(char series, int rank, std::vector<int> cartan);
  void generate_roots();
  void compute_forms();

  char series_;
  int rank_;
  std::vector<int> cartan_;
  std::vector<int> d_;
  std::vector<Weight> simple_roots_;
  std::vector<PositiveRoot> roots_;
  std::size_t theta_ = 0;
  int dual_coxeter_ = 0;
  std::vector<std::int64_t> gram_; // scaled (omega_i, omega_j)
  std::int64_t form_scale_ = 1;
  std::vector<std::int64_t> inv_cartan_; // scaled inverse Cartan matrix
  std::int64_t root_scale_ = 1;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Thin free-function spellings of the RootSystem members.
inline RootSystemPtr build_root_system(char series, int rank) { return RootSystem::build(series, rank); }
bool is_valid_type(char series, int rank) noexcept;

} // namespace demkit

#endif
