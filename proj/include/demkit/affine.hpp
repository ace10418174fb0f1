#ifndef DEMKIT_AFFINE_HPP
#define DEMKIT_AFFINE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "demkit/character.hpp"
#include "demkit/root_system.hpp"

namespace demkit {

/// ell Lambda_0 + finite + delta * delta, for the untwisted affine algebra.
struct AffineWeight {
  Weight finite;
  int level = 0;
  int delta = 0;

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

/// <Lambda, h_i>; for i = 0 this is level - finite(h_theta).
std::int64_t affine_pairing(const RootSystem& rs, const AffineWeight& w, int node);
bool is_affine_dominant(const RootSystem& rs, const AffineWeight& w);
/// s_i(Lambda); s_0 subtracts <Lambda, h_0> alpha_0 with alpha_0 = delta - theta.
AffineWeight affine_reflect(const RootSystem& rs, const AffineWeight& w, int node);

struct Straightening {
  AffineWeight dominant;
  /// Replaying the letters left to right on `dominant` returns the input.
  WeylWord word;
};

inline constexpr std::size_t default_straighten_step_cap = 1'000'000;

/// Raises nu into the dominant chamber: repeatedly reflects in the smallest
/// node with negative pairing. Throws std::invalid_argument for level < 1
/// and std::logic_error when the step cap is exceeded.
Straightening straighten(const RootSystem& rs, const AffineWeight& nu,
                         std::size_t step_cap = default_straighten_step_cap);

/// A graded character whose terms are affine weights of one fixed level:
/// term (w, g) stands for e^{level Lambda_0 + w + g delta}.
struct LeveledCharacter {
  GradedCharacter terms;
  int level = 0;
};

/// Isobaric Demazure operator D_i (node 0..n), applied termwise.
LeveledCharacter demazure_operator(const RootSystem& rs, int node, const LeveledCharacter& x);
/// Finite Demazure operator D_i (node 1..n) on an ungraded character.
Character demazure_operator(const RootSystem& rs, int node, const Character& x);

struct DemazureModule {
  /// Graded by the delta-coefficient: the extremal weight w_0 lambda sits at grade 0.
  GradedCharacter character;
  /// Dominant affine weight whose Demazure submodule this is.
  AffineWeight highest;
  WeylWord word;
};

/// Full Demazure data for D(level, lambda), level >= 1.
DemazureModule demazure_module(const RootSystemPtr& rs, int level, const Weight& lambda);

/// Graded character of D(level, lambda). Level 0 gives the unit character and
/// rejects lambda != 0.
GradedCharacter demazure_character(const RootSystemPtr& rs, int level, const Weight& lambda);

/// The same module graded by depth below its affine highest weight:
/// depth = highest.delta - grade.
GradedCharacter depth_graded(const DemazureModule& module);

/// KR(d_i level omega_i) = D(level, d_i level omega_i).
GradedCharacter kr_character(const RootSystemPtr& rs, int level, int node);

/// Defining relations of D(level, lambda) as a quotient of the local Weyl module.
struct RelationDescriptor {
  std::size_t root_index = 0;
  std::vector<int> root;      // simple-root coordinates
  int d = 1;
  std::int64_t pairing = 0;   // lambda(h_alpha)
  std::int64_t s = 0;
  std::int64_t m = 0;
  // (x_alpha^- (x) t^s) w = 0
  std::int64_t power_exponent = 0;
  // (x_alpha^- (x) t^{s-1})^{m+1} w = 0, present iff 0 < m < d * level
  bool nilpotency = false;
  std::int64_t nilpotency_exponent = 0;
  std::int64_t nilpotency_power = 0;
};

std::vector<RelationDescriptor> presentation(const RootSystem& rs, int level, const Weight& lambda);

/// Characters of V(level Lambda_0 + lambda) down to depth max_grade, graded by
/// depth (the highest weight at grade 0). Affine Freudenthal recursion.
GradedCharacter affine_irreducible_character_truncated(const RootSystemPtr& rs, int level, const Weight& lambda,
                                                       int max_grade);

} // namespace demkit

#endif
