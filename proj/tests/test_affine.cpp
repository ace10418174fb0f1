#include <doctest.h>

#include "demkit/affine.hpp"
#include "demkit/finite.hpp"
#include "oracles.hpp"

using namespace demkit;

namespace {

AffineWeight replay(const RootSystem& rs, const Straightening& st) {
  AffineWeight cur = st.dominant;
  for (int node : st.word.letters)
    cur = affine_reflect(rs, cur, node);
  return cur;
}

} // namespace

TEST_CASE("affine pairings and reflections") {
  auto a1 = RootSystem::parse("A1");
  CHECK(affine_pairing(*a1, AffineWeight{Weight{0}, 3, 0}, 0) == 3);
  CHECK(affine_pairing(*a1, AffineWeight{Weight{2}, 1, 0}, 0) == -1);
  CHECK(affine_pairing(*a1, AffineWeight{Weight{2}, 1, 7}, 0) == -1);
  CHECK(affine_pairing(*a1, AffineWeight{Weight{2}, 1, 7}, 1) == 2);

  CHECK(affine_reflect(*a1, AffineWeight{Weight{0}, 1, 0}, 0) == AffineWeight{Weight{2}, 1, -1});
  CHECK(affine_reflect(*a1, AffineWeight{Weight{1}, 1, 0}, 0) == AffineWeight{Weight{1}, 1, 0});
  CHECK(affine_reflect(*a1, AffineWeight{Weight{2}, 1, 0}, 0) == AffineWeight{Weight{0}, 1, 1});
  CHECK(affine_reflect(*a1, AffineWeight{Weight{3}, 2, 4}, 1) == AffineWeight{Weight{-3}, 2, 4});

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (const char* t : {"A2", "B2", "G2", "C3"}) {
    auto rs = RootSystem::parse(t);
    for (int trial = 0; trial < 20; ++trial) {
      AffineWeight w{Weight(static_cast<std::size_t>(rs->rank())), 2, coord(rng)};
      for (int i = 0; i < rs->rank(); ++i)
        w.finite[i] = coord(rng);
      for (int node = 0; node <= rs->rank(); ++node) {
        AffineWeight r = affine_reflect(*rs, w, node);
        CHECK(r.level == w.level);
        CHECK(affine_reflect(*rs, r, node) == w);
        CHECK(affine_pairing(*rs, r, node) == -affine_pairing(*rs, w, node));
        if (node > 0) {
          CHECK(r.delta == w.delta);
          CHECK(r.finite == rs->simple_reflection(node, w.finite));
        }
      }
    }
  }
}

TEST_CASE("straightening") {
  auto a1 = RootSystem::parse("A1");
  Straightening st = straighten(*a1, AffineWeight{Weight{-2}, 1, 0});
  CHECK(st.dominant == AffineWeight{Weight{0}, 1, 1});
  CHECK(st.word.letters == std::vector<int>{0, 1});

  st = straighten(*a1, AffineWeight{Weight{-1}, 1, 0});
  CHECK(st.dominant == AffineWeight{Weight{1}, 1, 0});
  CHECK(st.word.length() == 1);

  st = straighten(*a1, AffineWeight{Weight{0}, 4, 0});
  CHECK(st.word.length() == 0);

  CHECK_THROWS_AS(straighten(*a1, AffineWeight{Weight{-2}, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(straighten(*a1, AffineWeight{Weight{-40}, 1, 0}, 3), std::logic_error);
}

TEST_CASE("straightening replays to the input with strictly negative pairings") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coord(-6, 6);
  std::uniform_int_distribution<int> level(1, 3);
  for (const char* t : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
    auto rs = RootSystem::parse(t);
    for (int trial = 0; trial < 25; ++trial) {
      AffineWeight nu{Weight(static_cast<std::size_t>(rs->rank())), level(rng), coord(rng)};
      for (int i = 0; i < rs->rank(); ++i)
        nu.finite[i] = coord(rng);
      Straightening st = straighten(*rs, nu);
      CHECK(is_affine_dominant(*rs, st.dominant));
      CHECK(replay(*rs, st) == nu);
      AffineWeight cur = st.dominant;
      for (int node : st.word.letters) {
        cur = affine_reflect(*rs, cur, node);
        CHECK(affine_pairing(*rs, cur, node) < 0);
      }
    }
  }
}

TEST_CASE("Demazure operators termwise") {
  auto a1 = RootSystem::parse("A1");
  auto mono = [&](int w, int g) {
    return LeveledCharacter{GradedCharacter::monomial(a1, GradedWeight{Weight{w}, g}), 1};
  };
  CHECK(demazure_operator(*a1, 1, mono(0, 0)).terms == mono(0, 0).terms);
  CHECK(demazure_operator(*a1, 1, mono(-1, 0)).terms.empty());
  // D_1(e^{-3 omega}) = -e^{-omega} - e^{omega}
  LeveledCharacter neg = demazure_operator(*a1, 1, mono(-3, 0));
  CHECK(neg.terms.size() == 2);
  CHECK(neg.terms.coefficient(GradedWeight{Weight{-1}, 0}) == -1);
  CHECK(neg.terms.coefficient(GradedWeight{Weight{1}, 0}) == -1);
  // D_0(e^{Lambda_0 + delta}) = e^{Lambda_0 + delta} + e^{2 omega + Lambda_0}
  LeveledCharacter d0 = demazure_operator(*a1, 0, mono(0, 1));
  CHECK(d0.terms.size() == 2);
  CHECK(d0.terms.coefficient(GradedWeight{Weight{0}, 1}) == 1);
  CHECK(d0.terms.coefficient(GradedWeight{Weight{2}, 0}) == 1);
}

TEST_CASE("Demazure operators are idempotent") {
  std::mt19937 rng(31);
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    auto rs = RootSystem::parse(t);
    for (int trial = 0; trial < 50; ++trial) {
      GradedCharacter g(rs);
      std::uniform_int_distribution<int> grade(-1, 2);
      for (const auto& [w, c] : oracle::random_character(rs, rng, 4, 4).terms())
        g.accumulate(GradedWeight{w, grade(rng)}, c);
      LeveledCharacter x{g, 2};
      for (int node = 0; node <= rs->rank(); ++node) {
        LeveledCharacter once = demazure_operator(*rs, node, x);
        CHECK(demazure_operator(*rs, node, once).terms == once.terms);
      }
    }
  }
}

TEST_CASE("small Demazure characters") {
  auto a1 = RootSystem::parse("A1");
  GradedCharacter d = demazure_character(a1, 1, Weight{1});
  CHECK(d == at_grade(weyl_character(a1, Weight{1}), 0));

  d = demazure_character(a1, 1, Weight{2});
  CHECK(d.dimension() == 4);
  auto series = graded_dimension(d);
  CHECK(series == std::map<int, mpz_class>{{0, 3}, {1, 1}});
  CHECK(d.coefficient(GradedWeight{Weight{0}, 1}) == 1);

  for (const char* t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::parse(t);
    CHECK(demazure_character(rs, 3, rs->zero()) == unit_graded_character(rs));
    CHECK(demazure_character(rs, 0, rs->zero()) == unit_graded_character(rs));
    CHECK_THROWS_AS(demazure_character(rs, 0, rs->fundamental_weight(1)), std::invalid_argument);
  }
  CHECK_THROWS_AS(demazure_character(a1, 1, Weight{-1}), std::invalid_argument);
}

TEST_CASE("Demazure character invariants") {
  struct Case {
    const char* type;
    int max_coord;
  };
  for (const Case c : {Case{"A1", 5}, Case{"A2", 3}, Case{"B2", 3}, Case{"G2", 2}, Case{"A3", 2}, Case{"C3", 1}}) {
    auto rs = RootSystem::parse(c.type);
    for (int level = 1; level <= 2; ++level)
      for (const Weight& lambda : oracle::dominant_box(rs->rank(), c.max_coord)) {
        CAPTURE(c.type);
        CAPTURE(level);
        CAPTURE(lambda.to_string());
        const DemazureModule m = demazure_module(rs, level, lambda);
        const GradedCharacter& g = m.character;
        for (const auto& [key, coeff] : g.terms()) {
          CHECK(key.grade >= 0);
          CHECK(coeff > 0);
        }
        CHECK(slice(g, 0) == weyl_character(rs, lambda));
        CHECK(g.coefficient(GradedWeight{lambda, 0}) == 1);
        CHECK(is_W_invariant(collapse(g)));
        for (const auto& [grade, dim] : graded_dimension(g))
          CHECK(is_W_invariant(slice(g, grade)));
      }
  }
}

TEST_CASE("Demazure characters against the finite Weyl character along w0") {
  for (const char* t : {"A2", "A3", "B2", "G2"}) {
    auto rs = RootSystem::parse(t);
    for (const Weight& lambda : oracle::dominant_box(rs->rank(), 3))
      CHECK(weyl_character_demazure(rs, lambda) == weyl_character(rs, lambda));
  }
}

TEST_CASE("KR characters") {
  auto a1 = RootSystem::parse("A1");
  CHECK(kr_character(a1, 1, 1) == at_grade(weyl_character(a1, Weight{1}), 0));
  auto a2 = RootSystem::parse("A2");
  GradedCharacter kr = kr_character(a2, 2, 1);
  CHECK(kr == at_grade(weyl_character(a2, Weight{2, 0}), 0));
  CHECK(kr.dimension() == 6);
  CHECK(kr_character(a2, 0, 1) == unit_graded_character(a2));
  // a non-minuscule node carries positive grades
  auto b2 = RootSystem::parse("B2");
  GradedCharacter krb = kr_character(b2, 1, 2);
  CHECK(collapse(krb).dimension() > weyl_dimension(*b2, Weight{0, 2}));
}

TEST_CASE("presentation") {
  auto a1 = RootSystem::parse("A1");
  auto rel = presentation(*a1, 1, Weight{3});
  REQUIRE(rel.size() == 1);
  CHECK(rel[0].s == 3);
  CHECK(rel[0].m == 1);
  CHECK_FALSE(rel[0].nilpotency);

  rel = presentation(*a1, 2, Weight{3});
  CHECK(rel[0].s == 2);
  CHECK(rel[0].m == 1);
  CHECK(rel[0].nilpotency);
  CHECK(rel[0].nilpotency_exponent == 1);
  CHECK(rel[0].nilpotency_power == 2);

  rel = presentation(*a1, 2, Weight{0});
  CHECK(rel[0].s == 0);
  CHECK(rel[0].m == 0);
  CHECK_FALSE(rel[0].nilpotency);

  std::mt19937 rng(41);
  for (const char* t : {"B3", "C2", "G2"}) {
    auto rs = RootSystem::parse(t);
    for (int trial = 0; trial < 20; ++trial) {
      Weight lambda = oracle::random_dominant(rs->rank(), rng, 6);
      for (int level = 1; level <= 3; ++level)
        for (const auto& r : presentation(*rs, level, lambda)) {
          if (r.pairing == 0) {
            CHECK(r.s == 0);
            continue;
          }
          CHECK(r.pairing == (r.s - 1) * r.d * level + r.m);
          CHECK(r.m > 0);
          CHECK(r.m <= r.d * level);
          CHECK(r.nilpotency == (r.m < r.d * level));
        }
    }
  }
  CHECK_THROWS_AS(presentation(*a1, 0, Weight{1}), std::invalid_argument);
}

TEST_CASE("truncated affine characters of level one sl2 modules") {
  auto a1 = RootSystem::parse("A1");
  for (int lambda : {0, 1}) {
    const int depth = 8;
    GradedCharacter x = affine_irreducible_character_truncated(a1, 1, Weight{lambda}, depth);
    const auto expected = oracle::sl2_level_one(lambda, depth);
    GradedCharacter y(a1);
    for (const auto& [key, m] : expected)
      y.accumulate(GradedWeight{Weight{key.second}, key.first}, m);
    CHECK(x == y);
  }
}

TEST_CASE("truncated affine character invariants") {
  for (const char* t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::parse(t);
    for (int level = 1; level <= 2; ++level)
      for (const Weight& lambda : oracle::dominant_box(rs->rank(), 2)) {
        if (!rs->in_level_alcove(lambda, level))
          continue;
        GradedCharacter x = affine_irreducible_character_truncated(rs, level, lambda, 2);
        CHECK(slice(x, 0) == weyl_character(rs, lambda));
        for (int g = 0; g <= 2; ++g)
          CHECK(is_W_invariant(slice(x, g)));
        CHECK(affine_irreducible_character_truncated(rs, level, lambda, 0) == at_grade(weyl_character(rs, lambda)));
      }
    CHECK_THROWS_AS(affine_irreducible_character_truncated(rs, 1, rs->theta().weight + rs->theta().weight, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("depth grading of D(level, N level theta + lambda) embeds in V(level Lambda_0 + lambda)") {
  for (const char* t : {"A1", "A2", "B2"}) {
    auto rs = RootSystem::parse(t);
    const int level = 1;
    const Weight lambda = rs->zero();
    GradedCharacter v = affine_irreducible_character_truncated(rs, level, lambda, 3);
    for (int n = 1; n <= 3; ++n) {
      DemazureModule m = demazure_module(rs, level, n * rs->theta().weight + lambda);
      CHECK(m.highest.finite == lambda);
      GradedCharacter d = truncate(depth_graded(m), 3);
      for (const auto& [key, c] : d.terms())
        CHECK(c <= v.coefficient(key));
    }
  }
}
