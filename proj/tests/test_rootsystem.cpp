#include <doctest.h>

#include <set>

#include "demkit/finite.hpp"
#include "demkit/root_system.hpp"
#include "oracles.hpp"

using namespace demkit;

namespace {

const char* const all_types[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                                 "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

} // namespace

TEST_CASE("type parsing") {
  CHECK(RootSystem::parse("A2")->name() == "A2");
  CHECK(RootSystem::parse("A_2")->name() == "A2");
  CHECK(RootSystem::parse("E6")->rank() == 6);
  CHECK_THROWS_AS(RootSystem::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::parse("E5"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::parse("X2"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::parse("A"), std::invalid_argument);
  CHECK(is_valid_type('G', 2));
  CHECK_FALSE(is_valid_type('G', 3));
}

TEST_CASE("positive roots agree with the brute-force W-orbit of the simple roots") {
  for (const char* t : all_types) {
    CAPTURE(t);
    auto rs = RootSystem::parse(t);
    const auto roots = oracle::all_roots(*rs);
    CHECK(roots.size() == oracle::expected_root_count(rs->series(), rs->rank()));
    CHECK(rs->positive_roots().size() * 2 == roots.size());
    std::set<oracle::Vec> mine;
    for (const auto& r : rs->positive_roots()) {
      oracle::Vec v(r.weight.begin(), r.weight.end());
      mine.insert(v);
      for (auto& x : v)
        x = -x;
      mine.insert(v);
      CHECK(r.height > 0);
    }
    CHECK(mine == roots);
  }
}

TEST_CASE("highest root, dual Coxeter number and fundamental dimensions") {
  struct Row {
    const char* type;
    std::vector<int> theta;
    int hv;
  };
  const Row rows[] = {{"A1", {2}, 2},          {"A3", {1, 0, 1}, 4},       {"B2", {0, 2}, 3},
                      {"B3", {0, 1, 0}, 5},    {"C3", {2, 0, 0}, 4},       {"D4", {0, 1, 0, 0}, 6},
                      {"G2", {0, 1}, 4},       {"F4", {1, 0, 0, 0}, 9},    {"E6", {0, 1, 0, 0, 0, 0}, 12},
                      {"E8", {0, 0, 0, 0, 0, 0, 0, 1}, 30}};
  for (const auto& row : rows) {
    CAPTURE(row.type);
    auto rs = RootSystem::parse(row.type);
    CHECK(rs->theta().weight == Weight(row.theta));
    CHECK(rs->dual_coxeter_number() == row.hv);
  }
  auto g2 = RootSystem::parse("G2");
  CHECK(weyl_dimension(*g2, g2->fundamental_weight(1)) == 7);
  CHECK(weyl_dimension(*g2, g2->fundamental_weight(2)) == 14);
  CHECK(g2->d_simple(1) == 3);
  CHECK(g2->d_simple(2) == 1);
  auto b3 = RootSystem::parse("B3");
  CHECK(b3->d_simple(3) == 2);
  CHECK(b3->d_simple(1) == 1);
  auto c3 = RootSystem::parse("C3");
  CHECK(c3->d_simple(1) == 2);
  CHECK(c3->d_simple(3) == 1);
}

TEST_CASE("longest element against the brute-force Weyl group") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(t);
    auto rs = RootSystem::parse(t);
    const WeylWord w0 = rs->longest_element();
    CHECK(w0.length() == rs->positive_roots().size());
    CHECK(rs->apply(w0, rs->rho()) == -rs->rho());
  }
  CHECK(oracle::weyl_group_order(*RootSystem::parse("A3")) == 24);
  CHECK(oracle::weyl_group_order(*RootSystem::parse("B3")) == 48);
  CHECK(oracle::weyl_group_order(*RootSystem::parse("G2")) == 12);
  CHECK(oracle::weyl_group_order(*RootSystem::parse("F4")) == 1152);
}

TEST_CASE("orbits, dominant and antidominant representatives") {
  std::mt19937 rng(7);
  for (const char* t : {"A2", "B2", "C3", "G2", "D4"}) {
    CAPTURE(t);
    auto rs = RootSystem::parse(t);
    for (int trial = 0; trial < 20; ++trial) {
      Weight lambda = oracle::random_dominant(rs->rank(), rng, 3);
      auto orbit = rs->weyl_orbit(lambda);
      auto brute = oracle::orbit(*rs, oracle::Vec(lambda.begin(), lambda.end()));
      CHECK(orbit.size() == brute.size());
      for (const Weight& w : orbit) {
        CHECK(brute.count(oracle::Vec(w.begin(), w.end())) == 1);
        CHECK(rs->dominant_representative(w) == lambda);
      }
      Weight anti = rs->antidominant_representative(lambda);
      CHECK((-anti).is_dominant());
      CHECK(anti == rs->apply(rs->longest_element(), lambda));
    }
  }
}

TEST_CASE("simple reflections are involutions and preserve the form") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (const char* t : {"A3", "B3", "C2", "G2", "F4"}) {
    auto rs = RootSystem::parse(t);
    for (int trial = 0; trial < 30; ++trial) {
      Weight a(static_cast<std::size_t>(rs->rank())), b(static_cast<std::size_t>(rs->rank()));
      for (int i = 0; i < rs->rank(); ++i) {
        a[i] = coord(rng);
        b[i] = coord(rng);
      }
      for (int node = 1; node <= rs->rank(); ++node) {
        CHECK(rs->simple_reflection(node, rs->simple_reflection(node, a)) == a);
        CHECK(rs->form(rs->simple_reflection(node, a), rs->simple_reflection(node, b)) == rs->form(a, b));
      }
      CHECK(rs->form(a, b) == rs->form(b, a));
    }
    // long roots have square length 2 and (alpha, alpha) = 2 / d_alpha
    for (const auto& r : rs->positive_roots())
      CHECK(rs->form(r.weight, r.weight) * r.d == 2 * rs->form_scale());
  }
}

TEST_CASE("pairings through coroots") {
  auto a1 = RootSystem::parse("A1");
  CHECK(a1->pairing_theta(Weight{2}) == 2);
  auto b2 = RootSystem::parse("B2");
  // theta = alpha1 + 2 alpha2 is long, h_theta = h1 + h2
  CHECK(b2->pairing_theta(Weight{1, 0}) == 1);
  CHECK(b2->pairing_theta(Weight{0, 1}) == 1);
  auto g2 = RootSystem::parse("G2");
  // theta = 3 alpha1 + 2 alpha2 with alpha1 short: h_theta = h1 + 2 h2
  CHECK(g2->pairing_theta(Weight{1, 0}) == 1);
  CHECK(g2->pairing_theta(Weight{0, 1}) == 2);
  // lambda(h_alpha) = 2 (lambda, alpha) / (alpha, alpha)
  for (const char* t : {"B3", "C3", "G2", "F4"}) {
    auto rs = RootSystem::parse(t);
    Weight lambda = rs->rho();
    for (std::size_t k = 0; k < rs->positive_roots().size(); ++k) {
      const auto& r = rs->positive_roots()[k];
      CHECK(2 * rs->form(lambda, r.weight) == rs->pairing(lambda, k) * rs->form(r.weight, r.weight));
    }
  }
}

TEST_CASE("Gamma and the level alcove") {
  auto b2 = RootSystem::parse("B2");
  CHECK(b2->in_gamma(Weight{1, 2}));
  CHECK_FALSE(b2->in_gamma(Weight{1, 1}));
  CHECK(b2->gamma_s_values(Weight{3, 4}) == std::vector<int>{3, 2});
  CHECK_THROWS(b2->in_gamma(Weight{-1, 0}));
  auto a2 = RootSystem::parse("A2");
  CHECK(a2->in_gamma(Weight{1, 3}));
  CHECK(a2->in_level_alcove(Weight{1, 1}, 2));
  CHECK_FALSE(a2->in_level_alcove(Weight{1, 1}, 1));
  for (std::size_t k = 0; k < b2->positive_roots().size(); ++k)
    CHECK(b2->gamma_root_quotient(Weight{2, 4}, k) * b2->positive_roots()[k].d == b2->pairing(Weight{2, 4}, k));
}

TEST_CASE("dominance and dominant weights below a weight") {
  auto a2 = RootSystem::parse("A2");
  CHECK(a2->dominates(Weight{1, 1}, Weight{0, 0}));
  CHECK_FALSE(a2->dominates(Weight{1, 0}, Weight{0, 0}));
  auto below = a2->dominant_weights_below(Weight{2, 2});
  CHECK(below.front() == Weight{2, 2});
  std::set<std::vector<int>> got;
  for (const auto& w : below)
    got.insert(std::vector<int>(w.begin(), w.end()));
  CHECK(got == std::set<std::vector<int>>{{2, 2}, {3, 0}, {0, 3}, {1, 1}, {0, 0}});
  // height decreases along the list
  for (std::size_t i = 1; i < below.size(); ++i)
    CHECK(a2->height_scaled(below[i - 1]) >= a2->height_scaled(below[i]));
}
