// Brute-force reference computations used by the tests. None of these go
// through the library's root generation, Freudenthal or Demazure code.

#ifndef DEMKIT_TESTS_ORACLES_HPP
#define DEMKIT_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "demkit/character.hpp"
#include "demkit/root_system.hpp"

namespace oracle {

using Vec = std::vector<int>;

// s_i on fundamental-weight coordinates, straight from the Cartan matrix.
inline Vec reflect(const demkit::RootSystem& rs, const Vec& v, int i) {
  Vec out = v;
  const int p = v[i];
  for (int j = 0; j < rs.rank(); ++j)
    out[j] -= p * rs.cartan(j, i);
  return out;
}

inline std::set<Vec> orbit(const demkit::RootSystem& rs, const Vec& start) {
  std::set<Vec> seen{start};
  std::vector<Vec> todo{start};
  while (!todo.empty()) {
    Vec v = todo.back();
    todo.pop_back();
    for (int i = 0; i < rs.rank(); ++i) {
      Vec w = reflect(rs, v, i);
      if (seen.insert(w).second)
        todo.push_back(w);
    }
  }
  return seen;
}

// All roots: the W-orbits of the simple roots (column i of the Cartan matrix).
inline std::set<Vec> all_roots(const demkit::RootSystem& rs) {
  std::set<Vec> out;
  for (int i = 0; i < rs.rank(); ++i) {
    Vec a(rs.rank());
    for (int j = 0; j < rs.rank(); ++j)
      a[j] = rs.cartan(j, i);
    auto o = orbit(rs, a);
    out.insert(o.begin(), o.end());
  }
  return out;
}

// |W| as the size of the (free) orbit of rho.
inline std::size_t weyl_group_order(const demkit::RootSystem& rs) {
  return orbit(rs, Vec(rs.rank(), 1)).size();
}

// Root counts of the simple types.
inline std::size_t expected_root_count(char series, int n) {
  switch (series) {
  case 'A':
    return n * (n + 1);
  case 'B':
  case 'C':
    return 2 * n * n;
  case 'D':
    return 2 * n * (n - 1);
  case 'E':
    return n == 6 ? 72 : n == 7 ? 126 : 240;
  case 'F':
    return 48;
  case 'G':
    return 12;
  }
  return 0;
}

// Clebsch-Gordan for sl2: V(a) (x) V(b) = sum_k V(a + b - 2k), 0 <= k <= min(a, b).
inline std::map<int, int> clebsch_gordan(int a, int b) {
  std::map<int, int> out;
  for (int k = 0; k <= std::min(a, b); ++k)
    out[a + b - 2 * k] += 1;
  return out;
}

// sl2 character of V(a): weights a, a-2, ..., -a.
inline std::map<int, int> sl2_character(int a) {
  std::map<int, int> out;
  for (int w = -a; w <= a; w += 2)
    out[w] = 1;
  return out;
}

// sl3 dimension formula.
inline long sl3_dimension(int a, int b) { return (a + 1L) * (b + 1L) * (a + b + 2L) / 2; }

// Partition numbers p(0..n).
inline std::vector<long> partitions(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k)
      p[k] += p[k - part];
  return p;
}

// Weight multiplicities of the level-1 sl2^ modules V(Lambda_0) and
// V(Lambda_1) graded by depth: weight (finite coordinate) -> multiplicity,
// from the string-function description via partitions.
inline std::map<std::pair<int, int>, long> sl2_level_one(int lambda, int max_depth) {
  const auto p = partitions(max_depth);
  std::map<std::pair<int, int>, long> out;
  for (int n = -max_depth - 1; n <= max_depth + 1; ++n) {
    // weight lambda + 2n (finite coordinate), first appearing at depth n^2 (+ n when lambda = 1)
    const int first = lambda == 0 ? n * n : n * n + n;
    for (int d = first; d <= max_depth; ++d)
      out[{d, lambda + 2 * n}] = p[d - first];
  }
  return out;
}

// Random sparse character with small weights and signed big coefficients.
inline demkit::Character random_character(const demkit::RootSystemPtr& rs, std::mt19937& rng, int terms = 6,
                                          int box = 3) {
  std::uniform_int_distribution<int> coord(-box, box);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  demkit::Character x(rs);
  for (int t = 0; t < terms; ++t) {
    demkit::Weight w(static_cast<std::size_t>(rs->rank()));
    for (int i = 0; i < rs->rank(); ++i)
      w[i] = coord(rng);
    mpz_class c(coeff(rng));
    c *= mpz_class("123456789012345678901");
    x.accumulate(w, c);
  }
  return x;
}

inline demkit::Weight random_dominant(int rank, std::mt19937& rng, int box) {
  std::uniform_int_distribution<int> coord(0, box);
  demkit::Weight w(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i)
    w[i] = coord(rng);
  return w;
}

// Every dominant weight with coordinates in [0, box].
inline std::vector<demkit::Weight> dominant_box(int rank, int box) {
  std::vector<demkit::Weight> out;
  demkit::Weight w(static_cast<std::size_t>(rank));
  for (;;) {
    out.push_back(w);
    int i = rank - 1;
    while (i >= 0 && w[i] == box) {
      w[i] = 0;
      --i;
    }
    if (i < 0)
      break;
    ++w[i];
  }
  return out;
}

} // namespace oracle

#endif
