#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "redinv/error.hpp"
#include "redinv/groebner.hpp"
#include "support/oracles.hpp"

using namespace testoracle;
using redinv::Errc;
using redinv::Monomial;

#define CHECK_ERRC(expr, errc)            \
  do {                                    \
    try {                                 \
      (void)(expr);                       \
      FAIL("expected error " #errc);      \
    } catch (const redinv::Error& e) {    \
      CHECK(e.code() == errc);            \
    }                                     \
  } while (0)

TEST_CASE("semigroup oracle on hand-checked semigroups") {
  SUBCASE("<2,3>") {
    auto s = semigroup_invariants({2, 3});
    CHECK(s.e == 2);
    CHECK(s.mu_m == 2);
    CHECK(s.mu_m2 == 2);
    CHECK(s.lambda3 == 0);
  }
  SUBCASE("<3,4,5>") {
    auto s = semigroup_invariants({3, 4, 5});
    CHECK(s.e == 3);
    CHECK(s.mu_m == 3);
    CHECK(s.mu_m2 == 3);
    CHECK(s.lambda3 == 0);
    CHECK(s.lambda4 == 0);
  }
  SUBCASE("<4,5,6,7>") {
    auto s = semigroup_invariants({4, 5, 6, 7});
    CHECK(s.e == 4);
    CHECK(s.mu_m == 4);
    CHECK(s.mu_m2 == 4);
    CHECK(s.lambda3 == 0);
    CHECK(s.lambda4 == 0);
  }
  SUBCASE("gcd > 1 rejected") {
    CHECK_ERRC(semigroup_invariants({4, 6}), Errc::not_numerical_semigroup);
    CHECK_ERRC(semigroup_invariants({}), Errc::not_numerical_semigroup);
  }
}

TEST_CASE("semigroup Hilbert-Samuel sequences") {
  CHECK(semigroup_hs({2, 3}, 4) == std::vector<std::uint64_t>{1, 3, 5, 7});
  CHECK(semigroup_hs({3, 4, 5}, 6) ==
        std::vector<std::uint64_t>{1, 4, 7, 10, 13, 16});
  CHECK(semigroup_hs({4, 5, 6, 7}, 6) ==
        std::vector<std::uint64_t>{1, 5, 9, 13, 17, 21});
}

TEST_CASE("one-dimensional length identity across random semigroups") {
  // For J = (t^e) a minimal reduction of m in a numerical semigroup ring,
  // lambda(m^3/J m^2) = e - mu(m^2): the d = 1 case of the closed form.
  // The oracle computes both sides by independent set arithmetic.
  std::mt19937_64 rng(7);
  int tried = 0;
  while (tried < 60) {
    std::vector<std::uint64_t> gens;
    std::uint64_t k = 2 + rng() % 3;
    for (std::uint64_t i = 0; i < k; ++i) gens.push_back(2 + rng() % 12);
    std::uint64_t g = 0;
    for (auto a : gens) g = std::gcd(g, a);
    if (g != 1) continue;
    ++tried;
    auto s = semigroup_invariants(gens);
    REQUIRE(s.e >= 1);
    CHECK(s.lambda3 == s.e - s.mu_m2);
    // Sequence lambda(A/m^n) must reach arithmetic growth with step e.
    auto hs = semigroup_hs(gens, 30);
    CHECK(hs[29] - hs[28] == s.e);
    CHECK(hs[28] - hs[27] == s.e);
  }
}

TEST_CASE("naive staircase counter on hand-checked ideals") {
  CHECK(staircase_count_naive({{2, 0}, {1, 1}, {0, 2}}, 2) == 3);
  CHECK(staircase_count_naive({{2, 0}, {0, 3}}, 2) == 6);
  CHECK(staircase_count_naive({{0, 0}}, 2) == 0);
  CHECK(staircase_count_naive({{1}}, 1) == 1);
  CHECK(staircase_count_naive({}, 0) == 1);
  CHECK_ERRC(staircase_count_naive({{1, 0}}, 2), Errc::infinite_staircase);
}

TEST_CASE("naive staircase agrees with engine staircase on random ideals") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t arity = 1 + rng() % 3;
    std::vector<Monomial> gens;
    std::size_t ngen = 1 + rng() % 5;
    // Force finiteness: one pure power per variable.
    for (std::size_t v = 0; v < arity; ++v) {
      Monomial m(arity, 0);
      m[v] = 1 + rng() % 5;
      gens.push_back(m);
    }
    for (std::size_t i = 0; i < ngen; ++i) {
      Monomial m(arity, 0);
      for (std::size_t v = 0; v < arity; ++v) m[v] = rng() % 5;
      if (redinv::total_degree(m) == 0) continue;
      gens.push_back(m);
    }
    CHECK(staircase_count_naive(gens, arity) ==
          redinv::staircase_count(gens, arity));
  }
}

TEST_CASE("series oracles on regular and hypersurface rings") {
  CHECK(regular_hs(2, 5) == std::vector<std::uint64_t>{1, 3, 6, 10, 15});
  CHECK(regular_hs(3, 5) == std::vector<std::uint64_t>{1, 4, 10, 20, 35});
  CHECK(hypersurface_hs(3, 2, 5) ==
        std::vector<std::uint64_t>{1, 4, 9, 16, 25});
  CHECK(hypersurface_hs(3, 3, 5) ==
        std::vector<std::uint64_t>{1, 4, 10, 19, 31});
  // A degree-1 hypersurface is a regular ring in one fewer variable.
  CHECK(hypersurface_hs(3, 1, 6) == regular_hs(2, 6));
}
