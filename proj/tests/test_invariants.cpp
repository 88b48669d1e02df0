#include "doctest.h"
#include "redinv/error.hpp"
#include "redinv/invariants.hpp"
#include "support/build.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace redinv;
using tb::gf;
using tb::mk;

#define CHECK_ERRC(expr, errc)            \
  do {                                    \
    try {                                 \
      (void)(expr);                       \
      FAIL("expected error " #errc);      \
    } catch (const Error& e) {            \
      CHECK(e.code() == errc);            \
    }                                     \
  } while (0)

TEST_CASE("homogeneous colengths against staircase facts") {
  auto R = tf::plane();
  auto m = maximal_ideal(R);
  CHECK(colength_homogeneous(R, ideal_power(m, 2)) == 3);
  CHECK(colength_homogeneous(R, ideal_power(m, 3)) == 6);

  auto f = R->field();
  auto o = R->order();
  auto xy23 = make_ideal(
      R, {mk(f, o, {{1, {2, 0}}}), mk(f, o, {{1, {0, 3}}})});
  CHECK(colength_homogeneous(R, xy23) == 6);

  SUBCASE("running example lengths, prime field and rationals") {
    for (const auto& R2 : {tf::plane(), tf::plane(FieldSpec::rationals())}) {
      auto I = tf::ex_I(R2);
      auto J1 = tf::ex_J1(R2);
      auto J2 = tf::ex_J2(R2);
      CHECK(colength_homogeneous(R2, I) == 35);
      CHECK(colength_homogeneous(R2, J1) == 49);
      CHECK(colength_homogeneous(R2, J2) == 49);
      CHECK(colength_homogeneous(R2, ideal_power(I, 2)) == 111);
      CHECK(colength_homogeneous(R2, ideal_power(I, 3)) == 235);
      CHECK(colength_homogeneous(R2, ideal_product(J1, ideal_power(I, 2))) ==
            238);
    }
  }

  SUBCASE("errors") {
    auto g = mk(f, o, {{1, {2, 0}}, {1, {1, 0}}});  // x^2 + x
    CHECK_ERRC(colength_homogeneous(R, make_ideal(R, {g})),
               Errc::not_homogeneous);
    auto x = mk(f, o, {{1, {1, 0}}});
    CHECK_ERRC(colength_homogeneous(R, make_ideal(R, {x})),
               Errc::not_m_primary);
  }
}

TEST_CASE("local colength via truncation") {
  SUBCASE("unit at a smooth point: (x - x^2) in k[x]") {
    // Affine colength of (x - x^2) is 2; localized at the origin the
    // factor x - 1 is a unit, leaving length 1.
    auto f = gf();
    auto R1 = make_ring(f, {"x"}, {}, TermOrder::degrevlex, std::nullopt,
                        true, "line");
    auto g = mk(f, TermOrder::degrevlex, {{1, {1}}, {-1, {2}}});
    CHECK(colength_local(R1, make_ideal(R1, {g})) == 1);
    CHECK(testoracle::staircase_count_naive({{2}}, 1) == 2);
  }

  SUBCASE("agrees with the homogeneous path on homogeneous input") {
    auto R = tf::plane();
    auto I = tf::ex_I(R);
    CHECK(colength_local(R, I) == 35);
    auto m3 = ideal_power(maximal_ideal(R), 3);
    CHECK(colength_local(R, m3) == 6);
  }

  SUBCASE("inhomogeneous quotient rings") {
    auto C = tf::curve345();
    CHECK(colength(C, maximal_ideal(C)) == 1);
    auto m2 = ideal_power(maximal_ideal(C), 2);
    CHECK(colength(C, m2) == 4);
  }
}

TEST_CASE("length of ideal quotients") {
  auto R = tf::plane();
  auto I = tf::ex_I(R);
  auto J1 = tf::ex_J1(R);
  auto J2 = tf::ex_J2(R);
  auto I2 = ideal_power(I, 2);
  auto I3 = ideal_power(I, 3);
  auto I4 = ideal_power(I, 4);

  CHECK(length_quotient(R, I, I) == 0);
  CHECK(length_quotient(R, I2, I) == 76);

  SUBCASE("the two reductions differ at n = 3") {
    CHECK(length_quotient(R, ideal_product(J1, I2), I3) == 3);
    CHECK(length_quotient(R, ideal_product(J2, I2), I3) == 2);
    CHECK(length_quotient(R, ideal_product(J1, I3), I4) == 1);
    CHECK(length_quotient(R, ideal_product(J2, I3), I4) == 0);
  }

  SUBCASE("classical identities for the running example") {
    // lambda(I/J) = e(I) - lambda(A/I) for a minimal reduction J.
    CHECK(length_quotient(R, J1, I) == 49 - 35);
    // lambda(I^2/JI) = e(I) + lambda(A/I) - lambda(I/I^2).
    CHECK(length_quotient(R, ideal_product(J1, I), I2) == 49 + 35 - 76);
  }

  SUBCASE("containment is enforced") {
    auto m = maximal_ideal(R);
    CHECK_ERRC(length_quotient(R, m, I), Errc::containment_failed);
  }
}

TEST_CASE("minimal generator counts via Nakayama") {
  auto R = tf::plane();
  auto m = maximal_ideal(R);
  CHECK(mu(R, m) == 2);
  CHECK(mu(R, ideal_power(m, 2)) == 3);
  CHECK(mu(R, tf::ex_I(R)) == 4);
  CHECK(mu(R, zero_ideal(R)) == 0);

  // A deliberately redundant generating set does not inflate mu.
  auto f = R->field();
  auto o = R->order();
  auto x = mk(f, o, {{1, {1, 0}}});
  auto y = mk(f, o, {{1, {0, 1}}});
  CHECK(mu(R, make_ideal(R, {x, y, x + y})) == 2);

  auto C = tf::curve345();
  auto mC = maximal_ideal(C);
  CHECK(mu(C, mC) == 3);
  CHECK(mu(C, ideal_power(mC, 2)) == 3);

  auto Q = tf::quadric();
  CHECK(mu(Q, ideal_power(maximal_ideal(Q), 2)) == 5);
  auto B = tf::cubic();
  CHECK(mu(B, ideal_power(maximal_ideal(B), 2)) == 6);
  auto D = tf::curve4567();
  CHECK(mu(D, maximal_ideal(D)) == 4);
  CHECK(mu(D, ideal_power(maximal_ideal(D), 2)) == 4);
}

TEST_CASE("Hilbert-Samuel sequences match series oracles") {
  using testoracle::hypersurface_hs;
  using testoracle::regular_hs;
  using testoracle::semigroup_hs;

  CHECK(hilbert_samuel(tf::plane(), 5) == regular_hs(2, 5));
  CHECK(hilbert_samuel(tf::space(), 5) == regular_hs(3, 5));
  CHECK(hilbert_samuel(tf::quadric(), 5) == hypersurface_hs(3, 2, 5));
  CHECK(hilbert_samuel(tf::cubic(), 5) == hypersurface_hs(3, 3, 5));
  CHECK(hilbert_samuel(tf::curve345(), 6) == semigroup_hs({3, 4, 5}, 6));
  CHECK(hilbert_samuel(tf::curve4567(), 6) == semigroup_hs({4, 5, 6, 7}, 6));
  CHECK(hilbert_samuel(tf::non_cm(), 5) ==
        std::vector<std::uint64_t>{1, 3, 4, 5, 6});

  CHECK_ERRC(hilbert_samuel(tf::plane(), 3), Errc::bad_argument);
}

TEST_CASE("multiplicity by finite differences and by reduction") {
  auto method_d = MultiplicityMethod::differences();
  auto P = tf::plane();
  CHECK(multiplicity(P, maximal_ideal(P), method_d) == 1);

  auto Q = tf::quadric();
  CHECK(multiplicity(Q, maximal_ideal(Q), method_d) == 2);
  auto B = tf::cubic();
  CHECK(multiplicity(B, maximal_ideal(B), method_d) == 3);
  auto C = tf::curve345();
  CHECK(multiplicity(C, maximal_ideal(C), method_d) == 3);
  auto D = tf::curve4567();
  CHECK(multiplicity(D, maximal_ideal(D), method_d) == 4);

  SUBCASE("running example: e(I) equals the reduction colength") {
    auto R = tf::plane();
    auto I = tf::ex_I(R);
    CHECK(multiplicity(R, I, method_d) == 49);
    CHECK(multiplicity(R, I, MultiplicityMethod::reduction(kDefaultSeed)) ==
          49);
  }

  SUBCASE("both methods agree on the maximal ideal") {
    for (const auto& R : {tf::quadric(), tf::cubic(), tf::curve345()}) {
      auto m = maximal_ideal(R);
      CHECK(multiplicity(R, m, MultiplicityMethod::differences()) ==
            multiplicity(R, m, MultiplicityMethod::reduction(kDefaultSeed)));
    }
  }

  SUBCASE("the non-CM control has e = 1 but no colength-1 parameter") {
    auto N = tf::non_cm();
    CHECK(multiplicity(N, maximal_ideal(N), method_d) == 1);
  }
}

TEST_CASE("Cohen-Macaulay verdicts") {
  CHECK(check_cohen_macaulay(tf::plane(), kDefaultSeed) == CmStatus::cm);
  CHECK(check_cohen_macaulay(tf::quadric(), kDefaultSeed) == CmStatus::cm);
  CHECK(check_cohen_macaulay(tf::cubic(), kDefaultSeed) == CmStatus::cm);
  CHECK(check_cohen_macaulay(tf::curve345(), kDefaultSeed) == CmStatus::cm);
  CHECK(check_cohen_macaulay(tf::curve4567(), kDefaultSeed) == CmStatus::cm);
  CHECK(check_cohen_macaulay(tf::non_cm(), kDefaultSeed) ==
        CmStatus::not_cm);
  CHECK(cm_status_name(CmStatus::not_cm) == std::string("not_cm"));
}
