#ifndef TESTS_SUPPORT_FIXTURES_HPP
#define TESTS_SUPPORT_FIXTURES_HPP

#include "redinv/rings.hpp"
#include "support/build.hpp"

// Shared test rings: the bundled corpus plus a non-CM control, buildable
// over any coefficient field.
namespace tf {

using redinv::FieldSpec;
using redinv::IdealHandle;
using redinv::Monomial;
using redinv::RingPtr;
using redinv::TermOrder;
using tb::mk;

inline RingPtr plane(const FieldSpec& f = tb::gf()) {
  return redinv::make_ring(f, {"x", "y"}, {}, TermOrder::degrevlex,
                           std::nullopt, true, "plane");
}

inline RingPtr space(const FieldSpec& f = tb::gf()) {
  return redinv::make_ring(f, {"x", "y", "z"}, {}, TermOrder::degrevlex,
                           std::nullopt, true, "space");
}

inline RingPtr quadric(const FieldSpec& f = tb::gf()) {
  auto g = mk(f, TermOrder::degrevlex, {{1, {2, 0, 0}}, {-1, {0, 1, 1}}});
  return redinv::make_ring(f, {"x", "y", "z"}, {g}, TermOrder::degrevlex,
                           std::nullopt, true, "quadric");
}

inline RingPtr cubic(const FieldSpec& f = tb::gf()) {
  auto g = mk(f, TermOrder::degrevlex,
              {{1, {3, 0, 0}}, {1, {0, 3, 0}}, {1, {0, 0, 3}}});
  return redinv::make_ring(f, {"x", "y", "z"}, {g}, TermOrder::degrevlex,
                           std::nullopt, true, "cubic");
}

// Coordinate ring of the monomial curve (t^3, t^4, t^5).
inline RingPtr curve345(const FieldSpec& f = tb::gf()) {
  auto o = TermOrder::degrevlex;
  std::vector<redinv::Polynomial> gens = {
      mk(f, o, {{1, {0, 2, 0}}, {-1, {1, 0, 1}}}),   // y^2 - x*z
      mk(f, o, {{1, {3, 0, 0}}, {-1, {0, 1, 1}}}),   // x^3 - y*z
      mk(f, o, {{1, {2, 1, 0}}, {-1, {0, 0, 2}}}),   // x^2*y - z^2
  };
  return redinv::make_ring(f, {"x", "y", "z"}, gens, o, std::nullopt, true,
                           "curve345");
}

// Coordinate ring of the monomial curve (t^4, t^5, t^6, t^7): the 2x2
// minors of [[a,b,c,d],[b,c,d,a^2]].
inline RingPtr curve4567(const FieldSpec& f = tb::gf()) {
  auto o = TermOrder::degrevlex;
  std::vector<redinv::Polynomial> gens = {
      mk(f, o, {{1, {1, 0, 1, 0}}, {-1, {0, 2, 0, 0}}}),  // a*c - b^2
      mk(f, o, {{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}}),  // a*d - b*c
      mk(f, o, {{1, {3, 0, 0, 0}}, {-1, {0, 1, 0, 1}}}),  // a^3 - b*d
      mk(f, o, {{1, {0, 1, 0, 1}}, {-1, {0, 0, 2, 0}}}),  // b*d - c^2
      mk(f, o, {{1, {2, 1, 0, 0}}, {-1, {0, 0, 1, 1}}}),  // a^2*b - c*d
      mk(f, o, {{1, {2, 0, 1, 0}}, {-1, {0, 0, 0, 2}}}),  // a^2*c - d^2
  };
  return redinv::make_ring(f, {"a", "b", "c", "d"}, gens, o, std::nullopt,
                           true, "curve4567");
}

// k[x,y]/(x^2, x*y): dimension 1 but not Cohen-Macaulay (x is a nonzero
// socle element), so e = 1 while every parameter gives colength 2.
inline RingPtr non_cm(const FieldSpec& f = tb::gf()) {
  auto o = TermOrder::degrevlex;
  std::vector<redinv::Polynomial> gens = {
      mk(f, o, {{1, {2, 0}}}),
      mk(f, o, {{1, {1, 1}}}),
  };
  return redinv::make_ring(f, {"x", "y"}, gens, o, std::nullopt, false,
                           "noncm");
}

// The running two-variable example: I = (x^7, x^6 y, x^2 y^5, y^7) with
// reductions J1 = (x^7, y^7) and J2 = (x^7, x^6 y + y^7).
inline IdealHandle ex_I(const RingPtr& R) {
  const auto& f = R->field();
  auto o = R->order();
  return redinv::make_ideal(R, {
                                   mk(f, o, {{1, {7, 0}}}),
                                   mk(f, o, {{1, {6, 1}}}),
                                   mk(f, o, {{1, {2, 5}}}),
                                   mk(f, o, {{1, {0, 7}}}),
                               });
}

inline IdealHandle ex_J1(const RingPtr& R) {
  const auto& f = R->field();
  auto o = R->order();
  return redinv::make_ideal(R, {
                                   mk(f, o, {{1, {7, 0}}}),
                                   mk(f, o, {{1, {0, 7}}}),
                               });
}

inline IdealHandle ex_J2(const RingPtr& R) {
  const auto& f = R->field();
  auto o = R->order();
  return redinv::make_ideal(R, {
                                   mk(f, o, {{1, {7, 0}}}),
                                   mk(f, o, {{1, {6, 1}}, {1, {0, 7}}}),
                               });
}

}  // namespace tf

#endif
