#ifndef REDINV_GROEBNER_HPP
#define REDINV_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "redinv/poly.hpp"

namespace redinv {

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  TermOrder order = TermOrder::degrevlex;
  bool reduced = false;
};

/// Remainder of f on division by the (nonzero) polynomials in G.
/// Fully reduced: no term of the result is divisible by any lm(g).
/// Deterministic: highest reducible term first, first dividing generator
/// in basis order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Buchberger with coprime-lm and chain criteria, normal selection
/// (minimal lcm total degree first). Result is the unique reduced basis:
/// monic, interreduced, sorted ascending by leading monomial.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, TermOrder order);

/// Membership of f in the ideal with Gröbner basis G.
bool in_ideal(const Polynomial& f, const GroebnerBasis& G);

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& G);
std::vector<Monomial> leading_monomials(const GroebnerBasis& G);

/// Number of monomials outside the monomial ideal generated by `lms`
/// (the standard monomials). infinite_staircase if that set is infinite;
/// 0 if some lm is the unit monomial. `arity` fixes the ambient variables.
std::uint64_t staircase_count(const std::vector<Monomial>& lms,
                              std::size_t arity);
std::uint64_t staircase_count(const GroebnerBasis& G, std::size_t arity);

/// The standard monomials themselves (finite case only; same errors).
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lms,
                                         std::size_t arity);
std::vector<Monomial> standard_monomials(const GroebnerBasis& G,
                                         std::size_t arity);

/// Krull dimension of S/(monomial ideal): the largest subset T of the
/// variables such that no generator is supported inside T.
/// ideal_is_unit if the unit monomial is among the generators.
int monomial_ideal_dimension(const std::vector<Monomial>& lms,
                             std::size_t arity);

}  // namespace redinv

#endif
