#ifndef REDINV_POLY_HPP
#define REDINV_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redinv/field.hpp"

namespace redinv {

/// Exponent vector; arity is fixed by context.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
/// Requires a | b.
Monomial monomial_div(const Monomial& b, const Monomial& a);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool monomial_coprime(const Monomial& a, const Monomial& b);

enum class TermOrder { degrevlex, deglex, lex };

const char* term_order_name(TermOrder ord);

/// Strict comparison: true iff a < b in the given order.
bool monomial_less(const Monomial& a, const Monomial& b, TermOrder ord);

struct Term {
  FieldElement coeff;
  Monomial mono;
};

/// Immutable polynomial over a fixed field, arity, and term order.
/// Terms are stored strictly descending in the order; zero is empty.
class Polynomial {
 public:
  Polynomial(FieldSpec field, std::size_t arity, TermOrder ord)
      : field_(field), arity_(arity), ord_(ord) {}

  /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  static Polynomial make(FieldSpec field, std::size_t arity, TermOrder ord,
                         std::vector<Term> terms);
  static Polynomial zero(FieldSpec field, std::size_t arity, TermOrder ord) {
    return Polynomial(field, arity, ord);
  }
  static Polynomial constant(FieldSpec field, std::size_t arity, TermOrder ord,
                             const FieldElement& c);
  static Polynomial variable(FieldSpec field, std::size_t arity, TermOrder ord,
                             std::size_t i);
  static Polynomial monomial(FieldSpec field, std::size_t arity, TermOrder ord,
                             Monomial m, const FieldElement& c);

  const FieldSpec& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  TermOrder order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// zero_polynomial if zero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const;
  const FieldElement& leading_coeff() const;
  std::uint64_t degree() const;  // zero_polynomial if zero
  bool is_homogeneous() const;   // zero counts as homogeneous

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const FieldElement& c) const;
  /// Multiply by the term c*x^m.
  Polynomial times_term(const FieldElement& c, const Monomial& m) const;
  Polynomial monic() const;  // zero stays zero

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Same field, arity, order; throws otherwise (for binary op guards).
  void check_compatible(const Polynomial& o) const;

  /// The same polynomial re-canonicalized under another order.
  Polynomial with_order(TermOrder ord) const;

  /// Canonical text with the given variable names (size == arity).
  std::string str(const std::vector<std::string>& names) const;

 private:
  FieldSpec field_;
  std::size_t arity_;
  TermOrder ord_;
  std::vector<Term> terms_;
};

std::string monomial_str(const Monomial& m,
                         const std::vector<std::string>& names);

// Spec surface -----------------------------------------------------------

enum class Cmp { less, equal, greater };

Cmp compare_monomials(TermOrder order, const Monomial& a, const Monomial& b);

enum class PolyOp { add, sub, mul };

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);

/// Maximal term of f under `order` (independent of f's stored order).
Term leading_term(const Polynomial& f, TermOrder order);

/// S(f,g) = (lcm/lt f)·f − (lcm/lt g)·g under `order`; leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        TermOrder order);

}  // namespace redinv

#endif
