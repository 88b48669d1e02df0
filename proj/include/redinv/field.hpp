#ifndef REDINV_FIELD_HPP
#define REDINV_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "redinv/error.hpp"

namespace redinv {

/// Coefficient field: a word-size prime field F_p or the rationals.
class FieldSpec {
 public:
  enum class Kind { prime, rational };

  static constexpr std::uint64_t default_prime = 32003;

  /// Throws bad_argument unless p is a word-size prime >= 2.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::rational, 0); }

  Kind kind() const { return kind_; }
  /// p for prime fields, 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const FieldSpec&) const = default;
  std::string str() const;

 private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Immutable field element in canonical form: residue in [0,p) or a
/// reduced fraction with positive denominator.
class FieldElement {
 public:
  static FieldElement zero(const FieldSpec& f) { return from_integer(f, 0); }
  static FieldElement one(const FieldSpec& f) { return from_integer(f, 1); }
  static FieldElement from_integer(const FieldSpec& f, long long n);
  static FieldElement from_integer(const FieldSpec& f, const mpz_class& n);
  /// Rational-field element num/den, canonicalized. den == 0 is division_by_zero.
  static FieldElement rational(long long num, long long den);

  FieldSpec spec() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Canonical text: residue for F_p, "a" or "a/b" for rationals.
  std::string str() const;

  // prime-field residue access (rationals: bad_argument)
  std::uint64_t residue() const;
  const mpq_class& rat() const;

 private:
  struct Fp {
    std::uint64_t r;
    std::uint64_t p;
    bool operator==(const Fp&) const = default;
  };
  explicit FieldElement(Fp v) : v_(v) {}
  explicit FieldElement(mpq_class q) : v_(std::move(q)) {}
  std::variant<Fp, mpq_class> v_;
};

enum class FieldOp { add, sub, mul, div };

/// Spec surface: exact arithmetic, mixed_fields / division_by_zero on misuse.
FieldElement field_ops(const FieldElement& a, const FieldElement& b, FieldOp op);
FieldElement field_inverse(const FieldElement& a);

}  // namespace redinv

#endif
