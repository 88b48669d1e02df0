#include "redinv/field.hpp"

#include <limits>

namespace redinv {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::mixed_fields: return "mixed_fields";
    case Errc::arity_mismatch: return "arity_mismatch";
    case Errc::zero_polynomial: return "zero_polynomial";
    case Errc::infinite_staircase: return "infinite_staircase";
    case Errc::ideal_is_unit: return "ideal_is_unit";
    case Errc::unit_defining_ideal: return "unit_defining_ideal";
    case Errc::bad_variable_names: return "bad_variable_names";
    case Errc::ring_mismatch: return "ring_mismatch";
    case Errc::not_homogeneous: return "not_homogeneous";
    case Errc::not_m_primary: return "not_m_primary";
    case Errc::no_stabilization: return "no_stabilization";
    case Errc::containment_failed: return "containment_failed";
    case Errc::differences_not_stabilized: return "differences_not_stabilized";
    case Errc::exhausted_draws: return "exhausted_draws";
    case Errc::r_cap_exceeded: return "r_cap_exceeded";
    case Errc::multiplicity_mismatch: return "multiplicity_mismatch";
    case Errc::not_numerical_semigroup: return "not_numerical_semigroup";
    case Errc::parse_error: return "parse_error";
    case Errc::semantic_error: return "semantic_error";
    case Errc::overflow: return "overflow";
    case Errc::bad_argument: return "bad_argument";
  }
  return "unknown";
}

// ---- primality ------------------------------------------------------------

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for all 64-bit inputs with this witness set
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---- FieldSpec ------------------------------------------------------------

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime_u64(p))
    fail(Errc::bad_argument, "field characteristic must be prime, got " +
                                 std::to_string(p));
  // squaring residues must not overflow the 128-bit product path; any
  // word-size prime is fine, but keep p below 2^62 so r*r fits comfortably.
  if (p >= (1ull << 62))
    fail(Errc::bad_argument, "prime too large: " + std::to_string(p));
  return FieldSpec(Kind::prime, p);
}

std::string FieldSpec::str() const {
  if (kind_ == Kind::rational) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

// ---- FieldElement ---------------------------------------------------------

FieldElement FieldElement::from_integer(const FieldSpec& f, long long n) {
  if (f.kind() == FieldSpec::Kind::rational)
    return FieldElement(mpq_class(static_cast<long>(n)));
  std::uint64_t p = f.characteristic();
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return FieldElement(Fp{static_cast<std::uint64_t>(r), p});
}

FieldElement FieldElement::from_integer(const FieldSpec& f, const mpz_class& n) {
  if (f.kind() == FieldSpec::Kind::rational) return FieldElement(mpq_class(n));
  std::uint64_t p = f.characteristic();
  mpz_class r = n % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += mpz_class(static_cast<unsigned long>(p));
  return FieldElement(Fp{static_cast<std::uint64_t>(r.get_ui()), p});
}

FieldElement FieldElement::rational(long long num, long long den) {
  if (den == 0) fail(Errc::division_by_zero, "rational with zero denominator");
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return FieldElement(std::move(q));
}

FieldSpec FieldElement::spec() const {
  if (std::holds_alternative<Fp>(v_))
    return FieldSpec::prime(std::get<Fp>(v_).p);
  return FieldSpec::rationals();
}

bool FieldElement::is_zero() const {
  if (const Fp* f = std::get_if<Fp>(&v_)) return f->r == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool FieldElement::is_one() const {
  if (const Fp* f = std::get_if<Fp>(&v_)) return f->r == 1 % f->p;
  return std::get<mpq_class>(v_) == 1;
}

namespace {

[[noreturn]] void mixed() {
  fail(Errc::mixed_fields, "operands lie in different fields");
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (const Fp* a = std::get_if<Fp>(&v_)) {
    const Fp* b = std::get_if<Fp>(&o.v_);
    if (!b || a->p != b->p) mixed();
    std::uint64_t r = a->r + b->r;
    if (r >= a->p) r -= a->p;
    return FieldElement(Fp{r, a->p});
  }
  const mpq_class* b = std::get_if<mpq_class>(&o.v_);
  if (!b) mixed();
  return FieldElement(mpq_class(std::get<mpq_class>(v_) + *b));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (const Fp* a = std::get_if<Fp>(&v_)) {
    const Fp* b = std::get_if<Fp>(&o.v_);
    if (!b || a->p != b->p) mixed();
    return FieldElement(Fp{mulmod_u64(a->r, b->r, a->p), a->p});
  }
  const mpq_class* b = std::get_if<mpq_class>(&o.v_);
  if (!b) mixed();
  return FieldElement(mpq_class(std::get<mpq_class>(v_) * *b));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  if (const Fp* a = std::get_if<Fp>(&v_)) {
    return FieldElement(Fp{a->r == 0 ? 0 : a->p - a->r, a->p});
  }
  return FieldElement(mpq_class(-std::get<mpq_class>(v_)));
}

FieldElement FieldElement::inverse() const {
  if (const Fp* a = std::get_if<Fp>(&v_)) {
    if (a->r == 0) fail(Errc::division_by_zero, "inverse of zero");
    // extended Euclid on (r, p)
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(a->p);
    long long nr = static_cast<long long>(a->r);
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<long long>(a->p);
    return FieldElement(Fp{static_cast<std::uint64_t>(t), a->p});
  }
  const mpq_class& q = std::get<mpq_class>(v_);
  if (q == 0) fail(Errc::division_by_zero, "inverse of zero");
  return FieldElement(mpq_class(1 / q));
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (const Fp* a = std::get_if<Fp>(&v_)) {
    const Fp* b = std::get_if<Fp>(&o.v_);
    return b && *a == *b;
  }
  const mpq_class* b = std::get_if<mpq_class>(&o.v_);
  return b && std::get<mpq_class>(v_) == *b;
}

std::string FieldElement::str() const {
  if (const Fp* a = std::get_if<Fp>(&v_)) return std::to_string(a->r);
  return std::get<mpq_class>(v_).get_str();
}

std::uint64_t FieldElement::residue() const {
  if (const Fp* a = std::get_if<Fp>(&v_)) return a->r;
  fail(Errc::bad_argument, "residue() on a rational element");
}

const mpq_class& FieldElement::rat() const {
  if (const mpq_class* q = std::get_if<mpq_class>(&v_)) return *q;
  fail(Errc::bad_argument, "rat() on a prime-field element");
}

FieldElement field_ops(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  fail(Errc::bad_argument, "unknown field op");
}

FieldElement field_inverse(const FieldElement& a) { return a.inverse(); }

}  // namespace redinv
