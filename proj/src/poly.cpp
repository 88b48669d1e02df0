#include "redinv/poly.hpp"

#include <algorithm>
#include <map>

namespace redinv {

// ---- monomial helpers -------------------------------------------------------

bool monomial_divides(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    fail(Errc::arity_mismatch, "monomials of different arity");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    fail(Errc::arity_mismatch, "monomials of different arity");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial monomial_div(const Monomial& b, const Monomial& a) {
  if (a.size() != b.size())
    fail(Errc::arity_mismatch, "monomials of different arity");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) fail(Errc::bad_argument, "monomial division not exact");
    r[i] = b[i] - a[i];
  }
  return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    fail(Errc::arity_mismatch, "monomials of different arity");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool monomial_coprime(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    fail(Errc::arity_mismatch, "monomials of different arity");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

bool monomial_less(const Monomial& a, const Monomial& b, TermOrder ord) {
  if (a.size() != b.size())
    fail(Errc::arity_mismatch, "monomials of different arity");
  switch (ord) {
    case TermOrder::lex: {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    }
    case TermOrder::deglex: {
      std::uint64_t da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    }
    case TermOrder::degrevlex: {
      std::uint64_t da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db;
      // scan from the last variable: the one with the LARGER exponent at
      // the first difference is the smaller monomial
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
      return false;
    }
  }
  fail(Errc::bad_argument, "unknown term order");
}

std::string monomial_str(const Monomial& m,
                         const std::vector<std::string>& names) {
  if (m.size() != names.size())
    fail(Errc::arity_mismatch, "names/arity mismatch");
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

// ---- Polynomial --------------------------------------------------------------

namespace {

struct MonoKeyLess {
  TermOrder ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_less(a, b, ord);
  }
};

}  // namespace

Polynomial Polynomial::make(FieldSpec field, std::size_t arity, TermOrder ord,
                            std::vector<Term> terms) {
  std::map<Monomial, FieldElement, MonoKeyLess> acc{MonoKeyLess{ord}};
  for (auto& t : terms) {
    if (t.mono.size() != arity)
      fail(Errc::arity_mismatch, "term arity does not match polynomial arity");
    if (!(t.coeff.spec() == field))
      fail(Errc::mixed_fields, "coefficient field does not match polynomial");
    auto it = acc.find(t.mono);
    if (it == acc.end())
      acc.emplace(std::move(t.mono), std::move(t.coeff));
    else
      it->second = it->second + t.coeff;
  }
  Polynomial p(field, arity, ord);
  // map iterates ascending; we want descending
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) p.terms_.push_back(Term{it->second, it->first});
  return p;
}

Polynomial Polynomial::constant(FieldSpec field, std::size_t arity,
                                TermOrder ord, const FieldElement& c) {
  return make(field, arity, ord, {Term{c, Monomial(arity, 0)}});
}

Polynomial Polynomial::variable(FieldSpec field, std::size_t arity,
                                TermOrder ord, std::size_t i) {
  if (i >= arity) fail(Errc::bad_argument, "variable index out of range");
  Monomial m(arity, 0);
  m[i] = 1;
  return make(field, arity, ord, {Term{FieldElement::one(field), std::move(m)}});
}

Polynomial Polynomial::monomial(FieldSpec field, std::size_t arity,
                                TermOrder ord, Monomial m,
                                const FieldElement& c) {
  return make(field, arity, ord, {Term{c, std::move(m)}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) fail(Errc::zero_polynomial, "leading term of zero");
  return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const {
  return leading_term().mono;
}

const FieldElement& Polynomial::leading_coeff() const {
  return leading_term().coeff;
}

std::uint64_t Polynomial::degree() const {
  if (terms_.empty()) fail(Errc::zero_polynomial, "degree of zero");
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = total_degree(terms_.front().mono);
  for (const auto& t : terms_)
    if (total_degree(t.mono) != d) return false;
  return true;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(field_ == o.field_)) fail(Errc::mixed_fields, "polynomial fields differ");
  if (arity_ != o.arity_) fail(Errc::arity_mismatch, "polynomial arities differ");
  if (ord_ != o.ord_) fail(Errc::bad_argument, "polynomial term orders differ");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  // merge two descending term lists
  Polynomial r(field_, arity_, ord_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[j];
    if (a.mono == b.mono) {
      FieldElement c = a.coeff + b.coeff;
      if (!c.is_zero()) r.terms_.push_back(Term{std::move(c), a.mono});
      ++i;
      ++j;
    } else if (monomial_less(b.mono, a.mono, ord_)) {
      r.terms_.push_back(a);
      ++i;
    } else {
      r.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, arity_, ord_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{-t.coeff, t.mono});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::times_term(const FieldElement& c,
                                  const Monomial& m) const {
  if (m.size() != arity_) fail(Errc::arity_mismatch, "term arity mismatch");
  if (c.is_zero()) return Polynomial(field_, arity_, ord_);
  Polynomial r(field_, arity_, ord_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.coeff * c, monomial_mul(t.mono, m)});
  return r;  // multiplying by a fixed term preserves the descending order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::map<Monomial, FieldElement, MonoKeyLess> acc{MonoKeyLess{ord_}};
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = monomial_mul(a.mono, b.mono);
      FieldElement c = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second = it->second + c;
    }
  }
  Polynomial r(field_, arity_, ord_);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) r.terms_.push_back(Term{it->second, it->first});
  return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  return times_term(c, Monomial(arity_, 0));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coeff().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(field_ == o.field_) || arity_ != o.arity_ || ord_ != o.ord_)
    return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::with_order(TermOrder ord) const {
  if (ord == ord_) return *this;
  return make(field_, arity_, ord, terms_);
}

namespace {

/// Balanced representative for prime-field coefficients: residues above
/// p/2 print as their negative lift, so -1 renders "-1", not "32002".
std::string coeff_display(const FieldElement& c) {
  const FieldSpec f = c.spec();
  if (f.kind() == FieldSpec::Kind::prime) {
    std::uint64_t r = c.residue();
    std::uint64_t p = f.characteristic();
    if (r > p / 2) return "-" + std::to_string(p - r);
  }
  return c.str();
}

}  // namespace

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string c = coeff_display(t.coeff);
    bool neg = !c.empty() && c[0] == '-';
    if (i == 0) {
      // keep sign as-is
    } else {
      s += neg ? " - " : " + ";
      if (neg) c = c.substr(1);
    }
    bool is_const = total_degree(t.mono) == 0;
    bool unit_coeff = (c == "1");
    if (is_const) {
      s += c;
    } else if (unit_coeff) {
      s += monomial_str(t.mono, names);
    } else {
      s += c + "*" + monomial_str(t.mono, names);
    }
  }
  return s;
}

// ---- spec surface ------------------------------------------------------------

Cmp compare_monomials(TermOrder order, const Monomial& a, const Monomial& b) {
  if (monomial_less(a, b, order)) return Cmp::less;
  if (monomial_less(b, a, order)) return Cmp::greater;
  return Cmp::equal;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::add: return f + g;
    case PolyOp::sub: return f - g;
    case PolyOp::mul: return f * g;
  }
  fail(Errc::bad_argument, "unknown poly op");
}

Term leading_term(const Polynomial& f, TermOrder order) {
  if (f.is_zero()) fail(Errc::zero_polynomial, "leading term of zero");
  if (order == f.order()) return f.leading_term();
  const Term* best = &f.terms().front();
  for (const Term& t : f.terms())
    if (monomial_less(best->mono, t.mono, order)) best = &t;
  return *best;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        TermOrder order) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero())
    fail(Errc::zero_polynomial, "s-polynomial of zero");
  Polynomial fo = f.with_order(order);
  Polynomial go = g.with_order(order);
  Monomial l = monomial_lcm(fo.leading_monomial(), go.leading_monomial());
  Polynomial a = fo.times_term(fo.leading_coeff().inverse(),
                               monomial_div(l, fo.leading_monomial()));
  Polynomial b = go.times_term(go.leading_coeff().inverse(),
                               monomial_div(l, go.leading_monomial()));
  return a - b;
}

const char* term_order_name(TermOrder ord) {
  switch (ord) {
    case TermOrder::degrevlex:
      return "degrevlex";
    case TermOrder::deglex:
      return "deglex";
    case TermOrder::lex:
      return "lex";
  }
  return "degrevlex";
}

}  // namespace redinv
