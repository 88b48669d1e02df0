#include "redinv/rings.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace redinv {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

}  // namespace

RingPtr RingPresentation::make(FieldSpec field,
                               std::vector<std::string> variables,
                               std::vector<Polynomial> definingGens,
                               TermOrder order, std::optional<int> dimOverride,
                               bool cmAsserted, std::string name) {
  if (variables.empty())
    fail(Errc::bad_variable_names, "a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_identifier(v))
      fail(Errc::bad_variable_names, "bad variable name '" + v + "'");
    if (v == "m")
      fail(Errc::bad_variable_names,
           "'m' is reserved for the maximal ideal");
    if (!seen.insert(v).second)
      fail(Errc::bad_variable_names, "duplicate variable name '" + v + "'");
  }
  auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
  ring->field_ = field;
  ring->vars_ = std::move(variables);
  ring->ord_ = order;
  ring->cm_ = cmAsserted;
  ring->name_ = std::move(name);
  for (auto& g : definingGens) {
    if (!(g.field() == field))
      fail(Errc::mixed_fields, "defining generator in a different field");
    if (g.arity() != ring->vars_.size())
      fail(Errc::arity_mismatch, "defining generator arity mismatch");
    if (!g.is_zero()) ring->defining_.push_back(g.with_order(order));
  }
  ring->gb_ = buchberger(ring->defining_, order);
  for (const auto& g : ring->gb_.generators)
    if (total_degree(g.leading_monomial()) == 0)
      fail(Errc::unit_defining_ideal, "defining ideal is the unit ideal");
  ring->definingHomog_ = true;
  for (const auto& g : ring->defining_)
    if (!g.is_homogeneous()) ring->definingHomog_ = false;
  if (dimOverride) {
    if (*dimOverride < 0) fail(Errc::bad_argument, "dim override < 0");
    ring->dim_ = *dimOverride;
    ring->dimOverridden_ = true;
  } else {
    ring->dim_ = monomial_ideal_dimension(leading_monomials(ring->gb_),
                                          ring->vars_.size());
  }
  return ring;
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> variables,
                  std::vector<Polynomial> definingGens, TermOrder order,
                  std::optional<int> dimOverride, bool cmAsserted,
                  std::string name) {
  return RingPresentation::make(field, std::move(variables),
                                std::move(definingGens), order, dimOverride,
                                cmAsserted, std::move(name));
}

std::string RingPresentation::canonical_key(
    const std::vector<Polynomial>& gens) const {
  std::vector<std::string> parts;
  parts.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_zero()) parts.push_back(g.with_order(ord_).str(vars_));
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::string key;
  for (const auto& p : parts) {
    key += p;
    key += '|';
  }
  return key;
}

std::shared_ptr<const GroebnerBasis> RingPresentation::basis_with(
    const std::vector<Polynomial>& gens) const {
  std::string key = canonical_key(gens);
  std::lock_guard<std::mutex> lock(memoMu_);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  std::vector<Polynomial> all = defining_;
  for (const auto& g : gens) all.push_back(g);
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(all, ord_));
  bases_.emplace(std::move(key), basis);
  return basis;
}

std::optional<std::uint64_t> RingPresentation::memo_get(
    const std::string& key) const {
  std::lock_guard<std::mutex> lock(memoMu_);
  auto it = lengths_.find(key);
  if (it == lengths_.end()) return std::nullopt;
  return it->second;
}

void RingPresentation::memo_put(const std::string& key,
                                std::uint64_t value) const {
  std::lock_guard<std::mutex> lock(memoMu_);
  lengths_.emplace(key, value);
}

// ---- ideals -------------------------------------------------------------------

IdealHandle make_ideal(RingPtr ring, std::vector<Polynomial> gens) {
  if (!ring) fail(Errc::bad_argument, "null ring");
  IdealHandle I;
  I.ring = ring;
  for (auto& g : gens) {
    if (!(g.field() == ring->field()))
      fail(Errc::mixed_fields, "ideal generator in a different field");
    if (g.arity() != ring->arity())
      fail(Errc::arity_mismatch, "ideal generator arity mismatch");
    if (!g.is_zero()) I.generators.push_back(g.with_order(ring->order()));
  }
  return I;
}

IdealHandle maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    gens.push_back(Polynomial::variable(ring->field(), ring->arity(),
                                        ring->order(), i));
  return make_ideal(ring, std::move(gens));
}

IdealHandle zero_ideal(const RingPtr& ring) { return make_ideal(ring, {}); }

IdealHandle unit_ideal(const RingPtr& ring) {
  return make_ideal(
      ring, {Polynomial::constant(ring->field(), ring->arity(), ring->order(),
                                  FieldElement::one(ring->field()))});
}

namespace {

void check_same_ring(const IdealHandle& I, const IdealHandle& J) {
  if (I.ring.get() != J.ring.get())
    fail(Errc::ring_mismatch, "ideals live in different rings");
}

// cheap generator dedup by canonical string
std::vector<Polynomial> dedup(const RingPtr& ring,
                              std::vector<Polynomial> gens) {
  std::set<std::string> seen;
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    std::string s = g.str(ring->variables());
    if (seen.insert(std::move(s)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
  check_same_ring(I, J);
  std::vector<Polynomial> gens = I.generators;
  for (const auto& g : J.generators) gens.push_back(g);
  IdealHandle out;
  out.ring = I.ring;
  out.generators = dedup(I.ring, std::move(gens));
  return out;
}

IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J) {
  check_same_ring(I, J);
  std::vector<Polynomial> gens;
  gens.reserve(I.generators.size() * J.generators.size());
  for (const auto& a : I.generators)
    for (const auto& b : J.generators) gens.push_back(a * b);
  IdealHandle out;
  out.ring = I.ring;
  out.generators = dedup(I.ring, std::move(gens));
  return out;
}

IdealHandle ideal_power(const IdealHandle& I, unsigned k) {
  if (k == 0) return unit_ideal(I.ring);
  IdealHandle out = I;
  for (unsigned i = 1; i < k; ++i) out = ideal_product(out, I);
  return out;
}

bool contains(const IdealHandle& I, const Polynomial& f) {
  if (f.arity() != I.ring->arity() || !(f.field() == I.ring->field()))
    fail(Errc::ring_mismatch, "polynomial does not live in the ideal's ring");
  if (f.is_zero()) return true;
  auto basis = I.ring->basis_with(I.generators);
  return in_ideal(f.with_order(I.ring->order()), *basis);
}

bool is_homogeneous(const IdealHandle& I) {
  for (const auto& g : I.generators)
    if (!g.is_homogeneous()) return false;
  return true;
}

std::vector<bool> redundant_generator_flags(const IdealHandle& I) {
  std::vector<bool> flags;
  flags.reserve(I.generators.size());
  for (const auto& g : I.generators)
    flags.push_back(
        normal_form(g, I.ring->defining_basis().generators).is_zero());
  return flags;
}

}  // namespace redinv
