#ifndef REDINV_RINGS_HPP
#define REDINV_RINGS_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "redinv/groebner.hpp"

namespace redinv {

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

/// A = S/I_A with S = field[variables], maximal ideal m = (x_1..x_n)A.
/// Immutable after construction except for internal guarded memo tables.
class RingPresentation {
 public:
  static RingPtr make(FieldSpec field, std::vector<std::string> variables,
                      std::vector<Polynomial> definingGens, TermOrder order,
                      std::optional<int> dimOverride, bool cmAsserted,
                      std::string name);

  const FieldSpec& field() const { return field_; }
  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Polynomial>& defining_gens() const { return defining_; }
  const GroebnerBasis& defining_basis() const { return gb_; }
  TermOrder order() const { return ord_; }
  int dim() const { return dim_; }
  bool dim_overridden() const { return dimOverridden_; }
  bool cm_asserted() const { return cm_; }
  const std::string& name() const { return name_; }
  bool defining_homogeneous() const { return definingHomog_; }

  /// Canonical key of a generator list (sorted canonical strings).
  std::string canonical_key(const std::vector<Polynomial>& gens) const;

  /// Memoized reduced basis of I_A + (gens).
  std::shared_ptr<const GroebnerBasis> basis_with(
      const std::vector<Polynomial>& gens) const;

  /// Guarded length memo, keyed by caller-composed strings.
  std::optional<std::uint64_t> memo_get(const std::string& key) const;
  void memo_put(const std::string& key, std::uint64_t value) const;

 private:
  RingPresentation() = default;

  FieldSpec field_ = FieldSpec::rationals();
  std::vector<std::string> vars_;
  std::vector<Polynomial> defining_;
  TermOrder ord_ = TermOrder::degrevlex;
  GroebnerBasis gb_;
  int dim_ = 0;
  bool dimOverridden_ = false;
  bool cm_ = false;
  bool definingHomog_ = true;
  std::string name_;

  mutable std::mutex memoMu_;
  mutable std::unordered_map<std::string, std::uint64_t> lengths_;
  mutable std::unordered_map<std::string, std::shared_ptr<const GroebnerBasis>>
      bases_;
};

/// Spec-surface constructor.
RingPtr make_ring(FieldSpec field, std::vector<std::string> variables,
                  std::vector<Polynomial> definingGens, TermOrder order,
                  std::optional<int> dimOverride = std::nullopt,
                  bool cmAsserted = false, std::string name = "ring");

/// Ideal of A given by lifted generators in the ambient variables.
struct IdealHandle {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// Validates field/arity/order against the ring; drops zero generators.
IdealHandle make_ideal(RingPtr ring, std::vector<Polynomial> gens);
IdealHandle maximal_ideal(const RingPtr& ring);
IdealHandle zero_ideal(const RingPtr& ring);
IdealHandle unit_ideal(const RingPtr& ring);

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_power(const IdealHandle& I, unsigned k);

/// Ambient membership: normal_form(f, GB(I ∪ I_A)) = 0. Exact for
/// homogeneous data; sufficient in general (see invariants for local paths).
bool contains(const IdealHandle& I, const Polynomial& f);

/// Per-generator homogeneity of the listed generators.
bool is_homogeneous(const IdealHandle& I);

/// Flags generators lying in I_A (normal form 0 modulo GB(I_A)).
std::vector<bool> redundant_generator_flags(const IdealHandle& I);

}  // namespace redinv

#endif
