#ifndef REDINV_REDUCTION_HPP
#define REDINV_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "redinv/invariants.hpp"
#include "redinv/rings.hpp"

namespace redinv {

/// One draw of d random combinations of I's listed generators.
struct ReductionSample {
  enum class Status { verified, rejected };

  IdealHandle J;
  std::vector<std::vector<FieldElement>> coefficientMatrix;  // d × μ-list
  Status status = Status::rejected;
  std::string rejectReason;
  int reductionNumber = -1;  // -1 = unknown
  std::uint64_t seed = 0;
  std::uint64_t drawIndex = 0;
};

/// Smallest r ≤ rCap with λ(I^{r+1}/JI^r) = 0 (the Northcott–Rees test,
/// evaluated locally), or nullopt. containment_failed unless J ⊆ I.
std::optional<int> is_reduction(const RingPtr& R, const IdealHandle& J,
                                const IdealHandle& I, int rCap = kDefaultRCap);

/// is_reduction succeeds ∧ the listed generator count is d ∧ μ(J) = d.
bool is_minimal_reduction(const RingPtr& R, const IdealHandle& J,
                          const IdealHandle& I, int rCap = kDefaultRCap);

/// Draws coefficient matrices uniform over F_p until a verified minimal
/// reduction appears; deterministic per (seed, draw index).
/// exhausted_draws after maxDraws rejections.
ReductionSample sample_minimal_reduction(const RingPtr& R,
                                         const IdealHandle& I,
                                         std::uint64_t seed = kDefaultSeed,
                                         int maxDraws = kDefaultMaxDraws,
                                         int rCap = kDefaultRCap);

/// The r of is_reduction for a minimal reduction J; r_cap_exceeded if the
/// test does not close by rCap.
int reduction_number(const RingPtr& R, const IdealHandle& J,
                     const IdealHandle& I, int rCap = kDefaultRCap);

// deterministic seed/stream helpers (shared with experiments)
std::uint64_t splitmix64_next(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);
/// Uniform value in [0, bound) by rejection; identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace redinv

#endif
