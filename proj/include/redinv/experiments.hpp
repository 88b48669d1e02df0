#ifndef REDINV_EXPERIMENTS_HPP
#define REDINV_EXPERIMENTS_HPP

#include <cstdint>
#include <string>

#include "json.hpp"
#include "redinv/invariants.hpp"
#include "redinv/reduction.hpp"
#include "redinv/rings.hpp"

namespace redinv {

/// A self-contained, replayable record of one experiment run. The payload
/// embeds the ring presentation, the master seed, and every per-sample
/// derived seed, so re-running from the report reproduces the numbers
/// byte-for-byte (the "duration_ms" field is the one nondeterministic key).
struct ExperimentReport {
  nlohmann::json payload;

  bool pass() const { return payload.at("verdict") == "pass"; }
  std::string name() const { return payload.at("experiment"); }
  /// Serialization with sorted keys and stable formatting.
  std::string dump(int indent = 2) const { return payload.dump(indent); }
};

/// JSON form of a ring presentation, sufficient to rebuild the ring.
nlohmann::json ring_to_json(const RingPtr& R);

/// JSON form of an invariant report (keys: ring, d, e, mu_m, mu_m2,
/// predicted_lambda3, methods, seed).
nlohmann::json invariant_report_json(const InvariantReport& rep);

/// λ(I/J) = e₀(I) − λ(A/I) over `samples` sampled minimal reductions J.
ExperimentReport verify_serre(const RingPtr& R, const IdealHandle& I,
                              int samples, std::uint64_t seed);

/// λ(I²/JI) = e₀(I) + (d−1)λ(A/I) − λ(I/I²) over sampled reductions.
ExperimentReport verify_valabrega_valla(const RingPtr& R,
                                        const IdealHandle& I, int samples,
                                        std::uint64_t seed);

/// λ(m³/Jm²) = e + (d−1)μ(m) − μ(m²) − C(d−1,2) over sampled reductions,
/// plus constancy across samples, the proof-chain identity
/// λ(Jm/Jm²) = μ(m²) + λ(m³/Jm²) − (e − (1 + μ(m) − d)), and the d = 1
/// specialization μ(m²) + λ(m³/Jm²) = e. A ring that fails the CM check
/// yields verdict fail with a diagnosis (the hypothesis is violated).
ExperimentReport verify_theorem1(const RingPtr& R, int samples,
                                 std::uint64_t seed);

/// λ(Jm/Jm²) = dμ(m) − C(d,2) over sampled reductions; requires d ≥ 2.
ExperimentReport verify_koszul_count(const RingPtr& R, int samples,
                                     std::uint64_t seed);

/// The bundled two-variable example: I = (x⁷, x⁶y, x²y⁵, y⁷) with
/// J₁ = (x⁷, y⁷) and J₂ = (x⁷, x⁶y + y⁷), run over GF(32003) and again
/// over Q. Pass iff λ(I³/J₁I²) = 3, λ(I³/J₂I²) = 2, and both J are
/// verified minimal reductions, in both characteristics.
ExperimentReport reproduce_huckaba();

/// Distribution scan of λ(m^{n+1}/Jm^n) over sampled minimal reductions.
/// Reports the value multiset with min/max and whether all samples agree;
/// a non-constant observation is flagged, never asserted as a conclusion.
/// Requires n ≥ 3. Completing the scan is verdict pass by definition.
ExperimentReport scan_question(const RingPtr& R, int n, int samples,
                               std::uint64_t seed);

/// d, e (by finite differences AND by reduction colength — they must
/// agree), μ(m), μ(m²), and the predicted λ(m³/Jm²).
/// multiplicity_mismatch if the two e computations disagree.
InvariantReport invariant_report(const RingPtr& R, std::uint64_t seed);

}  // namespace redinv

#endif
