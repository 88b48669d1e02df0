#ifndef REDINV_INVARIANTS_HPP
#define REDINV_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "redinv/rings.hpp"

namespace redinv {

inline constexpr int kDefaultNCap = 30;
inline constexpr int kDefaultRCap = 10;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kDefaultMaxDraws = 64;

/// λ(A/K) for fully homogeneous data (I_A and K), by staircase counting.
/// not_homogeneous if either is inhomogeneous; not_m_primary if the
/// staircase is infinite.
std::uint64_t colength_homogeneous(const RingPtr& R, const IdealHandle& K);

/// λ(A_m/K) by m-adic truncation: dim S/(I_A + K + m^N) for rising N until
/// two consecutive values agree. no_stabilization at nCap (diagnostic of a
/// non-m-primary K, message reports the growth pattern).
std::uint64_t colength_local(const RingPtr& R, const IdealHandle& K,
                             int nCap = kDefaultNCap);

/// Homogeneous path when both I_A and K are homogeneous, else truncation.
std::uint64_t colength(const RingPtr& R, const IdealHandle& K,
                       int nCap = kDefaultNCap);

/// λ(M/N) = λ(A/N) − λ(A/M) for N ⊆ M (containment verified ambiently).
std::uint64_t length_quotient(const RingPtr& R, const IdealHandle& N,
                              const IdealHandle& M, int nCap = kDefaultNCap);

/// μ(K) = λ(K/mK) = λ(A/mK) − λ(A/K) (Nakayama; never by list inspection).
std::uint64_t mu(const RingPtr& R, const IdealHandle& K,
                 int nCap = kDefaultNCap);

/// λ(A/m^n) for n = 1..nMax. Requires nMax ≥ dim + 2.
std::vector<std::uint64_t> hilbert_samuel(const RingPtr& R, int nMax,
                                          int nCap = kDefaultNCap);

struct MultiplicityMethod {
  enum class Kind { via_reduction, via_differences };
  Kind kind = Kind::via_differences;
  std::uint64_t seed = kDefaultSeed;  // via_reduction only

  static MultiplicityMethod differences() { return {}; }
  static MultiplicityMethod reduction(std::uint64_t seed) {
    return {Kind::via_reduction, seed};
  }
};

/// Hilbert–Samuel multiplicity e₀^I(A). via_differences: d-th finite
/// differences of λ(A/I^n), accepted after three equal consecutive values.
/// via_reduction (CM only): λ(A/J) for a sampled minimal reduction J.
std::uint64_t multiplicity(const RingPtr& R, const IdealHandle& I,
                           MultiplicityMethod method = {},
                           int nCap = kDefaultNCap);

enum class CmStatus { cm, not_cm, inconclusive };
const char* cm_status_name(CmStatus s);

/// λ(A/J) = e₀(m) for a sampled minimal reduction J iff A is CM.
CmStatus check_cohen_macaulay(const RingPtr& R,
                              std::uint64_t seed = kDefaultSeed);

struct InvariantReport {
  std::string ring;
  int d = 0;
  std::uint64_t e = 0;
  std::uint64_t mu_m = 0;
  std::uint64_t mu_m2 = 0;
  long long predicted_lambda3 = 0;
  std::map<std::string, std::string> methods;
  std::uint64_t seed = 0;
};

/// C(n,2) with C(0,2) = C(1,2) = 0 — the convention reconciling d = 1.
inline long long choose2(long long n) {
  return n >= 2 ? n * (n - 1) / 2 : 0;
}

}  // namespace redinv

#endif
