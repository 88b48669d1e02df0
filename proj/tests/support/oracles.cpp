#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "redinv/error.hpp"

namespace testoracle {

namespace {

using BitSet = std::vector<char>;

// All values {g + s : g in A, s in B} up to bound.
BitSet sum_sets(const BitSet& a, const BitSet& b) {
  const std::size_t n = a.size();
  BitSet out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b[j]) out[i + j] = 1;
  }
  return out;
}

std::uint64_t count_diff(const BitSet& big, const BitSet& small) {
  std::uint64_t c = 0;
  for (std::size_t v = 0; v < big.size(); ++v)
    if (big[v] && !small[v]) ++c;
  return c;
}

BitSet shift_set(const BitSet& a, std::uint64_t by) {
  BitSet out(a.size(), 0);
  for (std::size_t v = 0; v + by < a.size(); ++v)
    if (a[v]) out[v + by] = 1;
  return out;
}

// Ideal sets m^0 = A, m^1, ..., m^K as valuation sets, plus the bound used.
struct SemigroupSets {
  std::vector<BitSet> idl;  // idl[k] = valuations of m^k
  std::uint64_t e;
};

SemigroupSets semigroup_sets(const std::vector<std::uint64_t>& gens, int K) {
  if (gens.empty())
    redinv::fail(redinv::Errc::not_numerical_semigroup, "no generators");
  std::uint64_t g = 0, mx = 0;
  for (std::uint64_t a : gens) {
    if (a == 0)
      redinv::fail(redinv::Errc::not_numerical_semigroup, "zero generator");
    g = std::gcd(g, a);
    mx = std::max(mx, a);
  }
  if (g != 1)
    redinv::fail(redinv::Errc::not_numerical_semigroup,
                 "generators have gcd " + std::to_string(g));
  const std::uint64_t mn = *std::min_element(gens.begin(), gens.end());
  // Frobenius number < mn*mx; everything at stake lives below the
  // conductor shifted by (K+1) copies of the largest generator.
  const std::size_t B = mn * mx + (K + 2) * mx + 16;

  // S = the semigroup itself (with 0): valuations of A.
  BitSet S(B, 0);
  S[0] = 1;
  for (std::size_t v = 1; v < B; ++v)
    for (std::uint64_t a : gens)
      if (v >= a && S[v - a]) {
        S[v] = 1;
        break;
      }

  // kSum[k] = sums of exactly k generators.
  std::vector<BitSet> kSum(K + 1, BitSet(B, 0));
  kSum[0][0] = 1;
  for (int k = 1; k <= K; ++k)
    for (std::size_t v = 0; v < B; ++v) {
      if (!kSum[k - 1][v]) continue;
      for (std::uint64_t a : gens)
        if (v + a < B) kSum[k][v + a] = 1;
    }

  SemigroupSets out;
  out.e = mn;
  out.idl.reserve(K + 1);
  out.idl.push_back(S);
  for (int k = 1; k <= K; ++k) out.idl.push_back(sum_sets(kSum[k], S));
  return out;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

SemigroupInvariants semigroup_invariants(
    const std::vector<std::uint64_t>& gens) {
  SemigroupSets s = semigroup_sets(gens, 4);
  SemigroupInvariants inv;
  inv.e = s.e;
  inv.mu_m = count_diff(s.idl[1], s.idl[2]);
  inv.mu_m2 = count_diff(s.idl[2], s.idl[3]);
  inv.lambda3 = count_diff(s.idl[3], shift_set(s.idl[2], s.e));
  inv.lambda4 = count_diff(s.idl[4], shift_set(s.idl[3], s.e));
  return inv;
}

std::vector<std::uint64_t> semigroup_hs(const std::vector<std::uint64_t>& gens,
                                        int nMax) {
  SemigroupSets s = semigroup_sets(gens, nMax);
  std::vector<std::uint64_t> out;
  out.reserve(nMax);
  for (int n = 1; n <= nMax; ++n)
    out.push_back(count_diff(s.idl[0], s.idl[n]));
  return out;
}

std::uint64_t staircase_count_naive(const std::vector<redinv::Monomial>& gens,
                                    std::size_t arity) {
  using redinv::total_degree;
  for (const auto& g : gens)
    if (total_degree(g) == 0) return 0;
  if (arity == 0) return 1;  // only the empty monomial, not killed above
  // Box bounds from pure powers.
  std::vector<std::uint64_t> bound(arity, 0);
  for (std::size_t v = 0; v < arity; ++v) {
    std::uint64_t best = 0;
    for (const auto& g : gens) {
      bool pure = g[v] > 0;
      for (std::size_t w = 0; pure && w < arity; ++w)
        if (w != v && g[w] != 0) pure = false;
      if (pure && (best == 0 || g[v] < best)) best = g[v];
    }
    if (best == 0)
      redinv::fail(redinv::Errc::infinite_staircase,
                   "no pure power bounds variable " + std::to_string(v));
    bound[v] = best;
  }
  // Walk the whole box, test every cell against every generator.
  std::uint64_t count = 0;
  redinv::Monomial cell(arity, 0);
  while (true) {
    bool divisible = false;
    for (const auto& g : gens) {
      bool div = true;
      for (std::size_t v = 0; div && v < arity; ++v)
        if (g[v] > cell[v]) div = false;
      if (div) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;
    // Odometer increment.
    std::size_t v = 0;
    while (v < arity) {
      if (cell[v] + 1 < bound[v]) {
        ++cell[v];
        break;
      }
      cell[v] = 0;
      ++v;
    }
    if (v == arity) break;
  }
  return count;
}

std::vector<std::uint64_t> hypersurface_hs(int nvars, int s, int nMax) {
  std::vector<std::uint64_t> out;
  out.reserve(nMax);
  std::uint64_t acc = 0;
  for (int i = 0; i < nMax; ++i) {
    std::uint64_t h = binom(i + nvars - 1, nvars - 1);
    if (i >= s) h -= binom(i - s + nvars - 1, nvars - 1);
    acc += h;
    out.push_back(acc);
  }
  return out;
}

std::vector<std::uint64_t> regular_hs(int nvars, int nMax) {
  std::vector<std::uint64_t> out;
  out.reserve(nMax);
  std::uint64_t acc = 0;
  for (int i = 0; i < nMax; ++i) {
    acc += binom(i + nvars - 1, nvars - 1);
    out.push_back(acc);
  }
  return out;
}

}  // namespace testoracle
