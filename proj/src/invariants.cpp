#include "redinv/invariants.hpp"

#include <algorithm>

#include "redinv/reduction.hpp"

namespace redinv {

namespace {

void degree_monomials_rec(std::size_t arity, std::uint32_t left,
                          std::size_t pos, Monomial& cur,
                          std::vector<Monomial>& out) {
  if (pos + 1 == arity) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e <= left; ++e) {
    cur[pos] = e;
    degree_monomials_rec(arity, left - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Monomial> degree_monomials(std::size_t arity, std::uint32_t deg) {
  std::vector<Monomial> out;
  Monomial cur(arity, 0);
  degree_monomials_rec(arity, deg, 0, cur, out);
  return out;
}

bool basis_is_unit(const GroebnerBasis& G) {
  for (const auto& g : G.generators)
    if (total_degree(g.leading_monomial()) == 0) return true;
  return false;
}

}  // namespace

std::uint64_t colength_homogeneous(const RingPtr& R, const IdealHandle& K) {
  if (K.ring.get() != R.get())
    fail(Errc::ring_mismatch, "ideal does not live in the given ring");
  if (!R->defining_homogeneous())
    fail(Errc::not_homogeneous, "defining ideal is not homogeneous");
  if (!is_homogeneous(K))
    fail(Errc::not_homogeneous, "ideal generators are not homogeneous");
  std::string key = "H:" + R->canonical_key(K.generators);
  if (auto hit = R->memo_get(key)) return *hit;
  auto basis = R->basis_with(K.generators);
  std::uint64_t count;
  try {
    count = staircase_count(*basis, R->arity());
  } catch (const Error& e) {
    if (e.code() == Errc::infinite_staircase)
      fail(Errc::not_m_primary,
           "quotient has infinite length (ideal is not m-primary)");
    throw;
  }
  R->memo_put(key, count);
  return count;
}

std::uint64_t colength_local(const RingPtr& R, const IdealHandle& K,
                             int nCap) {
  if (K.ring.get() != R.get())
    fail(Errc::ring_mismatch, "ideal does not live in the given ring");
  if (nCap < 2) fail(Errc::bad_argument, "nCap must be at least 2");
  std::string key = "L:" + R->canonical_key(K.generators);
  if (auto hit = R->memo_get(key)) return *hit;

  auto base = R->basis_with(K.generators);
  if (basis_is_unit(*base)) {
    R->memo_put(key, 0);
    return 0;
  }

  std::vector<std::uint64_t> values;
  for (int N = 1; N <= nCap; ++N) {
    // degree-N monomials not already in the ideal; if none survive then
    // m^N is contained and the affine count is already the local answer
    std::vector<Polynomial> gens = base->generators;
    bool fresh = false;
    for (const auto& mono : degree_monomials(R->arity(),
                                             static_cast<std::uint32_t>(N))) {
      Polynomial f = Polynomial::monomial(R->field(), R->arity(), R->order(),
                                          mono, FieldElement::one(R->field()));
      if (!normal_form(f, base->generators).is_zero()) {
        gens.push_back(std::move(f));
        fresh = true;
      }
    }
    std::uint64_t v;
    if (!fresh) {
      v = staircase_count(*base, R->arity());
      R->memo_put(key, v);
      return v;
    }
    v = staircase_count(buchberger(gens, R->order()), R->arity());
    if (!values.empty() && values.back() == v) {
      R->memo_put(key, v);
      return v;
    }
    values.push_back(v);
  }
  std::string pattern;
  for (std::uint64_t v : values) pattern += std::to_string(v) + " ";
  fail(Errc::no_stabilization,
       "truncated dimensions keep growing up to nCap = " +
           std::to_string(nCap) + " (ideal not m-primary?): " + pattern);
}

std::uint64_t colength(const RingPtr& R, const IdealHandle& K, int nCap) {
  if (R->defining_homogeneous() && is_homogeneous(K))
    return colength_homogeneous(R, K);
  return colength_local(R, K, nCap);
}

std::uint64_t length_quotient(const RingPtr& R, const IdealHandle& N,
                              const IdealHandle& M, int nCap) {
  for (const auto& g : N.generators)
    if (!contains(M, g))
      fail(Errc::containment_failed,
           "numerator ideal is not contained in the denominator ideal");
  std::uint64_t a = colength(R, N, nCap);
  std::uint64_t b = colength(R, M, nCap);
  if (a < b)
    fail(Errc::containment_failed,
         "length inversion: lambda(A/N) < lambda(A/M) despite N within M");
  return a - b;
}

std::uint64_t mu(const RingPtr& R, const IdealHandle& K, int nCap) {
  if (K.generators.empty()) return 0;
  IdealHandle mK = ideal_product(maximal_ideal(R), K);
  std::uint64_t a = colength(R, mK, nCap);
  std::uint64_t b = colength(R, K, nCap);
  if (a < b) fail(Errc::containment_failed, "length inversion in mu");
  return a - b;
}

std::vector<std::uint64_t> hilbert_samuel(const RingPtr& R, int nMax,
                                          int nCap) {
  if (nMax < R->dim() + 2)
    fail(Errc::bad_argument, "nMax must be at least dim + 2");
  std::vector<std::uint64_t> out;
  IdealHandle m = maximal_ideal(R);
  IdealHandle mn = m;
  for (int n = 1; n <= nMax; ++n) {
    out.push_back(colength(R, mn, nCap));
    if (n < nMax) mn = ideal_product(mn, m);
  }
  return out;
}

namespace {

std::uint64_t multiplicity_via_differences(const RingPtr& R,
                                           const IdealHandle& I, int nCap) {
  const int d = R->dim();
  const int nMaxDiff = 40;
  std::vector<std::uint64_t> vals;  // λ(A/I^n), n = 1..
  IdealHandle In = I;
  std::vector<long long> lastDiffs;
  for (int n = 1; n <= nMaxDiff; ++n) {
    vals.push_back(colength(R, In, nCap));
    // d-th finite differences of the current prefix
    std::vector<long long> diffs(vals.begin(), vals.end());
    for (int k = 0; k < d; ++k) {
      if (diffs.size() < 2) {
        diffs.clear();
        break;
      }
      std::vector<long long> next;
      for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
        next.push_back(diffs[i + 1] - diffs[i]);
      diffs = std::move(next);
    }
    std::size_t sz = diffs.size();
    if (sz >= 3 && diffs[sz - 1] == diffs[sz - 2] &&
        diffs[sz - 2] == diffs[sz - 3]) {
      long long e = diffs[sz - 1];
      if (e <= 0)
        fail(Errc::differences_not_stabilized,
             "stabilized d-th difference is not positive");
      return static_cast<std::uint64_t>(e);
    }
    if (n < nMaxDiff) In = ideal_product(In, I);
  }
  fail(Errc::differences_not_stabilized,
       "d-th differences of the Hilbert-Samuel function did not repeat "
       "three times by n = " +
           std::to_string(nMaxDiff));
}

}  // namespace

std::uint64_t multiplicity(const RingPtr& R, const IdealHandle& I,
                           MultiplicityMethod method, int nCap) {
  if (method.kind == MultiplicityMethod::Kind::via_differences)
    return multiplicity_via_differences(R, I, nCap);
  if (!R->cm_asserted())
    fail(Errc::bad_argument,
         "multiplicity via_reduction needs the CM assertion");
  ReductionSample s =
      sample_minimal_reduction(R, I, method.seed, kDefaultMaxDraws);
  return colength(R, s.J, nCap);
}

const char* cm_status_name(CmStatus s) {
  switch (s) {
    case CmStatus::cm: return "cm";
    case CmStatus::not_cm: return "not_cm";
    case CmStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

CmStatus check_cohen_macaulay(const RingPtr& R, std::uint64_t seed) {
  try {
    IdealHandle m = maximal_ideal(R);
    std::uint64_t e = multiplicity(R, m, MultiplicityMethod::differences());
    ReductionSample s = sample_minimal_reduction(R, m, seed, kDefaultMaxDraws);
    std::uint64_t lamJ = colength(R, s.J);
    if (lamJ == e) return CmStatus::cm;
    if (lamJ > e) return CmStatus::not_cm;
    return CmStatus::inconclusive;  // λ(A/J) < e cannot happen; diagnostic
  } catch (const Error&) {
    return CmStatus::inconclusive;
  }
}

}  // namespace redinv
