#include "redinv/reduction.hpp"

#include <limits>

namespace redinv {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  std::uint64_t v = 0;
  for (std::uint64_t i = 0; i <= index; ++i) v = splitmix64_next(state);
  return v;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail(Errc::bad_argument, "uniform_below(0)");
  const std::uint64_t span =
      bound * (std::numeric_limits<std::uint64_t>::max() / bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= span);
  return v % bound;
}

std::optional<int> is_reduction(const RingPtr& R, const IdealHandle& J,
                                const IdealHandle& I, int rCap) {
  if (rCap < 0) fail(Errc::bad_argument, "rCap < 0");
  if (J.ring.get() != R.get() || I.ring.get() != R.get())
    fail(Errc::ring_mismatch, "ideals do not live in the given ring");
  for (const auto& g : J.generators)
    if (!contains(I, g))
      fail(Errc::containment_failed, "J is not contained in I");
  IdealHandle Ir = unit_ideal(R);  // I^r, starting at r = 0
  for (int r = 0; r <= rCap; ++r) {
    IdealHandle JIr = ideal_product(J, Ir);
    IdealHandle Ir1 = ideal_product(Ir, I);  // I^{r+1}
    try {
      if (length_quotient(R, JIr, Ir1) == 0) return r;
    } catch (const Error& e) {
      // With I m-primary, an infinite colength of JI^r certifies
      // JI^r != I^{r+1} at this r; keep iterating.
      if (e.code() != Errc::not_m_primary &&
          e.code() != Errc::no_stabilization)
        throw;
    }
    Ir = Ir1;
  }
  return std::nullopt;
}

bool is_minimal_reduction(const RingPtr& R, const IdealHandle& J,
                          const IdealHandle& I, int rCap) {
  if (J.generators.size() != static_cast<std::size_t>(R->dim())) return false;
  if (!is_reduction(R, J, I, rCap)) return false;
  return mu(R, J) == static_cast<std::uint64_t>(R->dim());
}

ReductionSample sample_minimal_reduction(const RingPtr& R,
                                         const IdealHandle& I,
                                         std::uint64_t seed, int maxDraws,
                                         int rCap) {
  if (R->field().kind() != FieldSpec::Kind::prime)
    fail(Errc::bad_argument,
         "sampling minimal reductions needs a prime coefficient field");
  if (maxDraws < 0) fail(Errc::bad_argument, "maxDraws < 0");
  const std::uint64_t p = R->field().characteristic();
  const std::size_t d = static_cast<std::size_t>(R->dim());
  const std::size_t nGens = I.generators.size();

  std::string lastReason = "no draws attempted";
  for (int k = 0; k < maxDraws; ++k) {
    ReductionSample s;
    s.seed = seed;
    s.drawIndex = static_cast<std::uint64_t>(k);
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
    std::vector<Polynomial> combos;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<FieldElement> row;
      Polynomial c = Polynomial::zero(R->field(), R->arity(), R->order());
      for (std::size_t j = 0; j < nGens; ++j) {
        FieldElement coeff = FieldElement::from_integer(
            R->field(), static_cast<long long>(uniform_below(rng, p)));
        row.push_back(coeff);
        c = c + I.generators[j].scaled(coeff);
      }
      s.coefficientMatrix.push_back(std::move(row));
      combos.push_back(std::move(c));
    }
    try {
      s.J = make_ideal(R, combos);
      if (s.J.generators.size() != d) {
        lastReason = "a combination collapsed to zero";
        continue;
      }
      auto r = is_reduction(R, s.J, I, rCap);
      if (!r) {
        lastReason = "no reduction number up to rCap";
      } else if (mu(R, s.J) != static_cast<std::uint64_t>(d)) {
        lastReason = "mu(J) != dim";
      } else {
        s.status = ReductionSample::Status::verified;
        s.reductionNumber = *r;
        return s;
      }
    } catch (const Error& e) {
      lastReason = std::string(errc_name(e.code())) + ": " + e.what();
    }
  }
  fail(Errc::exhausted_draws,
       "no verified minimal reduction in " + std::to_string(maxDraws) +
           " draws (last rejection: " + lastReason + ")");
}

int reduction_number(const RingPtr& R, const IdealHandle& J,
                     const IdealHandle& I, int rCap) {
  if (J.generators.size() != static_cast<std::size_t>(R->dim()) ||
      mu(R, J) != static_cast<std::uint64_t>(R->dim()))
    fail(Errc::bad_argument, "J is not a minimal reduction");
  auto r = is_reduction(R, J, I, rCap);
  if (!r)
    fail(Errc::r_cap_exceeded,
         "reduction test still open after rCap = " + std::to_string(rCap));
  return *r;
}

}  // namespace redinv
