#include "redinv/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace redinv {

// ---- division -----------------------------------------------------------------

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  for (const auto& g : G) {
    f.check_compatible(g);
    if (g.is_zero()) fail(Errc::zero_polynomial, "zero divisor polynomial");
  }
  Polynomial p = f;
  Polynomial r = Polynomial::zero(f.field(), f.arity(), f.order());
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool reduced = false;
    for (const auto& g : G) {
      if (monomial_divides(g.leading_monomial(), lt.mono)) {
        FieldElement c = lt.coeff / g.leading_coeff();
        Monomial m = monomial_div(lt.mono, g.leading_monomial());
        p = p - g.times_term(c, m);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // move the leading term to the remainder
      r = r + Polynomial::monomial(f.field(), f.arity(), f.order(), lt.mono,
                                   lt.coeff);
      p = p - Polynomial::monomial(f.field(), f.arity(), f.order(), lt.mono,
                                   lt.coeff);
    }
  }
  return r;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G.generators);
}

// ---- Buchberger ------------------------------------------------------------------

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  std::uint64_t deg;
};

struct PairLess {
  TermOrder ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.lcm != b.lcm) return monomial_less(a.lcm, b.lcm, ord);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, TermOrder ord) {
  std::vector<Polynomial> G;
  for (const auto& g : gens) {
    if (!g.is_zero()) G.push_back(g.with_order(ord));
  }
  if (G.empty()) return GroebnerBasis{{}, ord, true};
  for (std::size_t i = 1; i < G.size(); ++i) G[0].check_compatible(G[i]);

  auto make_pair = [&](std::size_t i, std::size_t j) {
    Monomial l = monomial_lcm(G[i].leading_monomial(), G[j].leading_monomial());
    std::uint64_t d = total_degree(l);
    return Pair{i, j, std::move(l), d};
  };

  std::set<Pair, PairLess> pending{PairLess{ord}};
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    pending.insert(make_pair(i, j));
    pending_keys.insert({i, j});
  };

  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!pending.empty()) {
    Pair pr = *pending.begin();  // normal strategy: smallest lcm degree first
    pending.erase(pending.begin());
    pending_keys.erase({pr.i, pr.j});

    // the S-polynomial of two single-term polynomials is identically zero
    if (G[pr.i].terms().size() == 1 && G[pr.j].terms().size() == 1) continue;

    const Monomial& li = G[pr.i].leading_monomial();
    const Monomial& lj = G[pr.j].leading_monomial();
    if (monomial_coprime(li, lj)) continue;  // Buchberger's first criterion

    // chain criterion: some k with lm(k) | lcm(i,j) and both companion
    // pairs already processed
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!monomial_divides(G[k].leading_monomial(), pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (!pending_keys.count({key_ik.first, key_ik.second}) &&
          !pending_keys.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial s = normal_form(s_polynomial(G[pr.i], G[pr.j], ord), G);
    if (s.is_zero()) continue;
    G.push_back(s.monic());
    std::size_t t = G.size() - 1;
    for (std::size_t i = 0; i < t; ++i) push_pair(i, t);
  }

  // minimize: keep only elements whose lm is not divisible by another kept lm
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = G[i].leading_monomial();
      const Monomial& mj = G[j].leading_monomial();
      if (monomial_divides(mj, mi)) {
        // break lm ties by index so exactly one survives
        if (mi != mj || j < i) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // interreduce: each element fully reduced against the others
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> rest;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) rest.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], rest);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }

  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return monomial_less(a.leading_monomial(), b.leading_monomial(),
                                   ord);
            });
  return GroebnerBasis{std::move(reduced), ord, true};
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& G) {
  if (f.is_zero()) return true;
  return normal_form(f.with_order(G.order), G.generators).is_zero();
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& G) {
  std::vector<Monomial> out;
  out.reserve(G.size());
  for (const auto& g : G) out.push_back(g.leading_monomial());
  return out;
}

std::vector<Monomial> leading_monomials(const GroebnerBasis& G) {
  return leading_monomials(G.generators);
}

// ---- staircase -------------------------------------------------------------------

namespace {

bool is_unit_monomial(const Monomial& m) {
  return total_degree(m) == 0;
}

// Per-variable bound b[i]: smallest pure-power exponent of x_i among lms.
// infinite_staircase if a variable has no pure power.
std::vector<std::uint32_t> staircase_bounds(const std::vector<Monomial>& lms,
                                            std::size_t arity) {
  std::vector<std::uint32_t> b(arity, 0);
  std::vector<bool> found(arity, false);
  for (const auto& m : lms) {
    if (m.size() != arity) fail(Errc::arity_mismatch, "lm arity mismatch");
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < arity; ++i) {
      if (m[i] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = static_cast<int>(i);
    }
    if (!pure || support < 0) continue;
    auto i = static_cast<std::size_t>(support);
    if (!found[i] || m[i] < b[i]) {
      b[i] = m[i];
      found[i] = true;
    }
  }
  for (std::size_t i = 0; i < arity; ++i)
    if (!found[i])
      fail(Errc::infinite_staircase,
           "quotient is not finite dimensional (no pure power bounds "
           "variable " +
               std::to_string(i) + ")");
  return b;
}

// Depth-first walk of the exponent box with generator filtering.
template <typename Visit>
void walk_standard(const std::vector<Monomial>& lms,
                   const std::vector<std::uint32_t>& bounds, Monomial& cur,
                   std::size_t depth, std::vector<const Monomial*> active,
                   Visit&& visit) {
  std::size_t arity = bounds.size();
  if (depth == arity) {
    if (active.empty()) visit(cur);  // nothing divides: standard
    return;
  }
  for (std::uint32_t e = 0; e < bounds[depth]; ++e) {
    cur[depth] = e;
    std::vector<const Monomial*> next;
    bool dead = false;
    for (const Monomial* m : active) {
      if ((*m)[depth] > e) continue;  // cannot divide any completion
      // m's prefix divides; if its tail is exhausted it divides everything
      bool tail = false;
      for (std::size_t k = depth + 1; k < arity; ++k)
        if ((*m)[k] != 0) {
          tail = true;
          break;
        }
      if (!tail) {
        dead = true;  // whole subtree lies in the ideal
        break;
      }
      next.push_back(m);
    }
    if (!dead)
      walk_standard(lms, bounds, cur, depth + 1, std::move(next),
                    std::forward<Visit>(visit));
  }
  cur[depth] = 0;
}

}  // namespace

std::uint64_t staircase_count(const std::vector<Monomial>& lms,
                              std::size_t arity) {
  for (const auto& m : lms)
    if (is_unit_monomial(m)) return 0;
  std::vector<std::uint32_t> bounds = staircase_bounds(lms, arity);
  std::vector<const Monomial*> active;
  for (const auto& m : lms) active.push_back(&m);
  std::uint64_t count = 0;
  Monomial cur(arity, 0);
  walk_standard(lms, bounds, cur, 0, std::move(active),
                [&](const Monomial&) { ++count; });
  return count;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lms,
                                         std::size_t arity) {
  for (const auto& m : lms)
    if (is_unit_monomial(m)) return {};
  std::vector<std::uint32_t> bounds = staircase_bounds(lms, arity);
  std::vector<const Monomial*> active;
  for (const auto& m : lms) active.push_back(&m);
  std::vector<Monomial> out;
  Monomial cur(arity, 0);
  walk_standard(lms, bounds, cur, 0, std::move(active),
                [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::uint64_t staircase_count(const GroebnerBasis& G, std::size_t arity) {
  return staircase_count(leading_monomials(G), arity);
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G,
                                         std::size_t arity) {
  return standard_monomials(leading_monomials(G), arity);
}

int monomial_ideal_dimension(const std::vector<Monomial>& lms,
                             std::size_t arity) {
  for (const auto& m : lms) {
    if (m.size() != arity) fail(Errc::arity_mismatch, "lm arity mismatch");
    if (is_unit_monomial(m))
      fail(Errc::ideal_is_unit, "monomial ideal contains a unit");
  }
  if (arity > 20) fail(Errc::bad_argument, "too many variables");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << arity); ++mask) {
    // T = variables in mask; feasible iff no lm supported inside T
    bool ok = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (std::size_t i = 0; i < arity; ++i)
        if (m[i] != 0 && !(mask & (1u << i))) {
          inside = false;
          break;
        }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
  }
  return best;
}

}  // namespace redinv
