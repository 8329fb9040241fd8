#pragma once

// Bases of finitely generated A-submodules M = F_1 A + ... + F_r A of K[t]
// whose leading degrees generate the degree ideal d(M) over d(A).

#include "kahlerdeg/algebra.hpp"
#include "kahlerdeg/ideals.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kahlerdeg {

struct ModuleReduction {
  /// F = sum coefficients[i] * modgens[i] + remainder, coefficients in A.
  std::vector<Poly> coefficients;
  Poly remainder;

  Poly normalized() const { return remainder.is_zero() ? remainder : remainder.monic(); }
};

namespace detail {

/// Factorizations and power products of the algebra basis, shared across
/// reductions.
class ModuleReducer {
 public:
  explicit ModuleReducer(const AlgebraBasis& algebra)
      : algebra_(algebra), factor_(algebra.degrees()), cache_(algebra.gens) {}

  ModuleReduction top(const Poly& F, const std::vector<Poly>& modgens) {
    ModuleReduction out{std::vector<Poly>(modgens.size()), F};
    Poly& rest = out.remainder;
    while (!rest.is_zero()) {
      const Int p = rest.degree();
      std::size_t best = modgens.size();
      for (std::size_t i = 0; i < modgens.size(); ++i) {
        const Int shift = p - modgens[i].degree();
        if (shift < 0 || !algebra_.degree_monoid.contains(shift)) continue;
        if (best == modgens.size() || modgens[i].degree() > modgens[best].degree()) best = i;
      }
      if (best == modgens.size()) break;
      Poly g = cache_.product(*factor_(p - modgens[best].degree()));
      Poly a = modgens[best] * g;
      Rational c = rest.leading_coefficient() / a.leading_coefficient();
      rest -= a * c;
      out.coefficients[best] += g * c;
    }
    return out;
  }

  ModuleReduction full(const Poly& F, const std::vector<Poly>& modgens) {
    ModuleReduction out{std::vector<Poly>(modgens.size()), Poly{}};
    Poly rest = F;
    while (!rest.is_zero()) {
      ModuleReduction step = top(rest, modgens);
      for (std::size_t i = 0; i < modgens.size(); ++i) out.coefficients[i] += step.coefficients[i];
      rest = std::move(step.remainder);
      if (rest.is_zero()) break;
      out.remainder.add_term(rest.degree(), rest.leading_coefficient());
      rest.add_term(rest.degree(), -rest.leading_coefficient());
    }
    return out;
  }

  /// Monic F with its tail fully reduced; the leading term is kept.
  Poly canonical(const Poly& F, const std::vector<Poly>& modgens) {
    const Poly f = F.monic();
    return Poly::power(f.degree()) + full(f.tail(), modgens).remainder;
  }

  Poly s_polynomial(const Poly& a, const Poly& b, Int alpha, Int beta) {
    Poly pa = a * cache_.product(*factor_(alpha));
    Poly pb = b * cache_.product(*factor_(beta));
    return pa * (Rational{1} / pa.leading_coefficient()) - pb * (Rational{1} / pb.leading_coefficient());
  }

 private:
  const AlgebraBasis& algebra_;
  LexMinFactorizer factor_;
  ProductCache cache_;
};

}  // namespace detail

/// Top reduction: while d(F) - d(F_i) lies in d(A) for some i (the F_i of
/// largest degree, first in list order on ties), cancel the leading term with F_i times a power product of
/// the algebra basis. Stops at the first leading degree outside
/// U (d(F_i) + d(A)).
inline ModuleReduction module_reduce(const Poly& F, const std::vector<Poly>& modgens,
                                     const AlgebraBasis& algebra) {
  return detail::ModuleReducer(algebra).top(F, modgens);
}

/// Full division: like module_reduce, but irreducible leading terms move to
/// the remainder and the division goes on, so every exponent in the support
/// of the remainder lies outside U (d(F_i) + d(A)).
inline ModuleReduction module_remainder(const Poly& F, const std::vector<Poly>& modgens,
                                        const AlgebraBasis& algebra) {
  return detail::ModuleReducer(algebra).full(F, modgens);
}

/// S-polynomial of the pair (F_i, F_j) for the relator (alpha, beta) in
/// R(d(F_i), d(F_j)).
struct ModuleSPolynomial {
  std::size_t i;
  std::size_t j;
  Int alpha;
  Int beta;
  Poly value;
};

namespace detail {

inline const NumericalSemigroup& numerical_monoid(const AlgebraBasis& algebra, const char* who) {
  if (!algebra.is_numerical()) {
    throw std::invalid_argument(std::string(who) + ": degree monoid of the algebra is not numerical");
  }
  return algebra.degree_monoid.semigroup();
}

}  // namespace detail

inline std::vector<ModuleSPolynomial> min_s_polynomials(const std::vector<Poly>& modgens,
                                                        const AlgebraBasis& algebra) {
  const NumericalSemigroup& S = detail::numerical_monoid(algebra, "min_s_polynomials");
  detail::ModuleReducer reducer(algebra);
  std::vector<ModuleSPolynomial> out;
  for (std::size_t i = 0; i < modgens.size(); ++i) {
    for (std::size_t j = i + 1; j < modgens.size(); ++j) {
      for (auto [alpha, beta] : pair_relators(modgens[i].degree(), modgens[j].degree(), S)) {
        out.push_back({i, j, alpha, beta,
                       reducer.s_polynomial(modgens[i], modgens[j], alpha, beta)});
      }
    }
  }
  return out;
}

struct ModuleStep {
  Poly first;
  Poly second;
  Int alpha;
  Int beta;
  Poly s_polynomial;
  /// Monic remainder, zero when the S-polynomial reduced to 0.
  Poly remainder;
};

struct ModuleBasis {
  AlgebraBasis algebra;
  std::vector<Poly> gens;
  RelativeIdeal degree_ideal;
  std::vector<ModuleStep> trace;
};

/// Completes {F_i} to a module basis over `algebra` (which must be a basis
/// with numerical degree monoid). S-polynomials are processed in order of
/// least common degree; new generators enter with fully reduced tails and are
/// paired with every earlier one. The result is inter-reduced, its tails are
/// supported on N \ d(M), and it is sorted by degree.
inline ModuleBasis compute_module_basis(const std::vector<Poly>& input, const AlgebraBasis& algebra) {
  const NumericalSemigroup& S = detail::numerical_monoid(algebra, "compute_module_basis");
  std::vector<Poly> gm;
  for (const Poly& f : input) {
    if (!f.is_zero()) gm.push_back(f.monic());
  }
  if (gm.empty()) throw std::invalid_argument("compute_module_basis: no nonzero generators");

  detail::ModuleReducer reducer(algebra);
  // Critical pairs (i, j, alpha, beta), taken by least common degree
  // d(F_i) + alpha, ties in creation order. A generator whose leading degree
  // becomes redundant is replaced by its reduction, and its pending pairs are
  // dropped.
  struct Pending {
    Int degree;
    std::size_t seq;
    std::size_t i;
    std::size_t j;
    Int alpha;
    Int beta;
  };
  std::vector<Poly> all = gm;
  std::vector<bool> alive(all.size(), true);
  std::vector<Pending> pending;
  std::size_t seq = 0;
  auto live = [&] {
    std::vector<Poly> out;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (alive[k]) out.push_back(all[k]);
    }
    return out;
  };
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!alive[i]) continue;
      for (auto [alpha, beta] : pair_relators(all[i].degree(), all[j].degree(), S)) {
        pending.push_back({all[i].degree() + alpha, seq++, i, j, alpha, beta});
      }
    }
  };
  std::vector<std::size_t> queue;
  auto adjoin = [&](Poly r) {
    all.push_back(std::move(r));
    alive.push_back(true);
    queue.push_back(all.size() - 1);
    while (!queue.empty()) {
      const std::size_t j = queue.back();
      queue.pop_back();
      if (!alive[j]) continue;
      add_pairs(j);
      const Int dj = all[j].degree();
      for (std::size_t k = 0; k < j; ++k) {
        if (!alive[k] || all[k].degree() < dj || !S.contains(all[k].degree() - dj)) continue;
        alive[k] = false;
        const std::vector<Poly> rest = live();
        Poly g = reducer.top(all[k], rest).remainder;
        if (g.is_zero()) continue;
        all.push_back(reducer.canonical(g, rest));
        alive.push_back(true);
        queue.push_back(all.size() - 1);
      }
    }
  };
  // Ascending pass: a generator whose tail is not fully reduced is replaced
  // by its canonical form, with fresh pairs. Leading degrees are unchanged.
  auto canonicalize = [&] {
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (alive[k]) order.push_back(k);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return all[x].degree() < all[y].degree(); });
    for (std::size_t k : order) {
      Poly c = reducer.canonical(all[k], live());
      if (c == all[k]) continue;
      alive[k] = false;
      all.push_back(std::move(c));
      alive.push_back(true);
      add_pairs(all.size() - 1);
    }
  };
  canonicalize();
  pending.clear();
  for (std::size_t j = 1; j < all.size(); ++j) {
    if (alive[j]) add_pairs(j);
  }
  std::vector<ModuleStep> trace;
  while (!pending.empty()) {
    auto next = std::min_element(pending.begin(), pending.end(), [](const Pending& x, const Pending& y) {
      return std::pair(x.degree, x.seq) < std::pair(y.degree, y.seq);
    });
    const Pending cp = *next;
    pending.erase(next);
    if (!alive[cp.i] || !alive[cp.j]) continue;
    const Poly a = all[cp.i];
    const Poly b = all[cp.j];
    const std::vector<Poly> current = live();
    Poly sp = reducer.s_polynomial(a, b, cp.alpha, cp.beta);
    Poly r = reducer.top(sp, current).remainder;
    if (!r.is_zero()) r = reducer.canonical(r, current);
    trace.push_back({a, b, cp.alpha, cp.beta, sp, r});
    if (!r.is_zero()) {
      adjoin(std::move(r));
      canonicalize();
    }
  }
  gm = live();

  std::stable_sort(gm.begin(), gm.end(), detail::degree_order);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < gm.size(); ++k) {
      std::vector<Poly> others;
      for (std::size_t l = 0; l < gm.size(); ++l) {
        if (l != k) others.push_back(gm[l]);
      }
      Poly r = reducer.top(gm[k], others).normalized();
      if (r == gm[k]) continue;
      if (r.is_zero()) {
        gm.erase(gm.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        gm[k] = r;
      }
      std::stable_sort(gm.begin(), gm.end(), detail::degree_order);
      changed = true;
      break;
    }
  }
  for (Poly& f : gm) {
    const Int d = f.degree();
    f = Poly::power(d) + reducer.full(f.tail(), gm).remainder;
  }
  RelativeIdeal ideal(S, degrees_of(gm));
  return ModuleBasis{algebra, std::move(gm), std::move(ideal), std::move(trace)};
}

}  // namespace kahlerdeg
