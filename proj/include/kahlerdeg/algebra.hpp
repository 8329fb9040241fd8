#pragma once

// Bases of a subalgebra A = K[f_1, ..., f_s] of K[t]: a generating set whose
// leading degrees generate the degree monoid d(A).

#include "kahlerdeg/numsgp.hpp"
#include "kahlerdeg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kahlerdeg {

inline std::vector<Int> degrees_of(const std::vector<Poly>& ps) {
  std::vector<Int> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.degree());
  return out;
}

/// Products f_1^{a_1} ... f_s^{a_s} with cached powers.
class ProductCache {
 public:
  explicit ProductCache(const std::vector<Poly>& gens) : gens_(gens), powers_(gens.size()) {
    for (auto& p : powers_) p.push_back(Poly::constant(1));
  }

  const Poly& power(std::size_t i, Int k) {
    auto& pw = powers_[i];
    while (static_cast<Int>(pw.size()) <= k) pw.push_back(pw.back() * gens_[i]);
    return pw[static_cast<std::size_t>(k)];
  }

  Poly product(const Factorization& exps) {
    Poly out = Poly::constant(1);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) out *= power(i, exps[i]);
    }
    return out;
  }

 private:
  std::vector<Poly> gens_;
  std::vector<std::vector<Poly>> powers_;
};

struct DivisionStep {
  Rational coefficient;
  Int degree;
  /// Exponent vector of the product subtracted; empty when the leading term
  /// went to the remainder.
  Factorization exponents;
};

/// f = quotient_part + remainder with quotient_part in A and the support of
/// remainder outside <d(f_1), ..., d(f_s)>.
struct DivisionResult {
  Poly quotient_part;
  Poly remainder;
  std::vector<DivisionStep> trace;
};

namespace detail {

inline void require_monic_nonconstant(const std::vector<Poly>& gens, const char* who) {
  if (gens.empty()) throw std::invalid_argument(std::string(who) + ": no generators");
  for (const auto& g : gens) {
    if (!g.is_monic() || g.degree() < 1) {
      throw std::invalid_argument(std::string(who) + ": generators must be monic and nonconstant");
    }
  }
}

}  // namespace detail

/// Division with remainder. When d(f) has several factorizations the
/// lexicographically smallest exponent vector (in generator order) is used.
inline DivisionResult algebra_remainder(const Poly& f, const std::vector<Poly>& gens) {
  detail::require_monic_nonconstant(gens, "algebra_remainder");
  const std::vector<Int> degs = degrees_of(gens);
  DegreeMonoid monoid(degs);
  LexMinFactorizer factor(degs);
  ProductCache cache(gens);
  DivisionResult out;
  Poly rest = f;
  while (!rest.is_zero()) {
    const Int p = rest.degree();
    const Rational c = rest.leading_coefficient();
    if (!monoid.contains(p)) {
      out.remainder.add_term(p, c);
      rest.add_term(p, -c);
      out.trace.push_back({c, p, {}});
      continue;
    }
    Factorization theta = *factor(p);
    Poly g = cache.product(theta) * c;
    out.quotient_part += g;
    rest -= g;
    out.trace.push_back({c, p, std::move(theta)});
  }
  return out;
}

using BinomialRelation = std::pair<Factorization, Factorization>;

/// Generators of the kernel of X_i -> t^{d_i}, i.e. a presentation of the
/// monoid <d_1, ..., d_s>, as pairs (alpha, beta) with alpha.d == beta.d.
///
/// For each candidate degree n the factorizations of n are joined when their
/// supports meet; every extra connected component contributes one relation.
/// Only n in Ap(S, d_min) or n = w + d_j (w in that Apery set) can have a
/// disconnected graph, which bounds the scan.
inline std::vector<BinomialRelation> toric_relations_for_degrees(const std::vector<Int>& degs) {
  std::vector<BinomialRelation> out;
  if (degs.size() < 2) return out;
  DegreeMonoid monoid(degs);
  const Int c = monoid.content();
  std::vector<Int> red;
  for (Int d : degs) red.push_back(d / c);
  const NumericalSemigroup& S = monoid.reduced();
  std::set<Int> candidates;
  for (Int w : S.apery()) {
    candidates.insert(w);
    for (Int d : red) candidates.insert(w + d);
  }
  for (Int n : candidates) {
    if (n == 0) continue;
    std::vector<Factorization> zs = factorizations(red, n);
    if (zs.size() < 2) continue;
    std::vector<std::size_t> parent(zs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t a = 0; a < zs.size(); ++a) {
      for (std::size_t b = a + 1; b < zs.size(); ++b) {
        bool meet = false;
        for (std::size_t k = 0; k < red.size() && !meet; ++k) meet = zs[a][k] > 0 && zs[b][k] > 0;
        if (meet) parent[find(a)] = find(b);
      }
    }
    // Representatives in enumeration (lexicographic) order.
    std::vector<std::size_t> reps;
    std::set<std::size_t> seen;
    for (std::size_t a = 0; a < zs.size(); ++a) {
      if (seen.insert(find(a)).second) reps.push_back(a);
    }
    for (std::size_t k = 1; k < reps.size(); ++k) out.emplace_back(zs[reps[k]], zs[reps[0]]);
  }
  for (const auto& [alpha, beta] : out) {
    Int da = 0, db = 0;
    for (std::size_t k = 0; k < degs.size(); ++k) {
      da += alpha[k] * degs[k];
      db += beta[k] * degs[k];
    }
    if (da != db) throw std::logic_error("toric_relations: unequal weighted degrees");
  }
  return out;
}

/// Generators are monic, so the kernel depends only on the degree vector.
inline std::vector<BinomialRelation> toric_relations(const std::vector<Poly>& gens) {
  detail::require_monic_nonconstant(gens, "toric_relations");
  return toric_relations_for_degrees(degrees_of(gens));
}

/// S = f^alpha - f^beta for each relation; d(S) is below the common degree.
inline std::vector<Poly> algebra_s_polynomials(const std::vector<Poly>& gens,
                                               const std::vector<BinomialRelation>& relations) {
  ProductCache cache(gens);
  std::vector<Poly> out;
  out.reserve(relations.size());
  for (const auto& [alpha, beta] : relations) out.push_back(cache.product(alpha) - cache.product(beta));
  return out;
}

struct BasisCheck {
  bool is_basis;
  /// Nonzero remainder of some S-polynomial when !is_basis.
  Poly certificate;
};

inline BasisCheck is_algebra_basis(const std::vector<Poly>& gens) {
  detail::require_monic_nonconstant(gens, "is_algebra_basis");
  for (const Poly& s : algebra_s_polynomials(gens, toric_relations(gens))) {
    Poly r = algebra_remainder(s, gens).remainder;
    if (!r.is_zero()) return {false, r};
  }
  return {true, Poly{}};
}

struct AlgebraStep {
  Poly s_polynomial;
  Poly remainder;
};

struct AlgebraBasis {
  std::vector<Poly> gens;
  DegreeMonoid degree_monoid;
  bool reduced = false;
  bool minimal = false;
  /// Nonzero remainders adjoined while completing the basis.
  std::vector<AlgebraStep> trace;

  /// False when d(A) has gcd > 1, i.e. K[t]/A has infinite length.
  bool is_numerical() const noexcept { return degree_monoid.is_numerical(); }
  std::vector<Int> degrees() const { return degrees_of(gens); }
};

namespace detail {

inline bool degree_order(const Poly& a, const Poly& b) { return a.degree() < b.degree(); }

}  // namespace detail

/// Minimal reduced basis from any basis: drops generators whose degree the
/// others generate, then replaces every tail by its remainder.
inline AlgebraBasis reduce_basis(const std::vector<Poly>& basis) {
  if (!is_algebra_basis(basis).is_basis) {
    throw std::invalid_argument("reduce_basis: input is not a basis");
  }
  std::vector<Poly> sorted = basis;
  std::stable_sort(sorted.begin(), sorted.end(), detail::degree_order);
  std::vector<Poly> kept;
  for (const Poly& f : sorted) {
    if (!kept.empty() && DegreeMonoid(degrees_of(kept)).contains(f.degree())) continue;
    kept.push_back(f);
  }
  std::vector<Poly> reduced;
  reduced.reserve(kept.size());
  for (const Poly& f : kept) {
    Poly lead = Poly::power(f.degree());
    reduced.push_back(lead + algebra_remainder(f.tail(), kept).remainder);
  }
  AlgebraBasis out{reduced, DegreeMonoid(degrees_of(reduced)), true, true, {}};
  return out;
}

/// Completes {f_i} to a basis by adjoining nonzero S-polynomial remainders,
/// restarting after each one, then reduces it. Each remainder strictly
/// enlarges the degree monoid, so the loop stops.
inline AlgebraBasis compute_algebra_basis(const std::vector<Poly>& input) {
  std::vector<Poly> gens;
  for (const Poly& f : input) {
    if (f.degree() >= 1) gens.push_back(f.monic());
  }
  if (gens.empty()) throw std::invalid_argument("compute_algebra_basis: no nonconstant generators");
  std::vector<AlgebraStep> trace;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Poly& s : algebra_s_polynomials(gens, toric_relations(gens))) {
      Poly r = algebra_remainder(s, gens).remainder;
      if (r.is_zero()) continue;
      trace.push_back({s, r});
      gens.push_back(r.monic());
      changed = true;
      break;
    }
  }
  AlgebraBasis out = reduce_basis(gens);
  out.trace = std::move(trace);
  return out;
}

}  // namespace kahlerdeg
