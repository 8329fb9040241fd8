#pragma once

// Degrees of Kähler differentials of a plane curve x = X(t), y = Y(t):
// the value semigroup, the degree ideal of the differentials, the
// non-exact set and the Milnor and Tjurina numbers.

#include "kahlerdeg/algebra.hpp"
#include "kahlerdeg/ideals.hpp"
#include "kahlerdeg/modbasis.hpp"
#include "kahlerdeg/numsgp.hpp"
#include "kahlerdeg/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kahlerdeg {

class NonNumericalError : public std::invalid_argument {
 public:
  explicit NonNumericalError(Int content)
      : std::invalid_argument("degree monoid has gcd " + std::to_string(content) +
                              "; the parametrization is not injective"),
        content_(content) {}
  Int content() const noexcept { return content_; }

 private:
  Int content_;
};

/// A pair of nonconstant polynomials of different degrees, stored monic.
/// low() has degree m, high() has degree n, m < n.
class CurveParametrization {
 public:
  CurveParametrization(const Poly& x, const Poly& y) {
    if (x.degree() < 1 || y.degree() < 1) {
      throw std::invalid_argument("curve: both coordinates must be nonconstant");
    }
    if (x.degree() == y.degree()) {
      throw std::invalid_argument("curve: coordinates of equal degree " + std::to_string(x.degree()) +
                                  "; subtract a multiple first");
    }
    x_ = x.monic();
    y_ = y.monic();
  }

  const Poly& x() const noexcept { return x_; }
  const Poly& y() const noexcept { return y_; }
  const Poly& low() const noexcept { return x_.degree() < y_.degree() ? x_ : y_; }
  const Poly& high() const noexcept { return x_.degree() < y_.degree() ? y_ : x_; }
  Int m() const noexcept { return low().degree(); }
  Int n() const noexcept { return high().degree(); }

  /// Substitutes t -> t - b/m, b the t^{m-1} coefficient of low(), so that
  /// low() has no t^{m-1} term. The result has x() = high(), y() = low().
  CurveParametrization centered() const {
    Rational shift = -low().coefficient(m() - 1) / Rational(m());
    return CurveParametrization(substitute_shift(high(), shift), substitute_shift(low(), shift));
  }

  friend bool operator==(const CurveParametrization& a, const CurveParametrization& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  Poly x_;
  Poly y_;
};

/// Arrangement (m, n, r_2, ..., r_h) of the minimal generators of gamma:
/// after (m, n) repeatedly take the smallest remaining minimal generator not
/// divisible by the current gcd. Throws when no such arrangement exists.
inline std::vector<Int> plane_branch_arrangement(const NumericalSemigroup& gamma, Int m, Int n) {
  const auto& mg = gamma.minimal_generators();
  auto is_min = [&mg](Int x) { return std::find(mg.begin(), mg.end(), x) != mg.end(); };
  if (m < 2) throw std::invalid_argument("arrangement: multiplicity below 2");
  if (n % m == 0) throw std::invalid_argument("arrangement: m divides n");
  if (!is_min(m) || !is_min(n)) throw std::invalid_argument("arrangement: m or n is not a minimal generator");
  std::vector<Int> arr{m, n};
  Int d = std::gcd(m, n);
  while (d > 1) {
    std::optional<Int> next;
    for (Int g : mg) {
      if (std::find(arr.begin(), arr.end(), g) != arr.end() || g % d == 0) continue;
      next = g;
      break;
    }
    if (!next) throw std::invalid_argument("arrangement: gcd stalls at " + std::to_string(d));
    arr.push_back(*next);
    d = std::gcd(d, *next);
  }
  if (arr.size() != mg.size()) throw std::invalid_argument("arrangement: unused minimal generators");
  return arr;
}

/// Degrees of i in I with i + 1 a gap of gamma. Elements of I past F - 1
/// all have i + 1 in gamma, so the scan stops there.
inline std::vector<Int> non_exact_set(const RelativeIdeal& I, const NumericalSemigroup& gamma) {
  std::vector<Int> out;
  for (Int i = I.min(); i <= gamma.frobenius() - 1; ++i) {
    if (I.contains(i) && !gamma.contains(i + 1)) out.push_back(i);
  }
  return out;
}

/// Basis of the module of differentials x'A + y'A over A = K[x, y].
inline ModuleBasis kahler_module(const CurveParametrization& p) {
  AlgebraBasis algebra = compute_algebra_basis({p.x(), p.y()});
  if (!algebra.is_numerical()) throw NonNumericalError(algebra.degree_monoid.content());
  return compute_module_basis({derivative(p.x()), derivative(p.y())}, algebra);
}

struct DifferentialReport {
  Int m;
  Int n;
  std::vector<Poly> algebra_basis;
  NumericalSemigroup gamma;
  std::vector<Poly> differentials;
  RelativeIdeal ideal;
  std::vector<Int> ne_set;
  Int ne;
  /// Milnor number, the conductor of gamma.
  Int mu;
  /// Tjurina number mu - ne.
  Int nu;
  bool quasi_homogeneous;
  std::optional<FreeStructure> free;
  /// Why `free` is empty, if it is.
  std::string freeness_issue;
};

inline DifferentialReport curve_invariants(const CurveParametrization& p) {
  ModuleBasis mb = kahler_module(p);
  const NumericalSemigroup& gamma = mb.algebra.degree_monoid.semigroup();
  std::vector<Int> ne_set = non_exact_set(mb.degree_ideal, gamma);
  const Int ne = static_cast<Int>(ne_set.size());
  DifferentialReport r{p.m(),
                       p.n(),
                       mb.algebra.gens,
                       gamma,
                       mb.gens,
                       mb.degree_ideal,
                       ne_set,
                       ne,
                       gamma.conductor(),
                       gamma.conductor() - ne,
                       ne == 0,
                       std::nullopt,
                       {}};
  if (gamma.multiplicity() == 1) {
    r.freeness_issue = "smooth branch";
    return r;
  }
  try {
    r.free = free_structure(gamma, plane_branch_arrangement(gamma, p.m(), p.n()));
    if (!r.free) r.freeness_issue = "arrangement is not free";
  } catch (const std::exception& e) {
    r.freeness_issue = e.what();
  }
  return r;
}

}  // namespace kahlerdeg
