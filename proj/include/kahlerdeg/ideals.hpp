#pragma once

// Relative ideals of a numerical semigroup S: sets I with I + S in I and a
// minimum. An ideal is stored through its minimal generators
// Minimals_{<=_S}(I).

#include "kahlerdeg/numsgp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kahlerdeg {

class RelativeIdeal {
 public:
  RelativeIdeal(NumericalSemigroup ambient, std::vector<Int> gens)
      : ambient_(std::move(ambient)) {
    if (gens.empty()) throw std::invalid_argument("relative ideal: no generators");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (Int a : gens) {
      bool covered = false;
      for (Int b : min_gens_) {
        if (ambient_.contains(a - b)) {
          covered = true;
          break;
        }
      }
      if (!covered) min_gens_.push_back(a);
    }
  }

  const NumericalSemigroup& ambient() const noexcept { return ambient_; }
  const std::vector<Int>& minimal_generators() const noexcept { return min_gens_; }
  Int min() const noexcept { return min_gens_.front(); }
  Int max_generator() const noexcept { return min_gens_.back(); }

  bool contains(Int n) const noexcept {
    for (Int a : min_gens_) {
      if (ambient_.contains(n - a)) return true;
    }
    return false;
  }

  /// Every n >= this bound is in I.
  Int cofinite_bound() const noexcept { return min() + ambient_.conductor(); }

  /// Elements of I in [lo, hi].
  std::vector<Int> elements(Int lo, Int hi) const {
    std::vector<Int> out;
    for (Int n = lo; n <= hi; ++n) {
      if (contains(n)) out.push_back(n);
    }
    return out;
  }

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.ambient_ == b.ambient_ && a.min_gens_ == b.min_gens_;
  }

 private:
  NumericalSemigroup ambient_;
  std::vector<Int> min_gens_;
};

inline RelativeIdeal ideal_from_generators(const NumericalSemigroup& S, std::vector<Int> gens) {
  return RelativeIdeal(S, std::move(gens));
}

/// I ∩ J. Past max(min I, min J) + C(S) both are cofinite, so minimal
/// generators lie below that bound plus m(S).
inline RelativeIdeal intersect(const RelativeIdeal& I, const RelativeIdeal& J) {
  if (!(I.ambient() == J.ambient())) throw std::invalid_argument("intersect: ambient mismatch");
  const NumericalSemigroup& S = I.ambient();
  const Int lo = std::max(I.min(), J.min());
  const Int hi = lo + S.conductor() + S.multiplicity();
  std::vector<Int> members;
  for (Int n = lo; n <= hi; ++n) {
    if (I.contains(n) && J.contains(n)) members.push_back(n);
  }
  return RelativeIdeal(S, std::move(members));
}

/// R(a, b) = {(c - a, c - b) : c minimal generator of (a+S) ∩ (b+S)}.
inline std::vector<std::pair<Int, Int>> pair_relators(Int a, Int b, const NumericalSemigroup& S) {
  RelativeIdeal meet = intersect(RelativeIdeal(S, {a}), RelativeIdeal(S, {b}));
  std::vector<std::pair<Int, Int>> out;
  for (Int c : meet.minimal_generators()) out.emplace_back(c - a, c - b);
  return out;
}

/// t^alpha e_i - t^beta e_j with a_i + alpha = a_j + beta.
struct KernelRelator {
  std::size_t i;
  std::size_t j;
  Int alpha;
  Int beta;

  friend bool operator==(const KernelRelator&, const KernelRelator&) = default;
};

/// Generators of the kernel of A^r -> sum t^{a_i} A, one per unordered pair
/// of minimal generators and per element of R(a_i, a_j).
inline std::vector<KernelRelator> kernel_generators(const RelativeIdeal& I) {
  const auto& a = I.minimal_generators();
  std::vector<KernelRelator> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (auto [alpha, beta] : pair_relators(a[i], a[j], I.ambient())) {
        if (a[i] + alpha != a[j] + beta || !I.ambient().contains(alpha) ||
            !I.ambient().contains(beta)) {
          throw std::logic_error("kernel_generators: relator fails a_i+alpha=a_j+beta");
        }
        out.push_back({i, j, alpha, beta});
      }
    }
  }
  return out;
}

/// All ideals J of S with I ⊆ J ⊆ N: the input first, then the proper
/// over-ideals ordered lexicographically by minimal generators.
///
/// The complement N \ I is finite. Its elements are decided from the top
/// down; adjoining x is allowed only if x + g already lies in the ideal for
/// every minimal generator g of S, so every branch that survives is closed.
inline std::vector<RelativeIdeal> over_ideals(const RelativeIdeal& I) {
  if (I.min() < 0) throw std::invalid_argument("over_ideals: ideal must lie in N");
  const NumericalSemigroup& S = I.ambient();
  std::vector<Int> holes;
  for (Int x = I.cofinite_bound(); x >= 0; --x) {
    if (!I.contains(x)) holes.push_back(x);
  }
  std::set<Int> added;
  std::vector<std::vector<Int>> found;
  auto in_ideal = [&](Int x) { return I.contains(x) || added.count(x) > 0; };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == holes.size()) {
      std::vector<Int> gens = I.minimal_generators();
      gens.insert(gens.end(), added.begin(), added.end());
      found.push_back(RelativeIdeal(S, gens).minimal_generators());
      return;
    }
    const Int x = holes[k];
    bool closed = true;
    for (Int g : S.minimal_generators()) {
      if (!in_ideal(x + g)) {
        closed = false;
        break;
      }
    }
    if (closed) {
      added.insert(x);
      rec(k + 1);
      added.erase(x);
    }
    rec(k + 1);
  };
  rec(0);
  const std::vector<Int>& self = I.minimal_generators();
  std::vector<std::vector<Int>> rest;
  for (auto& g : found) {
    if (g != self) rest.push_back(std::move(g));
  }
  std::sort(rest.begin(), rest.end());
  std::vector<RelativeIdeal> out{I};
  for (auto& g : rest) out.emplace_back(S, std::move(g));
  return out;
}

}  // namespace kahlerdeg
