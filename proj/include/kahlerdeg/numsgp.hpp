#pragma once

// Numerical semigroups and finitely generated submonoids of N.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kahlerdeg {

using Int = std::int64_t;

/// A numerical semigroup S (gcd of generators is 1).
///
/// Construction computes the Apery set with respect to the multiplicity by a
/// shortest-path search over residues mod m(S); membership is then
/// n >= w(n mod m).
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<Int> generators) {
    if (generators.empty()) throw std::invalid_argument("numerical semigroup: no generators");
    Int g = 0;
    for (Int x : generators) {
      if (x <= 0) throw std::invalid_argument("numerical semigroup: generators must be positive");
      g = std::gcd(g, x);
    }
    if (g != 1) {
      throw std::invalid_argument("numerical semigroup: generators have gcd " + std::to_string(g));
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    multiplicity_ = generators.front();
    compute_apery(generators);
    for (Int x : generators) {
      if (is_minimal_generator(x)) minimal_generators_.push_back(x);
    }
    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - multiplicity_;
    Int genus = 0;
    for (Int r = 0; r < multiplicity_; ++r) genus += (apery_[r] - r) / multiplicity_;
    genus_ = genus;
  }

  bool contains(Int n) const noexcept {
    if (n < 0) return false;
    return n >= apery_[static_cast<std::size_t>(n % multiplicity_)];
  }

  const std::vector<Int>& minimal_generators() const noexcept { return minimal_generators_; }
  Int multiplicity() const noexcept { return multiplicity_; }
  Int frobenius() const noexcept { return frobenius_; }
  Int conductor() const noexcept { return frobenius_ + 1; }
  Int genus() const noexcept { return genus_; }
  Int embedding_dimension() const noexcept {
    return static_cast<Int>(minimal_generators_.size());
  }

  /// w(i) for residue i mod m(S); apery()[0] == 0.
  const std::vector<Int>& apery() const noexcept { return apery_; }

  /// Ap(S, n) for an arbitrary nonzero element n.
  std::vector<Int> apery_set(Int n) const {
    if (n <= 0 || !contains(n)) throw std::invalid_argument("apery_set: n must be a nonzero element");
    std::vector<Int> out;
    for (Int s = 0; static_cast<Int>(out.size()) < n; ++s) {
      if (contains(s) && !contains(s - n)) out.push_back(s);
    }
    return out;
  }

  std::vector<Int> gaps() const {
    std::vector<Int> out;
    for (Int x = 1; x <= frobenius_; ++x) {
      if (!contains(x)) out.push_back(x);
    }
    return out;
  }

  /// Elements up to the conductor, then "->": {0,3,4,6,7,->}.
  std::vector<Int> small_elements() const {
    std::vector<Int> out;
    for (Int x = 0; x <= conductor(); ++x) {
      if (contains(x)) out.push_back(x);
    }
    return out;
  }

  bool is_symmetric() const noexcept {
    // a in S iff F - a not in S; enough to check 0..F.
    for (Int a = 0; a <= frobenius_; ++a) {
      if (contains(a) == contains(frobenius_ - a)) return false;
    }
    return true;
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.minimal_generators_ == b.minimal_generators_;
  }

 private:
  void compute_apery(const std::vector<Int>& gens) {
    const Int m = multiplicity_;
    apery_.assign(static_cast<std::size_t>(m), -1);
    using Item = std::pair<Int, Int>;  // (value, residue)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    std::vector<Int> best(static_cast<std::size_t>(m), std::numeric_limits<Int>::max());
    best[0] = 0;
    pq.emplace(0, 0);
    while (!pq.empty()) {
      auto [v, r] = pq.top();
      pq.pop();
      if (v != best[static_cast<std::size_t>(r)]) continue;
      apery_[static_cast<std::size_t>(r)] = v;
      for (Int g : gens) {
        Int nv = v + g;
        Int nr = nv % m;
        if (nv < best[static_cast<std::size_t>(nr)]) {
          best[static_cast<std::size_t>(nr)] = nv;
          pq.emplace(nv, nr);
        }
      }
    }
  }

  bool is_minimal_generator(Int x) const {
    for (Int a = 1; a <= x / 2; ++a) {
      if (contains(a) && contains(x - a)) return false;
    }
    return true;
  }

  std::vector<Int> minimal_generators_;
  std::vector<Int> apery_;
  Int multiplicity_ = 1;
  Int frobenius_ = -1;
  Int genus_ = 0;
};

/// Submonoid of N given by generators, possibly with gcd > 1. The generator
/// list keeps the caller's order so factorization indices line up.
class DegreeMonoid {
 public:
  explicit DegreeMonoid(std::vector<Int> generators)
      : generators_(std::move(generators)), content_(0), reduced_(divide(generators_)) {}

  const std::vector<Int>& generators() const noexcept { return generators_; }
  Int content() const noexcept { return content_; }
  bool is_numerical() const noexcept { return content_ == 1; }
  const NumericalSemigroup& reduced() const noexcept { return reduced_; }

  bool contains(Int n) const noexcept {
    if (n < 0 || n % content_ != 0) return false;
    return reduced_.contains(n / content_);
  }

  std::vector<Int> minimal_generators() const {
    std::vector<Int> out;
    for (Int g : reduced_.minimal_generators()) out.push_back(g * content_);
    return out;
  }

  /// Only valid when is_numerical().
  const NumericalSemigroup& semigroup() const {
    if (!is_numerical()) {
      throw std::logic_error("degree monoid has content " + std::to_string(content_) +
                             "; it is not a numerical semigroup");
    }
    return reduced_;
  }

 private:
  NumericalSemigroup divide(const std::vector<Int>& gens) {
    if (gens.empty()) throw std::invalid_argument("degree monoid: no generators");
    for (Int g : gens) {
      if (g <= 0) throw std::invalid_argument("degree monoid: generators must be positive");
      content_ = std::gcd(content_, g);
    }
    std::vector<Int> red;
    red.reserve(gens.size());
    for (Int g : gens) red.push_back(g / content_);
    return NumericalSemigroup(std::move(red));
  }

  std::vector<Int> generators_;
  Int content_;
  NumericalSemigroup reduced_;
};

inline DegreeMonoid monoid_from_generators(std::vector<Int> gens) {
  return DegreeMonoid(std::move(gens));
}

inline bool membership(const DegreeMonoid& m, Int n) { return m.contains(n); }

using Factorization = std::vector<Int>;

/// All factorizations of n over `gens` (in the given order), by depth-first
/// search with residual pruning against the monoid of the remaining suffix.
inline std::vector<Factorization> factorizations(const std::vector<Int>& gens, Int n) {
  std::vector<Factorization> out;
  if (n < 0) return out;
  const std::size_t s = gens.size();
  // reach[i][x]: x is a nonnegative combination of gens[i..].
  std::vector<std::vector<char>> reach(s + 1, std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  reach[s][0] = 1;
  for (std::size_t i = s; i-- > 0;) {
    for (Int x = 0; x <= n; ++x) {
      bool ok = reach[i + 1][static_cast<std::size_t>(x)];
      if (!ok && x >= gens[i]) ok = reach[i][static_cast<std::size_t>(x - gens[i])];
      reach[i][static_cast<std::size_t>(x)] = ok;
    }
  }
  Factorization cur(s, 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int rest) {
    if (i == s) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (Int k = 0; k * gens[i] <= rest; ++k) {
      if (!reach[i + 1][static_cast<std::size_t>(rest - k * gens[i])]) continue;
      cur[i] = k;
      rec(i + 1, rest - k * gens[i]);
    }
    cur[i] = 0;
  };
  rec(0, n);
  return out;
}

inline std::vector<Factorization> factorizations(const NumericalSemigroup& S, Int n) {
  return factorizations(S.minimal_generators(), n);
}

/// Lexicographically smallest factorization of n over `gens`, or nullopt.
/// Answers repeated queries from a cached suffix-reachability table.
class LexMinFactorizer {
 public:
  explicit LexMinFactorizer(std::vector<Int> gens) : gens_(std::move(gens)) {}

  std::optional<Factorization> operator()(Int n) {
    if (n < 0) return std::nullopt;
    ensure(n);
    const std::size_t s = gens_.size();
    if (!reach_[0][static_cast<std::size_t>(n)]) return std::nullopt;
    Factorization f(s, 0);
    Int rest = n;
    for (std::size_t i = 0; i < s; ++i) {
      Int k = 0;
      while (!reach_[i + 1][static_cast<std::size_t>(rest - k * gens_[i])]) ++k;
      f[i] = k;
      rest -= k * gens_[i];
    }
    return f;
  }

  const std::vector<Int>& generators() const noexcept { return gens_; }

 private:
  void ensure(Int n) {
    if (n <= bound_) return;
    Int nb = std::max<Int>(n, 2 * bound_ + 16);
    const std::size_t s = gens_.size();
    reach_.assign(s + 1, std::vector<char>(static_cast<std::size_t>(nb) + 1, 0));
    reach_[s][0] = 1;
    for (std::size_t i = s; i-- > 0;) {
      for (Int x = 0; x <= nb; ++x) {
        bool ok = reach_[i + 1][static_cast<std::size_t>(x)];
        if (!ok && x >= gens_[i]) ok = reach_[i][static_cast<std::size_t>(x - gens_[i])];
        reach_[i][static_cast<std::size_t>(x)] = ok;
      }
    }
    bound_ = nb;
  }

  std::vector<Int> gens_;
  std::vector<std::vector<char>> reach_;
  Int bound_ = -1;
};

struct SemigroupInvariants {
  std::vector<Int> gaps;
  Int genus;
  Int frobenius;
  Int conductor;
  Int multiplicity;
  bool is_symmetric;
};

inline SemigroupInvariants semigroup_invariants(const NumericalSemigroup& S) {
  return {S.gaps(), S.genus(), S.frobenius(), S.conductor(), S.multiplicity(), S.is_symmetric()};
}

inline SemigroupInvariants semigroup_invariants(const DegreeMonoid& M) {
  return semigroup_invariants(M.semigroup());
}

/// Freeness data for an arrangement (r_0, ..., r_h):
/// d_{i+1} = gcd(r_0..r_i), e_i = d_i / d_{i+1}.
struct FreeStructure {
  std::vector<Int> arrangement;  // r_0..r_h
  std::vector<Int> d;            // d_1..d_{h+1}, stored 0-based
  std::vector<Int> e;            // e_1..e_h, stored 0-based

  std::size_t h() const noexcept { return arrangement.size() - 1; }

  /// sum_{i=1}^h (e_i - 1) r_i - r_0
  Int frobenius_formula() const {
    Int f = -arrangement[0];
    for (std::size_t i = 1; i < arrangement.size(); ++i) f += (e[i - 1] - 1) * arrangement[i];
    return f;
  }
};

/// Checks the two freeness conditions for `arrangement`; nullopt means "not
/// free for this arrangement". The arrangement must generate S.
inline std::optional<FreeStructure> free_structure(const NumericalSemigroup& S,
                                                   const std::vector<Int>& arrangement) {
  if (arrangement.empty()) throw std::invalid_argument("free_structure: empty arrangement");
  {
    std::vector<Int> a = arrangement;
    for (Int x : a) {
      if (!S.contains(x)) throw std::invalid_argument("free_structure: arrangement not in S");
    }
    for (Int g : S.minimal_generators()) {
      if (std::find(a.begin(), a.end(), g) == a.end()) {
        throw std::invalid_argument("free_structure: arrangement does not generate S");
      }
    }
  }
  FreeStructure fs;
  fs.arrangement = arrangement;
  Int d = 0;
  for (Int r : arrangement) {
    d = std::gcd(d, r);
    fs.d.push_back(d);
  }
  for (std::size_t i = 1; i < fs.d.size(); ++i) {
    if (fs.d[i] >= fs.d[i - 1]) return std::nullopt;
  }
  if (fs.d.back() != 1) return std::nullopt;
  for (std::size_t i = 1; i < arrangement.size(); ++i) {
    fs.e.push_back(fs.d[i - 1] / fs.d[i]);
    std::vector<Int> prefix(arrangement.begin(), arrangement.begin() + static_cast<long>(i));
    DegreeMonoid before(prefix);
    if (!before.contains(fs.e.back() * arrangement[i])) return std::nullopt;
  }
  if (fs.frobenius_formula() != S.frobenius()) {
    throw std::logic_error("free_structure: closed-form Frobenius number disagrees with gap scan");
  }
  return fs;
}

namespace detail {

inline Int mod_inverse(Int a, Int mod) {
  Int g = mod, x = 0, x1 = 1, aa = ((a % mod) + mod) % mod;
  while (aa != 0) {
    Int q = g / aa;
    std::tie(g, aa) = std::make_pair(aa, g - q * aa);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::logic_error("mod_inverse: not invertible");
  return ((x % mod) + mod) % mod;
}

}  // namespace detail

/// The unique (lambda_0..lambda_h) with s = sum lambda_i r_i and
/// 0 <= lambda_i < e_i for i >= 1. s is in S iff lambda_0 >= 0.
inline std::vector<Int> standard_representation(const FreeStructure& fs, Int s) {
  const std::size_t h = fs.h();
  std::vector<Int> lambda(h + 1, 0);
  Int rest = s;
  for (std::size_t i = h; i >= 1; --i) {
    // rest is divisible by d_{i+1}; pick lambda_i so that rest - lambda_i r_i
    // is divisible by d_i.
    const Int di1 = fs.d[i];
    const Int ei = fs.e[i - 1];
    const Int ri = fs.arrangement[i] / di1;
    const Int target = rest / di1;
    Int li = (((target % ei) + ei) % ei) * detail::mod_inverse(ri % ei, ei) % ei;
    if (ei == 1) li = 0;
    lambda[i] = li;
    rest -= li * fs.arrangement[i];
  }
  if (rest % fs.arrangement[0] != 0) throw std::logic_error("standard_representation: residue");
  lambda[0] = rest / fs.arrangement[0];
  return lambda;
}

}  // namespace kahlerdeg
