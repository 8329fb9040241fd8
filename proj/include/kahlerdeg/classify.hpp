#pragma once

// Free structure of the value semigroup of a plane branch, its
// Newton-Puiseux exponents, and the admissible shapes of the non-exact set
// when ne <= 2.

#include "kahlerdeg/kahler.hpp"
#include "kahlerdeg/numsgp.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kahlerdeg {

struct DeltaSequence {
  /// arrangement (r_0 = m, r_1 = n, ..., r_h), d_1..d_{h+1}, e_1..e_h.
  FreeStructure free;
  /// m_1 = -n, ..., m_h.
  std::vector<Int> puiseux;
  /// Indices k where r_k d_k > r_{k+1} d_{k+1} fails.
  std::vector<std::size_t> decreasing_failures;

  std::size_t h() const noexcept { return free.h(); }
};

class FreenessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// m_1 = -n and m_{k+1} = m_k + r_k e_k - r_{k+1}; checks that
/// gcd(m, m_1, ..., m_k) = d_{k+1}.
inline std::vector<Int> puiseux_exponents(const FreeStructure& fs) {
  const auto& r = fs.arrangement;
  std::vector<Int> out;
  if (r.size() < 2) return out;
  out.push_back(-r[1]);
  for (std::size_t k = 1; k + 1 < r.size(); ++k) out.push_back(out.back() + r[k] * fs.e[k - 1] - r[k + 1]);
  Int g = r[0];
  for (std::size_t k = 0; k < out.size(); ++k) {
    g = std::gcd(g, out[k]);
    if (g != fs.d[k + 1]) throw std::logic_error("puiseux_exponents: gcd chain does not match d");
  }
  return out;
}

inline std::vector<Int> puiseux_exponents(const DeltaSequence& ds) { return puiseux_exponents(ds.free); }

inline DeltaSequence delta_sequence(const NumericalSemigroup& gamma, Int m, Int n) {
  std::vector<Int> arr;
  try {
    arr = plane_branch_arrangement(gamma, m, n);
  } catch (const std::invalid_argument& e) {
    throw FreenessError(e.what());
  }
  std::optional<FreeStructure> fs = free_structure(gamma, arr);
  if (!fs) throw FreenessError("delta_sequence: semigroup is not free for (m, n, ...)");
  DeltaSequence ds{*fs, puiseux_exponents(*fs), {}};
  for (std::size_t k = 1; k + 1 < arr.size(); ++k) {
    if (!(arr[k] * fs->d[k - 1] > arr[k + 1] * fs->d[k])) ds.decreasing_failures.push_back(k);
  }
  return ds;
}

struct Classification {
  Int ne;
  std::string family;
  std::string ne_set_pattern;
  std::vector<std::string> violations;

  bool consistent() const noexcept { return violations.empty(); }
};

namespace detail {

inline std::string pair_family(Int m, Int n, bool ne_two) {
  if (m == 2 && n % 2 == 1 && n >= 3) return "(m,n)=(2,2p+1), p=" + std::to_string((n - 1) / 2);
  if (m == 3 && (n == 4 || n == 5)) return "(m,n)=(3," + std::to_string(n) + ")";
  if (!ne_two) return {};
  if (m == 4 && n == 5) return "(m,n)=(4,5)";
  if (m == 3 && n % 3 != 0) return "(m,n)=(3,n)";
  return {};
}

inline std::string triple_family(Int m, Int n, Int r2) {
  if (r2 % 2 == 0) return {};
  const Int q = (r2 - 1) / 2;
  if (m == 4 && n % 4 == 2 && n >= 6 && 2 * n > r2) {
    return "(m,n,r2)=(4,4p+2,2q+1), p=" + std::to_string((n - 2) / 4) + ", q=" + std::to_string(q);
  }
  if (m == 6 && n == 8 && q <= 11) return "(m,n,r2)=(6,8,2p+1), p=" + std::to_string(q);
  if (m == 6 && n == 10 && q <= 14) return "(m,n,r2)=(6,10,2p+1), p=" + std::to_string(q);
  if (m == 4 && n == 6 && q <= 5) return "(m,n,r2)=(4,6,2p+1), p=" + std::to_string(q);
  return {};
}

}  // namespace detail

/// Checks the report against the admissible shapes: ne = 1 forces h = 1 and
/// NE = {F-1}; ne = 2 forces h <= 2 and one of the listed pairs. Every
/// failed check is a violation; nothing is dropped silently.
inline Classification classify_curve(const DifferentialReport& report, const DeltaSequence& ds) {
  Classification c{report.ne, {}, {}, {}};
  const Int F = report.gamma.frobenius();
  const Int m = ds.free.arrangement[0];
  const Int n = ds.free.arrangement[1];
  const std::size_t h = ds.h();
  const std::vector<Int>& ne_set = report.ne_set;
  auto is_pair = [&ne_set](Int a, Int b) {
    std::vector<Int> want{std::min(a, b), std::max(a, b)};
    return ne_set == want;
  };
  if (!ds.decreasing_failures.empty()) c.violations.push_back("r_k d_k > r_{k+1} d_{k+1} fails");
  if (report.ne > 0 && report.ne < (Int{1} << (h - 1))) c.violations.push_back("ne < 2^(h-1)");

  if (report.ne == 0) {
    c.family = "quasi-homogeneous (ne=0)";
    c.ne_set_pattern = "{}";
    if (std::gcd(m, n) != 1) c.violations.push_back("ne = 0 but gcd(m,n) != 1");
  } else if (report.ne == 1) {
    if (h != 1) c.violations.push_back("ne = 1 but h = " + std::to_string(h));
    if (ne_set == std::vector<Int>{F - 1}) {
      c.ne_set_pattern = "{F-1}";
    } else {
      c.violations.push_back("ne = 1 but NE != {F-1}");
    }
    c.family = detail::pair_family(m, n, false);
    if (c.family.empty()) c.violations.push_back("ne = 1 but (m,n) in no listed family");
  } else if (report.ne == 2) {
    if (is_pair(F - 1, F - m - 1)) {
      c.ne_set_pattern = "{F-1,F-m-1}";
    } else if (is_pair(F - 1, F - n - 1)) {
      c.ne_set_pattern = "{F-1,F-n-1}";
    } else if (h == 2 && is_pair(F - 1, F - ds.free.arrangement[2] - 1)) {
      c.ne_set_pattern = "{F-1,F-r2-1}";
    } else {
      c.violations.push_back("ne = 2 but NE matches no listed pair");
    }
    if (h == 1) {
      c.family = detail::pair_family(m, n, true);
    } else if (h == 2) {
      c.family = detail::triple_family(m, n, ds.free.arrangement[2]);
    } else {
      c.violations.push_back("ne = 2 but h = " + std::to_string(h));
    }
    if (h <= 2 && c.family.empty()) c.violations.push_back("ne = 2 but (m,n[,r2]) in no listed family");
  } else {
    c.family = "unconstrained (ne>=3)";
  }
  return c;
}

}  // namespace kahlerdeg
