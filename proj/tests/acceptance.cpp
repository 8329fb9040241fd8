// Acceptance checks. One PASS/FAIL line per criterion; the exit status is
// nonzero if any line fails.

#include "kahlerdeg/kahlerdeg.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace kahlerdeg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void report(const std::string& id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << '\n';
  for (const auto& n : o.notes) std::cout << "     " << n << '\n';
  std::cout.flush();
  if (!o.pass) ++failures;
}

template <class T>
std::string show(const std::vector<T>& v) {
  return render_list(v);
}

Poly P(const char* s) { return parse_poly(s); }

/// A monomial curve (T^n, T^m) disguised by T = t + c and the moves
/// Y <- Y + a, X <- X + b Y^k + e with k m < n.
CurveParametrization disguised_monomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> md(2, 7), small(-3, 3);
  while (true) {
    const Int m = md(rng);
    std::uniform_int_distribution<Int> nd(m + 1, 15);
    const Int n = nd(rng);
    if (std::gcd(m, n) != 1) continue;
    Poly T = Poly::power(1) + Poly::constant(Rational(small(rng)));
    Poly y = pow(T, m) + Poly::constant(Rational(small(rng)));
    Poly x = pow(T, n) + Poly::constant(Rational(small(rng)));
    for (Int k = 1; k * m < n; ++k) x += pow(y, k) * Rational(small(rng));
    return CurveParametrization(x, y);
  }
}

}  // namespace

int main() {
  report("1", "basis of K[t^6+t, t^4] and its degree monoid (under 1 s)", [] {
    Outcome o;
    auto t0 = Clock::now();
    AlgebraBasis a = compute_algebra_basis({P("t^6+t"), P("t^4")});
    const double dt = seconds_since(t0);
    o.expect(render_list(a.gens) == "[ t^4, t^6+t, t^7+1/2*t^2 ]", "basis " + render_list(a.gens));
    o.expect(a.degree_monoid.minimal_generators() == std::vector<Int>{4, 6, 7},
             "minimal generators " + show(a.degree_monoid.minimal_generators()));
    o.expect(a.reduced && a.minimal, "basis not flagged reduced and minimal");
    o.expect(dt < 1.0, "runtime " + std::to_string(dt) + " s");
    return o;
  });

  report("2", "kernel relators of (3+S) u (5+S) over S = <3,4>", [] {
    Outcome o;
    NumericalSemigroup s({3, 4});
    auto r = pair_relators(3, 5, s);
    o.expect(r == std::vector<std::pair<Int, Int>>{{6, 4}, {8, 6}}, "R(3,5) has " + std::to_string(r.size()) + " pairs");
    auto k = kernel_generators(RelativeIdeal(s, {3, 5}));
    o.expect(k.size() == 2 && k[0] == KernelRelator{0, 1, 6, 4} && k[1] == KernelRelator{0, 1, 8, 6},
             "kernel generators differ");
    return o;
  });

  report("3", "module t^3 A + t^4 A over A = K[t^6+t, t^4], with trace", [] {
    Outcome o;
    AlgebraBasis a = compute_algebra_basis({P("t^6+t"), P("t^4")});
    ModuleBasis mb = compute_module_basis({P("t^3"), P("t^4")}, a);
    o.expect(render_list(mb.gens) == "[ t^3, t^4, t^5, t^6 ]", "basis " + render_list(mb.gens));
    bool five = false, six = false;
    for (const auto& st : mb.trace) {
      five = five || render(st.s_polynomial) == "-1/2*t^5";
      six = six || render(st.s_polynomial) == "-1/2*t^6";
    }
    o.expect(five && six, "trace lacks -1/2*t^5 or -1/2*t^6");
    return o;
  });

  report("4", "over-ideals of (2,3)+<3,4>, non-exact sets and realizing curves", [] {
    Outcome o;
    NumericalSemigroup s({3, 4});
    auto ois = over_ideals(RelativeIdeal(s, {2, 3}));
    const std::vector<std::vector<Int>> gens{{2, 3}, {0, 1, 2}, {0, 2}, {1, 2, 3}, {2, 3, 4}};
    const std::vector<std::vector<Int>> nes{{}, {0, 1, 4}, {0, 4}, {1, 4}, {4}};
    o.expect(ois.size() == 5, std::to_string(ois.size()) + " over-ideals");
    for (std::size_t i = 0; i < std::min<std::size_t>(ois.size(), 5); ++i) {
      o.expect(ois[i].minimal_generators() == gens[i], "ideal " + show(ois[i].minimal_generators()));
      o.expect(non_exact_set(ois[i], s) == nes[i], "non-exact " + show(non_exact_set(ois[i], s)));
    }
    const char* curves[][3] = {{"t^3", "t^4", "[ t^2, t^3 ]"},
                               {"t^3+t^2", "t^4", "[ t^2+2/3*t, t^3, t^4 ]"},
                               {"t^3", "t^4+t", "[ 1, t^2 ]"},
                               {"t^3", "t^4+t^2", "[ t, t^2, t^3 ]"},
                               {"t^3+t", "t^4", "[ 1, t, t^2 ]"}};
    for (const auto& c : curves) {
      DifferentialReport r = curve_invariants(CurveParametrization(P(c[0]), P(c[1])));
      o.expect(render_list(r.differentials) == c[2],
               std::string("(") + c[0] + ", " + c[1] + ") gives " + render_list(r.differentials));
    }
    return o;
  });

  report("5a", "normal form of (t^9+t^5, t^4): W, shift move, witness", [] {
    Outcome o;
    CurveParametrization p(P("t^9+t^5"), P("t^4"));
    NormalizedParametrization np = reparametrize(p, -8);
    LaurentSeries w = wronskian(np);
    o.expect(w.leading_exponent() == 8 && w.leading_coefficient() == 16 && w.terms().size() == 1,
             "W = " + render(w));
    NormalFormOutcome nf = normal_form(p);
    o.expect(nf.steps.size() == 1 && nf.steps[0].move == NormalFormStep::Move::shift_y &&
                 nf.steps[0].amount == make_rational(4, 9),
             "first move is not Y + 4/9");
    o.expect(render(nf.y) == "t^4+4/9", "Y after move " + render(nf.y));
    o.expect(render(nf.w) == "-80/9*t^4", "W after move " + render(nf.w));
    o.expect(nf.kind == NormalFormOutcome::Kind::non_exact_witness && nf.witness_degree == 4,
             "outcome " + to_string(nf.kind));
    return o;
  });

  report("5b", "normal form of (t^7, t^4+t): X1 = T^7 - 1/4 T^4 + 7/16 T, X2 = X1 + 1/4 Y1, W2 ~ 21/2 T^4", [] {
    Outcome o;
    CurveParametrization p(P("t^7"), P("t^4+t"));
    NormalizedParametrization np = reparametrize(p, -8);
    o.expect(np.x1.coefficient(7) == 1, "T^7 coefficient " + to_string(np.x1.coefficient(7)));
    o.expect(np.x1.coefficient(4) == make_rational(-1, 4), "T^4 coefficient " + to_string(np.x1.coefficient(4)) +
                                                               " (expected -1/4)");
    o.expect(np.x1.coefficient(1) == make_rational(7, 16), "T coefficient " + to_string(np.x1.coefficient(1)) +
                                                               " (expected 7/16)");
    o.expect(np.x1.coefficient(6) == 0 && np.x1.coefficient(5) == 0 && np.x1.coefficient(3) == 0 &&
                 np.x1.coefficient(2) == 0,
             "unexpected terms in X1 = " + render(np.x1.truncated(0)));
    NormalFormOutcome nf = normal_form(p);
    o.expect(!nf.steps.empty() && nf.steps[0].move == NormalFormStep::Move::subtract_power &&
                 nf.steps[0].power == 1 && nf.steps[0].amount == make_rational(-1, 4),
             "first move adds " + (nf.steps.empty() ? std::string("nothing") : to_string(-nf.steps[0].amount)) +
                 "*Y1 (expected 1/4)");
    const Int m = p.m();
    const Exponent wdeg = nf.w.degree();
    o.expect(wdeg == 4 && nf.w.leading_coefficient() == make_rational(21, 2),
             "W2 leading term " + to_string(nf.w.leading_coefficient()) + "*T^" + std::to_string(wdeg) +
                 " (expected 21/2*T^4)");
    AlgebraBasis a = compute_algebra_basis({p.x(), p.y()});
    o.expect(!a.degree_monoid.contains(5), "5 lies in d(A)");
    o.expect(nf.kind == NormalFormOutcome::Kind::non_exact_witness && nf.witness_degree == 4 &&
                 nf.lambda && m + *nf.lambda == 5,
             "outcome " + to_string(nf.kind));
    return o;
  });

  report("6", "oracle suites: 100 algebras, 100 modules, 200 memberships (under 60 s)", [] {
    Outcome o;
    auto t0 = Clock::now();
    std::mt19937_64 rng(20240601);
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
      std::string msg = oracle::check_algebra(oracle::random_algebra(rng));
      if (!msg.empty() && bad++ < 3) o.notes.push_back(msg);
    }
    int bad_mod = 0;
    for (int k = 0; k < 100; ++k) {
      auto [a, m] = oracle::random_module(rng);
      std::string msg = oracle::check_module(a, m);
      if (!msg.empty() && bad_mod++ < 3) o.notes.push_back(msg);
    }
    int bad_mem = 0;
    std::uniform_int_distribution<std::size_t> cnt(1, 5);
    std::uniform_int_distribution<Int> gd(1, 40);
    for (int k = 0; k < 200; ++k) {
      std::vector<Int> g(cnt(rng));
      for (auto& x : g) x = gd(rng);
      DegreeMonoid dm(g);
      auto reach = oracle::reachable(g, 600);
      for (Int x = 0; x <= 600; ++x) {
        if (dm.contains(x) != (reach[static_cast<std::size_t>(x)] != 0)) {
          if (bad_mem++ < 3) o.notes.push_back("membership of " + std::to_string(x) + " in " + show(g));
          break;
        }
      }
    }
    const double dt = seconds_since(t0);
    o.expect(bad == 0, std::to_string(bad) + " algebra mismatches");
    o.expect(bad_mod == 0, std::to_string(bad_mod) + " module mismatches");
    o.expect(bad_mem == 0, std::to_string(bad_mem) + " membership mismatches");
    o.expect(dt < 60.0, "runtime " + std::to_string(dt) + " s");
    std::cout << "     (" << dt << " s)\n";
    return o;
  });

  report("7", "invariant audit of 200 random plane curves (m <= 8, n <= 15)", [] {
    Outcome o;
    std::mt19937_64 rng(777);
    int violations = 0;
    std::map<std::string, int> by_kind;
    auto note = [&](const CurveParametrization& p, const std::string& what) {
      if (by_kind[what]++ == 0) o.notes.push_back("(" + render(p.x()) + ", " + render(p.y()) + "): " + what);
      ++violations;
    };
    std::map<Int, int> by_ne;
    for (int k = 0; k < 200; ++k) {
      CurveParametrization p = oracle::random_curve(rng);
      DifferentialReport r = curve_invariants(p);
      ++by_ne[std::min<Int>(r.ne, 3)];
      const NumericalSemigroup& g = r.gamma;
      if (r.ne > g.genus()) note(p, "ne > g");
      if (g.is_symmetric() && 2 * r.ne > g.frobenius()) note(p, "ne > F/2");
      if (r.nu != r.mu - r.ne) note(p, "nu != mu - ne");
      if (r.mu != g.conductor()) note(p, "mu != C");
      for (Int s = 1; s <= g.conductor() + r.m; ++s) {
        if (g.contains(s) && !r.ideal.contains(s - 1)) note(p, "exact degree s-1 missing from I");
      }
      if (!r.free) {
        note(p, "freeness not verified: " + r.freeness_issue);
        continue;
      }
      if (r.ne > 0 && r.ne < (Int{1} << (r.free->h() - 1))) note(p, "ne < 2^(h-1)");
      DeltaSequence ds = delta_sequence(g, r.m, r.n);
      Classification c = classify_curve(r, ds);
      if (r.ne == 1 || r.ne == 2) {
        for (const auto& v : c.violations) note(p, v);
      }
    }
    for (const auto& [kind, count] : by_kind) o.notes.push_back(kind + ": " + std::to_string(count) + " curves");
    o.expect(violations == 0, std::to_string(violations) + " violations");
    std::ostringstream dist;
    dist << "     (ne=0: " << by_ne[0] << ", ne=1: " << by_ne[1] << ", ne=2: " << by_ne[2] << ", ne>=3: " << by_ne[3]
         << ")";
    std::cout << dist.str() << '\n';
    return o;
  });

  report("8", "unique reduced minimal basis under 3 input permutations (50 sets)", [] {
    Outcome o;
    std::mt19937_64 rng(888);
    int bad = 0;
    for (int k = 0; k < 50; ++k) {
      std::vector<Poly> gens = oracle::random_algebra(rng);
      std::vector<Poly> first;
      for (int perm = 0; perm < 3; ++perm) {
        std::shuffle(gens.begin(), gens.end(), rng);
        AlgebraBasis a = compute_algebra_basis(gens);
        if (perm == 0) {
          first = a.gens;
        } else if (a.gens != first) {
          if (bad++ < 3) o.notes.push_back(render_list(first) + " vs " + render_list(a.gens));
        }
      }
    }
    o.expect(bad == 0, std::to_string(bad) + " disagreements");
    return o;
  });

  report("9", "normal form verdict vs ne = 0 on 100 random curves", [] {
    Outcome o;
    std::mt19937_64 rng(999);
    int bad = 0, qh = 0;
    for (int k = 0; k < 100; ++k) {
      CurveParametrization p = (k % 4 == 0) ? disguised_monomial(rng) : oracle::random_curve(rng);
      DifferentialReport r = curve_invariants(p);
      NormalFormOutcome nf = normal_form(p);
      const bool quasi = nf.kind == NormalFormOutcome::Kind::quasi_homogeneous;
      qh += quasi;
      if (nf.kind == NormalFormOutcome::Kind::precision_exhausted || quasi != (r.ne == 0)) {
        if (bad++ < 3)
          o.notes.push_back("(" + render(p.x()) + ", " + render(p.y()) + "): " + to_string(nf.kind) +
                            ", ne = " + std::to_string(r.ne));
      }
      if (nf.witness_degree && (!r.ideal.contains(*nf.witness_degree) || r.gamma.contains(*nf.witness_degree + 1))) {
        if (bad++ < 3) o.notes.push_back("witness " + std::to_string(*nf.witness_degree) + " is not non-exact");
      }
    }
    o.expect(bad == 0, std::to_string(bad) + " disagreements");
    std::cout << "     (" << qh << " quasi-homogeneous)\n";
    return o;
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << '\n';
  return failures == 0 ? 0 : 1;
}
