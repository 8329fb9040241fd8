// Walks through the invariants of a few plane curves.

#include "kahlerdeg/kahlerdeg.hpp"

#include <iostream>

int main() {
  using namespace kahlerdeg;
  const char* curves[][2] = {{"t^3", "t^4"}, {"t^3+t", "t^4"}, {"t^4", "t^6+t^7"}, {"t^7", "t^4+t"}};
  for (const auto& c : curves) {
    CurveParametrization p(parse_poly(c[0]), parse_poly(c[1]));
    DifferentialReport r = curve_invariants(p);
    NormalFormOutcome nf = normal_form(p);
    std::cout << "(" << c[0] << ", " << c[1] << ")\n"
              << "  semigroup     " << render_list(r.gamma.minimal_generators()) << '\n'
              << "  differentials " << render_list(r.differentials) << '\n'
              << "  non-exact     " << render_list(r.ne_set) << '\n'
              << "  mu, nu        " << r.mu << ", " << r.nu << '\n'
              << "  normal form   " << to_string(nf.kind);
    if (nf.witness_degree) std::cout << " at degree " << *nf.witness_degree;
    std::cout << " after " << nf.steps.size() << " move(s)\n";
  }
}
