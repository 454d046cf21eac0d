#pragma once

#include <doctest.h>

#include "ghom/corpus.hpp"
#include "ghom/module_io.hpp"
#include "support/slice_oracle.hpp"

namespace ghom::test {

inline Ring r2() { return make_ring(32003, {"x", "y"}); }
inline Ring r3() { return make_ring(32003, {"x", "y", "z"}); }

inline Poly pp(const Ring& R, const std::string& s) { return poly_parse(R, s); }

inline ModuleVec vec(const Ring& R, const std::vector<std::string>& comps) {
  std::vector<Poly> ps;
  for (const auto& s : comps) ps.push_back(poly_parse(R, s));
  return mv_from_polys(R, ps);
}

inline Submodule ideal(const Ring& R, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  for (const auto& s : gens) ps.push_back(poly_parse(R, s));
  return submodule_from_ideal(R, ps);
}

inline ModulePres quotient_ring(const Ring& R, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  for (const auto& s : gens) ps.push_back(poly_parse(R, s));
  return minimalize(coker_of_ideal(R, ps));
}

// random low-degree polynomial, not necessarily homogeneous
inline Poly random_poly(const Ring& R, Rng& rng, int max_degree) {
  std::vector<Term> raw;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : monomials_of_degree(R.nvars(), d))
      if (rng.below(3) == 0) raw.push_back(Term{rng.below(R.p), std::move(m)});
  return poly_normalize(R, std::move(raw));
}

}  // namespace ghom::test
