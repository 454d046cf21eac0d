#pragma once

#include "ghom/groebner.hpp"

namespace ghom {

// Integer Laurent polynomial: c[k] is the coefficient of t^(lo+k).
struct IntLaurent {
  int lo = 0;
  std::vector<long long> c;
  bool is_zero() const { return c.empty(); }
};

IntLaurent lp_zero();
IntLaurent lp_one();
IntLaurent lp_monomial(int k, long long coeff = 1);
IntLaurent lp_normalize(IntLaurent f);
IntLaurent lp_add(const IntLaurent& a, const IntLaurent& b);
IntLaurent lp_sub(const IntLaurent& a, const IntLaurent& b);
IntLaurent lp_mul(const IntLaurent& a, const IntLaurent& b);
bool lp_eq(const IntLaurent& a, const IntLaurent& b);
long long lp_at(const IntLaurent& f, int k);
long long lp_eval_one(const IntLaurent& f);
// Exact division by (1-t); throws when the division leaves a remainder.
IntLaurent lp_div_one_minus_t(const IntLaurent& f);
std::string lp_to_string(const IntLaurent& f);

// Lead-term module of a Groebner basis: per component, the minimal monomial
// generators.
struct LeadTermModule {
  int rank = 0;
  std::vector<std::vector<Monomial>> comp_gens;
};

LeadTermModule lead_terms(const GroebnerBasis& gb);

// Number of (basis element, monomial) pairs of degree t outside L; equals
// dim_k of the degree-t slice of ambient/L.
long long standard_monomial_count(const Ring& R, const FreeMod& ambient, const LeadTermModule& l,
                                  int t);

// Numerator N(t) with HS(R/I) = N(t)/(1-t)^d, by pivot-splitting recursion on
// the monomial generators.
IntLaurent monomial_ideal_numerator(const Ring& R, std::vector<Monomial> gens);
// Numerator of ambient/L for a monomial submodule L.
IntLaurent hilbert_numerator(const Ring& R, const FreeMod& ambient, const LeadTermModule& l);

// N(t)/(1-t)^d in lowest terms: reduced(1) != 0, dim = remaining denominator
// exponent = Krull dimension of the module. Zero module: dim 0, reduced 0.
struct HilbertSeries {
  IntLaurent numerator;
  int denom = 0;
  IntLaurent reduced;
  int dim = 0;
};

HilbertSeries make_series(const Ring& R, IntLaurent numerator);
long long series_coeff(const HilbertSeries& hs, int t);  // Hilbert function value
long long multiplicity(const HilbertSeries& hs);         // reduced(1); 0 for the zero module

}  // namespace ghom
