#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ghom/monomial.hpp"
#include "ghom/ring.hpp"

namespace ghom {

struct Term {
  std::int64_t c = 0;  // in [1, p); zero coefficients are never stored
  Monomial m;
};

// Sparse polynomial; terms strictly descending in grevlex.
struct Poly {
  std::vector<Term> t;
  bool is_zero() const { return t.empty(); }
};

Poly poly_zero();
Poly poly_const(const Ring& R, std::int64_t c);
Poly poly_var(const Ring& R, int i, int exp = 1);
Poly poly_term(const Ring& R, std::int64_t c, Monomial m);

// Sorts, merges duplicate monomials, drops zero coefficients.
Poly poly_normalize(const Ring& R, std::vector<Term> raw);

Poly poly_add(const Ring& R, const Poly& f, const Poly& g);
Poly poly_sub(const Ring& R, const Poly& f, const Poly& g);
Poly poly_neg(const Ring& R, const Poly& f);
Poly poly_scale(const Ring& R, const Poly& f, std::int64_t c);
Poly poly_mul_term(const Ring& R, const Poly& f, std::int64_t c, const Monomial& m);
Poly poly_mul(const Ring& R, const Poly& f, const Poly& g);
bool poly_eq(const Poly& f, const Poly& g);

// Total degree of the leading term; -1 for zero.
int poly_degree(const Poly& f);

struct Homogeneity {
  bool homogeneous = true;
  int degree = -1;  // meaningful only for nonzero homogeneous polynomials
};
Homogeneity poly_homogeneity(const Poly& f);

// Checks sortedness, coefficient range and exponent lengths.
void poly_validate(const Ring& R, const Poly& f);

std::string poly_to_string(const Ring& R, const Poly& f);

// Grammar: terms joined by '+'/'-'; a term is a '*'-joined product of decimal
// integers and var[^exp] factors, e.g. "3*x^2*y - y^3". Coefficients are
// reduced mod p. Throws Errc::parse_error; the message carries a character
// offset.
Poly poly_parse(const Ring& R, std::string_view s);

}  // namespace ghom
