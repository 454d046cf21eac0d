#pragma once

#include "ghom/poly.hpp"

namespace ghom {

// Graded free module F = ⊕_j R(-twists[j]); basis element j generates in
// degree twists[j].
struct FreeMod {
  std::vector<int> twists;
  int rank() const { return static_cast<int>(twists.size()); }
  bool operator==(const FreeMod&) const = default;
};

inline FreeMod freemod_dual(const FreeMod& f) {
  FreeMod g;
  g.twists.reserve(f.twists.size());
  for (int a : f.twists) g.twists.push_back(-a);
  return g;
}

// Basis (i,k) of a ⊗ b maps to index i*rank(b)+k; twists add.
FreeMod freemod_tensor(const FreeMod& a, const FreeMod& b);

struct MTerm {
  std::int32_t comp = 0;
  Monomial m;
  std::int64_t c = 0;
};

// Position-over-term: the smaller component index wins; equal components fall
// back to grevlex. Returns +1 if a > b.
int mt_cmp(const MTerm& a, const MTerm& b);

// Free-module element as a term list, strictly descending in the POT order.
struct ModuleVec {
  std::vector<MTerm> t;
  bool is_zero() const { return t.empty(); }
};

ModuleVec mv_normalize(const Ring& R, std::vector<MTerm> raw);
ModuleVec mv_add(const Ring& R, const ModuleVec& a, const ModuleVec& b);
ModuleVec mv_sub(const Ring& R, const ModuleVec& a, const ModuleVec& b);
ModuleVec mv_scale(const Ring& R, const ModuleVec& v, std::int64_t c);
ModuleVec mv_mul_term(const Ring& R, const ModuleVec& v, std::int64_t c, const Monomial& m);
// a - c*(m*b); when the head of c*(m*b) equals the head of a the heads cancel.
ModuleVec mv_submul(const Ring& R, const ModuleVec& a, std::int64_t c, const Monomial& m,
                    const ModuleVec& b);
bool mv_eq(const ModuleVec& a, const ModuleVec& b);

ModuleVec mv_from_polys(const Ring& R, const std::vector<Poly>& comps);
std::vector<Poly> mv_to_polys(const Ring& R, int rank, const ModuleVec& v);
ModuleVec mv_basis(const Ring& R, int comp);
// sum coeffs[i] * gens[i]
ModuleVec mv_combine(const Ring& R, const std::vector<ModuleVec>& gens,
                     const std::vector<Poly>& coeffs);

struct MvHomogeneity {
  bool homogeneous = true;
  int degree = 0;  // meaningful only for nonzero homogeneous vectors
};
MvHomogeneity mv_homogeneity(const FreeMod& f, const ModuleVec& v);
// Homogeneous degree of a nonzero vector; throws otherwise.
int mv_degree(const FreeMod& f, const ModuleVec& v);

std::string mv_to_string(const Ring& R, const ModuleVec& v);

}  // namespace ghom
