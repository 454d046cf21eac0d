#pragma once

#include "ghom/graded_matrix.hpp"
#include "ghom/groebner.hpp"

namespace ghom::oracle {

// Degreewise linear-algebra ground truth, independent of the Groebner engine:
// enumerate the monomial basis of a degree slice, span the generator
// multiples, Gaussian-eliminate over F_p.

// dim_k of the degree-t slice of the span of gens inside ambient
long long slice_dim(const Ring& R, const FreeMod& ambient, const std::vector<ModuleVec>& gens,
                    int t);

// dim_k of the degree-t slice of ambient / span(gens)
long long quotient_hf(const Ring& R, const FreeMod& ambient, const std::vector<ModuleVec>& gens,
                      int t);

// rank of the degree-t slice of a homogeneous map
long long map_slice_rank(const GradedMatrix& m, int t);

// dim_k of the degree-t slice of the free module itself
long long free_slice_dim(const Ring& R, const FreeMod& f, int t);

}  // namespace ghom::oracle
