#pragma once

#include "ghom/hilbert.hpp"

namespace ghom {

// Finitely generated graded module, given as coker(phi : F1 -> F0).
struct ModulePres {
  GradedMatrix phi;
  bool minimal = false;  // no nonzero constant entries and no zero columns
};

ModulePres make_pres(GradedMatrix phi);
ModulePres pres_free(const Ring& R, FreeMod f);
ModulePres pres_zero(const Ring& R);
ModulePres coker_of_ideal(const Ring& R, const std::vector<Poly>& ideal_gens);  // R/I

// Splits off unit pivots until no constant entries remain; the cokernel is
// unchanged up to isomorphism.
ModulePres minimalize(const ModulePres& p);
bool pres_is_zero(const ModulePres& p);

// Z/B for B ⊆ Z (containment validated): generators are Z's generators,
// relations are the syzygies of Z plus division expressions of B's generators.
ModulePres subquotient_pres(const Submodule& z, const Submodule& b);
ModulePres pres_from_submodule(const Submodule& s);

// Canonical serialization, usable as a memo key.
std::string pres_key(const ModulePres& p);

}  // namespace ghom
