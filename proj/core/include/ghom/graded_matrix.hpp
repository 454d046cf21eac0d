#pragma once

#include "ghom/free_module.hpp"

namespace ghom {

// Homogeneous map source -> target between graded free modules. Entry (i,j)
// is homogeneous of degree source.twists[j] - target.twists[i], or zero.
struct GradedMatrix {
  Ring ring;
  FreeMod target;
  FreeMod source;
  std::vector<std::vector<Poly>> e;  // [target.rank()][source.rank()]
};

GradedMatrix mat_make(Ring R, FreeMod target, FreeMod source, std::vector<std::vector<Poly>> entries);
GradedMatrix mat_zero(Ring R, FreeMod target, FreeMod source);
GradedMatrix mat_identity(Ring R, const FreeMod& f);

struct HomCheck {
  bool ok = true;
  int row = -1, col = -1;  // first offending entry when !ok
};
HomCheck check_homogeneous(const GradedMatrix& m);
void require_homogeneous(const GradedMatrix& m);

GradedMatrix mat_transpose(const GradedMatrix& m);
GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b);
bool mat_is_zero(const GradedMatrix& m);
ModuleVec mat_column(const GradedMatrix& m, int j);
ModuleVec mat_apply(const GradedMatrix& m, const ModuleVec& v);

// Column twists are derived from homogeneous column degrees; a zero column
// gets twist 0.
GradedMatrix mat_from_columns(const Ring& R, const FreeMod& target,
                              const std::vector<ModuleVec>& cols);
GradedMatrix mat_hconcat(const GradedMatrix& a, const GradedMatrix& b);

GradedMatrix mat_tensor_left(const GradedMatrix& phi, const FreeMod& g);   // phi ⊗ id
GradedMatrix mat_tensor_right(const FreeMod& f, const GradedMatrix& psi);  // id ⊗ psi

Poly mat_det(const GradedMatrix& m);  // square matrices, cofactor expansion

}  // namespace ghom
