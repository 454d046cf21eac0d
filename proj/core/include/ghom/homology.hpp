#pragma once

#include "ghom/resolution.hpp"

namespace ghom {

// Ext^i_R(M, R) as homology of the dualized minimal resolution.
ModulePres ext_module(const ModulePres& p, int i);
ModulePres ext_module_with_res(const Ring& R, const ResolutionResult& rr, int i);

// Presentation of A ⊗ B: block map [phi⊗I | I⊗psi] into F0⊗G0. Never
// minimalized implicitly.
ModulePres tensor_pres(const ModulePres& a, const ModulePres& b);

// Tor_i(A,B) as homology of (resolution of A) ⊗ B.
ModulePres tor_module(const ModulePres& a, const ModulePres& b, int i);
ModulePres tor_module_with_res(const Ring& R, const ResolutionResult& res_a, const ModulePres& b,
                               int i);

struct BidualResult {
  ModulePres star;          // M*
  ModulePres double_star;   // M**
  GradedMatrix bidual_map;  // evaluation F0 -> H0*, descending to M -> M**
  ModulePres coker;         // C = coker(M -> M**)
  ModulePres torsion;       // T = ker(M -> M**) = torsion submodule of M
  Submodule torsion_preimage;  // {v in F0 : eval(v) = 0}; T = torsion_preimage / im(phi)
};
BidualResult dual_and_bidual(const ModulePres& p);

struct FiniteSupportResult {
  ModulePres m0;    // H^0_m(M) = (im phi : m^∞)/im phi, finite length
  ModulePres mbar;  // M/M0
};
FiniteSupportResult finite_support_part(const ModulePres& p);

// First syzygy module: kernel of the minimal free cover F0 -> M, presented by
// the second resolution map.
ModulePres syzygy_module(const ModulePres& p);

}  // namespace ghom
