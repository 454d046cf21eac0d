#include "ghom/homology.hpp"

namespace ghom {

namespace {

Submodule full_ambient(const Ring& R, const FreeMod& f) {
  std::vector<ModuleVec> gens;
  gens.reserve(f.rank());
  for (int i = 0; i < f.rank(); ++i) gens.push_back(mv_basis(R, i));
  return Submodule{R, f, std::move(gens)};
}

Submodule empty_sub(const Ring& R, const FreeMod& f) { return Submodule{R, f, {}}; }

// {v : m(v) ∈ n} as a submodule of m.source
Submodule preimage(const GradedMatrix& m, const Submodule& n) {
  GradedMatrix n_mat = mat_from_columns(m.ring, m.target, n.gens);
  GradedMatrix combined = mat_hconcat(m, n_mat);
  Submodule k = kernel_of_map(combined);
  int rank = m.source.rank();
  std::vector<ModuleVec> out;
  for (const auto& v : k.gens) {
    std::vector<MTerm> first;
    for (const auto& t : v.t)
      if (t.comp < rank) first.push_back(t);
    ModuleVec w = mv_normalize(m.ring, std::move(first));
    if (!w.is_zero()) out.push_back(std::move(w));
  }
  return Submodule{m.ring, m.source, std::move(out)};
}

const FreeMod& res_module(const ResolutionResult& rr, int i) {
  return i == 0 ? rr.res.f0 : rr.res.maps[static_cast<size_t>(i - 1)].source;
}

}  // namespace

ModulePres ext_module_with_res(const Ring& R, const ResolutionResult& rr, int i) {
  int d = R.nvars();
  if (i < 0 || i > d) fail(Errc::bad_argument, "Ext index out of range");
  int len = rr.res.length();
  if (rr.res.f0.rank() == 0 || i > len) return pres_zero(R);

  FreeMod fi_dual = freemod_dual(res_module(rr, i));
  Submodule z = i < len ? kernel_of_map(mat_transpose(rr.res.maps[static_cast<size_t>(i)]))
                        : full_ambient(R, fi_dual);
  Submodule b = i > 0 ? image_of(mat_transpose(rr.res.maps[static_cast<size_t>(i - 1)]))
                      : empty_sub(R, fi_dual);
  return subquotient_pres(z, b);
}

ModulePres ext_module(const ModulePres& p, int i) {
  auto rr = free_resolution(p);
  return ext_module_with_res(p.phi.ring, rr, i);
}

ModulePres tensor_pres(const ModulePres& a, const ModulePres& b) {
  require_same_ring(a.phi.ring, b.phi.ring);
  GradedMatrix left = mat_tensor_left(a.phi, b.phi.target);
  GradedMatrix right = mat_tensor_right(a.phi.target, b.phi);
  return make_pres(mat_hconcat(left, right));
}

ModulePres tor_module_with_res(const Ring& R, const ResolutionResult& res_a, const ModulePres& b,
                               int i) {
  int d = R.nvars();
  if (i < 0 || i > d) fail(Errc::bad_argument, "Tor index out of range");
  int len = res_a.res.length();
  if (res_a.res.f0.rank() == 0 || b.phi.target.rank() == 0) return pres_zero(R);
  if (i > len) return pres_zero(R);

  const FreeMod& g0 = b.phi.target;
  FreeMod fi_g0 = freemod_tensor(res_module(res_a, i), g0);

  // relations living over spot i: boundaries from the resolution plus the
  // tensored relations of b
  GradedMatrix ni = mat_tensor_right(res_module(res_a, i), b.phi);
  Submodule bnd = image_of(ni);
  if (i < len) {
    GradedMatrix di1 = mat_tensor_left(res_a.res.maps[static_cast<size_t>(i)], g0);
    for (int j = 0; j < di1.source.rank(); ++j) bnd.gens.push_back(mat_column(di1, j));
  }

  Submodule z = full_ambient(R, fi_g0);
  if (i > 0) {
    GradedMatrix di = mat_tensor_left(res_a.res.maps[static_cast<size_t>(i - 1)], g0);
    GradedMatrix nim1 = mat_tensor_right(res_module(res_a, i - 1), b.phi);
    z = preimage(di, image_of(nim1));
  }
  return subquotient_pres(z, bnd);
}

ModulePres tor_module(const ModulePres& a, const ModulePres& b, int i) {
  auto rr = free_resolution(a);
  ModulePres bm = b.minimal ? b : minimalize(b);
  return tor_module_with_res(a.phi.ring, rr, bm, i);
}

BidualResult dual_and_bidual(const ModulePres& p) {
  const Ring& R = p.phi.ring;
  ModulePres q = p.minimal ? p : minimalize(p);
  BidualResult out{pres_zero(R),
                   pres_zero(R),
                   mat_zero(R, FreeMod{}, q.phi.target),
                   pres_zero(R),
                   pres_zero(R),
                   Submodule{R, q.phi.target, {}}};
  if (q.phi.target.rank() == 0) return out;

  const FreeMod& f0 = q.phi.target;

  // M* = ker(phi^T) inside F0*, presented on a minimal generating set.
  Submodule zstar = kernel_of_map(mat_transpose(q.phi));
  std::vector<ModuleVec> zgens = min_generators(zstar);
  Submodule zspan{R, zstar.ambient, zgens};
  out.star = pres_from_submodule(zspan);
  out.star.minimal = true;

  const FreeMod& h0 = out.star.phi.target;  // twists: degrees of the z generators
  FreeMod h0_dual = freemod_dual(h0);

  // evaluation map F0 -> H0*: row k lists the components of z_k
  std::vector<std::vector<Poly>> ee(static_cast<size_t>(h0.rank()));
  for (int k = 0; k < h0.rank(); ++k) ee[static_cast<size_t>(k)] = mv_to_polys(R, f0.rank(), zgens[static_cast<size_t>(k)]);
  GradedMatrix eval = mat_make(R, h0_dual, f0, std::move(ee));
  require_homogeneous(eval);
  out.bidual_map = eval;

  // evaluation kills the relations of M and of M*
  if (!mat_is_zero(mat_mul(eval, q.phi)))
    fail(Errc::internal, "evaluation map does not kill the presentation relations");
  if (!mat_is_zero(mat_mul(mat_transpose(out.star.phi), eval)))
    fail(Errc::internal, "evaluation map does not land in the double dual");

  // M** = ker((M* presentation)^T) inside H0*
  Submodule zdd = kernel_of_map(mat_transpose(out.star.phi));
  std::vector<ModuleVec> wgens = min_generators(zdd);
  Submodule ddspan{R, zdd.ambient, wgens};
  out.double_star = pres_from_submodule(ddspan);
  out.double_star.minimal = true;

  // C = M** / image of the evaluation map
  std::vector<ModuleVec> ecols;
  for (int j = 0; j < f0.rank(); ++j) {
    ModuleVec c = mat_column(eval, j);
    if (!c.is_zero()) ecols.push_back(std::move(c));
  }
  out.coker = subquotient_pres(ddspan, Submodule{R, zdd.ambient, ecols});

  // T = ker(evaluation)/im(phi); equals the torsion submodule
  Submodule zt = kernel_of_map(eval);
  out.torsion = subquotient_pres(zt, image_of(q.phi));
  out.torsion_preimage = std::move(zt);
  return out;
}

FiniteSupportResult finite_support_part(const ModulePres& p) {
  const Ring& R = p.phi.ring;
  ModulePres q = p.minimal ? p : minimalize(p);
  if (q.phi.target.rank() == 0) return {pres_zero(R), pres_zero(R)};

  std::vector<Poly> m_gens;
  for (int i = 0; i < R.nvars(); ++i) m_gens.push_back(poly_var(R, i));

  Submodule im = image_of(q.phi);
  Submodule sat = saturate(im, m_gens);
  FiniteSupportResult out{subquotient_pres(sat, im),
                          make_pres(mat_from_columns(R, q.phi.target, sat.gens))};
  return out;
}

ModulePres syzygy_module(const ModulePres& p) {
  const Ring& R = p.phi.ring;
  auto rr = free_resolution(p);
  if (rr.res.length() == 0) return pres_zero(R);
  if (rr.res.length() == 1) return pres_free(R, rr.res.maps[0].source);
  ModulePres out{rr.res.maps[1], true};
  return out;
}

}  // namespace ghom
