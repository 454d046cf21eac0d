#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "ghom/bounds.hpp"

namespace ghom {

using ordered_json = nlohmann::ordered_json;

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::proven: return "proven";
    case Tier::conditional: return "conditional";
    case Tier::exploratory: return "exploratory";
  }
  return "unknown";
}

namespace {

struct BoundInfo {
  bool pair;
  Tier tier;
};

const std::vector<std::pair<std::string, BoundInfo>>& bound_table() {
  static const std::vector<std::pair<std::string, BoundInfo>> table = {
      {"AmodA0", {true, Tier::proven}},
      {"degandbetti", {false, Tier::proven}},
      {"nagel", {false, Tier::proven}},
      {"hdegsyz", {false, Tier::proven}},
      {"tor1_syzygy", {true, Tier::proven}},
      {"vbbetahi", {true, Tier::proven}},
      {"h0vb", {true, Tier::proven}},
      {"bv_hdeg", {false, Tier::proven}},
      {"tor1_CB", {true, Tier::proven}},
      {"dim2cm", {false, Tier::conditional}},
      {"degabc", {false, Tier::proven}},
      {"h0dim3", {true, Tier::proven}},
      {"addiofreg", {false, Tier::proven}},
      {"grdim2", {false, Tier::conditional}},
      {"refl_additivity", {false, Tier::proven}},
  };
  return table;
}

const BoundInfo& info_for(const std::string& id) {
  for (const auto& [name, info] : bound_table())
    if (name == id) return info;
  fail(Errc::bad_argument, "unknown bound id: " + id);
}

BoundReport base_report(const std::string& id) {
  BoundReport r;
  r.bound_id = id;
  r.tier = info_for(id).tier;
  return r;
}

BoundReport inapplicable(const std::string& id, const std::string& reason) {
  BoundReport r = base_report(id);
  r.applicable = false;
  r.reason = reason;
  return r;
}

void finish(BoundReport& r) {
  r.applicable = true;
  r.slack = r.rhs - r.lhs;
  if (r.equality)
    r.holds = r.lhs == r.rhs;
  else if (r.strict)
    r.holds = r.lhs < r.rhs;
  else
    r.holds = r.lhs <= r.rhs;
}

long long h0_of_tensor(InvariantCache& c, const ModulePres& a, const ModulePres& b) {
  ModulePres t = tensor_pres(c.minimal(a), c.minimal(b));
  return c.h0_via_saturation(t);
}

// A/T(A) presented as F0 / (im phi + torsion preimage)
ModulePres quotient_by_torsion(InvariantCache& c, const ModulePres& a) {
  const ModulePres& q = c.minimal(a);
  const BidualResult& bd = c.bidual(q);
  std::vector<ModuleVec> rels;
  for (int j = 0; j < q.phi.source.rank(); ++j) rels.push_back(mat_column(q.phi, j));
  for (const auto& g : bd.torsion_preimage.gens) rels.push_back(g);
  return make_pres(mat_from_columns(q.phi.ring, q.phi.target, rels));
}

// ---- evaluators ----

BoundReport eval_amoda0(InvariantCache& c, const ModulePres& a, const ModulePres& b) {
  BoundReport r = base_report("AmodA0");
  auto fa = finite_support_part(c.minimal(a));
  auto fb = finite_support_part(c.minimal(b));
  long long h0a = c.h0_via_saturation(a), h0b = c.h0_via_saturation(b);
  long long nua = c.minimal(a).phi.target.rank(), nub = c.minimal(b).phi.target.rank();
  r.lhs = h0_of_tensor(c, a, b);
  r.rhs = h0a * nub + h0b * nua + h0_of_tensor(c, fa.mbar, fb.mbar);
  finish(r);
  return r;
}

BoundReport eval_degandbetti(InvariantCache& c, const ModulePres& a) {
  BoundReport r = base_report("degandbetti");
  if (c.is_zero(a)) return inapplicable(r.bound_id, "zero module");
  const Ring& R = a.phi.ring;
  int d = R.nvars();
  const auto& betti = c.resolution(a).betti;
  long long hd = c.hdeg(a);
  // report the homological index with the least slack
  bool ok = true;
  long long worst_slack = 0, worst_lhs = 0, worst_rhs = 0;
  bool first = true;
  for (int i = 0; i <= betti.pd(); ++i) {
    long long lhs = betti.beta(i);
    long long rhs = hd * binom(d, i);
    if (first || rhs - lhs < worst_slack) {
      worst_slack = rhs - lhs;
      worst_lhs = lhs;
      worst_rhs = rhs;
      first = false;
    }
    if (lhs > rhs) ok = false;
  }
  r.lhs = worst_lhs;
  r.rhs = worst_rhs;
  finish(r);
  r.holds = ok;
  return r;
}

BoundReport eval_nagel(InvariantCache& c, const ModulePres& a) {
  BoundReport r = base_report("nagel");
  r.strict = true;
  if (c.is_zero(a)) return inapplicable(r.bound_id, "zero module");
  InvariantSet inv = c.invariants(a);
  r.lhs = *inv.reg;
  r.rhs = inv.hdeg + inv.alpha;
  finish(r);
  return r;
}

BoundReport eval_hdegsyz(InvariantCache& c, const ModulePres& a) {
  BoundReport r = base_report("hdegsyz");
  const Ring& R = a.phi.ring;
  int d = R.nvars();
  if (c.is_zero(a)) return inapplicable(r.bound_id, "zero module");
  if (d < 2) return inapplicable(r.bound_id, "needs ring dimension >= 2");
  InvariantSet inv = c.invariants(a);
  if (inv.dim != d) return inapplicable(r.bound_id, "module dimension below the ring dimension");
  ModulePres l = syzygy_module(c.minimal(a));
  long long deg_l = 0, hdeg_l = 0;
  if (!c.is_zero(l)) {
    deg_l = multiplicity(c.series(l));
    hdeg_l = c.hdeg(l);
  }
  // deg R = 1 over the polynomial ring
  r.lhs = deg_l;
  r.rhs = inv.nu - inv.deg;
  // c = hdeg(A) - deg(A) - hdeg(Ext^1(A,R))
  ModulePres e1 = ext_module_with_res(R, c.resolution(a), 1);
  long long cval = inv.hdeg - inv.deg - c.hdeg(e1);
  long long gap = hdeg_l - deg_l;
  bool chain = cval <= (d - 1) * gap && gap <= (d - 1) * cval;
  finish(r);
  r.holds = r.holds && chain;
  r.notes.emplace_back("c", cval);
  r.notes.emplace_back("hdeg_l_minus_deg_l", gap);
  r.notes.emplace_back("chain_holds", chain ? 1 : 0);
  return r;
}

BoundReport eval_tor1_syzygy(InvariantCache& c, const ModulePres& a, const ModulePres& b) {
  BoundReport r = base_report("tor1_syzygy");
  const Ring& R = a.phi.ring;
  const ModulePres& qa = c.minimal(a);
  const ModulePres& qb = c.minimal(b);
  const ResolutionResult& rr = c.resolution(qa);
  ModulePres tor1 = tor_module_with_res(R, rr, qb, 1);
  ModulePres omega = syzygy_module(qa);
  r.lhs = c.h0_via_saturation(tor1);
  r.rhs = c.is_zero(omega) ? 0 : h0_of_tensor(c, omega, qb);
  // shift isomorphism: Tor_2(A,B) and Tor_1(ΩA,B) have equal Hilbert series
  bool shift_ok = true;
  ModulePres tor2 = tor_module_with_res(R, rr, qb, 2);
  if (c.is_zero(omega)) {
    shift_ok = c.is_zero(tor2);
  } else {
    ModulePres tor1_omega = tor_module(omega, qb, 1);
    shift_ok = lp_eq(c.series(tor2).numerator, c.series(tor1_omega).numerator);
  }
  finish(r);
  r.holds = r.holds && shift_ok;
  r.notes.emplace_back("shift_iso_holds", shift_ok ? 1 : 0);
  return r;
}

BoundReport eval_vbbetahi(InvariantCache& c, const ModulePres& a, const ModulePres& b) {
  BoundReport r = base_report("vbbetahi");
  const Ring& R = a.phi.ring;
  int d = R.nvars();
  if (c.is_zero(a) || c.is_zero(b)) return inapplicable(r.bound_id, "zero module");
  if (!c.predicates(a).vector_bundle)
    return inapplicable(r.bound_id, "first module is not free on the punctured spectrum");
  InvariantSet ib = c.invariants(b);
  if (ib.pd >= d) return inapplicable(r.bound_id, "second module has maximal projective dimension");
  InvariantSet ia = c.invariants(a);
  long long rhs = 0;
  for (int i = 0; i < d; ++i) {
    if (!ia.h[static_cast<size_t>(i)])
      return inapplicable(r.bound_id, "h_i not finite");
    rhs += c.resolution(b).betti.beta(i) * *ia.h[static_cast<size_t>(i)];
  }
  r.lhs = h0_of_tensor(c, a, b);
  r.rhs = rhs;
  finish(r);
  return r;
}

BoundReport eval_h0vb(InvariantCache& c, const ModulePres& a, const ModulePres& b) {
  BoundReport r = base_report("h0vb");
  const Ring& R = a.phi.ring;
  if (c.is_zero(a) || c.is_zero(b)) return inapplicable(r.bound_id, "zero module");
  if (!c.predicates(a).vector_bundle)
    return inapplicable(r.bound_id, "first module is not free on the punctured spectrum");
  r.lhs = h0_of_tensor(c, a, b);
  r.rhs = static_cast<long long>(R.nvars()) * c.hdeg(a) * c.hdeg(b);
  finish(r);
  return r;
}

BoundReport eval_bv_hdeg(InvariantCache& c, const ModulePres& a) {
  BoundReport r = base_report("bv_hdeg");
  r.equality = true;
  const Ring& R = a.phi.ring;
  int d = R.nvars();
  if (c.is_zero(a)) return inapplicable(r.bound_id, "zero module");
  const ResolutionResult& rr = c.resolution(a);
  if (rr.res.length() != 1) return inapplicable(r.bound_id, "projective dimension is not 1");
  long long n = rr.betti.beta(1);
  if (rr.betti.beta(0) != n + d - 1)
    return inapplicable(r.bound_id, "presentation is not n -> n+d-1");
  const GradedMatrix& phi = rr.res.maps[0];
  Submodule in_phi = minors_ideal(phi, static_cast<int>(n));
  if (in_phi.gens.empty()) return inapplicable(r.bound_id, "maximal minors vanish");
  ModulePres quot = coker_of_ideal(R, [&] {
    std::vector<Poly> gens;
    for (const auto& g : in_phi.gens) gens.push_back(mv_to_polys(R, 1, g)[0]);
    return gens;
  }());
  HilbertSeries hs = c.series(quot);
  if (hs.dim != 0) return inapplicable(r.bound_id, "maximal-minor ideal is not primary to the irrelevant ideal");
  InvariantSet inv = c.invariants(a);
  if (inv.deg != d - 1) return inapplicable(r.bound_id, "multiplicity differs from rank times deg R");
  r.lhs = inv.hdeg;
  r.rhs = (d - 1) + multiplicity(hs);  // (d-1)*deg R + lambda(R/I_n), deg R = 1
  finish(r);
  r.notes.emplace_back("lambda_minors", multiplicity(hs));
  return r;
}

BoundReport eval_tor1_cb(InvariantCache& c, const ModulePres& cc, const ModulePres& b) {
  BoundReport r = base_report("tor1_CB");
  const Ring& R = cc.phi.ring;
  int d = R.nvars();
  if (c.is_zero(cc) || c.is_zero(b)) return inapplicable(r.bound_id, "zero module");
  HilbertSeries hs = c.series(cc);
  if (hs.dim != 0) return inapplicable(r.bound_id, "first module does not have finite length");
  ModulePres tor1 = tor_module(c.minimal(cc), c.minimal(b), 1);
  r.lhs = c.length(tor1);
  // beta_1(k) = d for the Koszul resolution of the residue field; cross-check
  ModulePres rk = coker_of_ideal(R, [&] {
    std::vector<Poly> gens;
    for (int i = 0; i < d; ++i) gens.push_back(poly_var(R, i));
    return gens;
  }());
  long long beta1_k = c.resolution(rk).betti.beta(1);
  if (beta1_k != d) fail(Errc::internal, "Koszul beta_1 disagrees with the binomial");
  r.rhs = beta1_k * c.hdeg(cc) * c.minimal(b).phi.target.rank();
  finish(r);
  return r;
}

// The annihilator {f : f*F0 ⊆ im phi} as an ideal.
Submodule annihilator(const ModulePres& q) {
  const Ring& R = q.phi.ring;
  Submodule acc{R, FreeMod{{0}}, {}};
  for (int i = 0; i < q.phi.target.rank(); ++i) {
    GradedMatrix ei = mat_from_columns(R, q.phi.target, {mv_basis(R, i)});
    GradedMatrix cat = mat_hconcat(ei, q.phi);
    Submodule k = kernel_of_map(cat);
    std::vector<ModuleVec> fs;
    for (const auto& v : k.gens) {
      std::vector<MTerm> first;
      for (const auto& t : v.t)
        if (t.comp < 1) first.push_back(t);
      ModuleVec w = mv_normalize(R, std::move(first));
      if (!w.is_zero()) fs.push_back(std::move(w));
    }
    Submodule ji{R, FreeMod{{0}}, std::move(fs)};
    acc = i == 0 ? ji : intersect(acc, ji);
  }
  return acc;
}

// 1 = primary, 0 = not primary, -1 = undecided. Decides the cases where the
// saturated annihilator is principal and its factor structure is visible over
// k[x,y]: pure variable powers, mixed monomials, and powers of a linear form.
long long annihilator_primary_hint(InvariantCache& c, const ModulePres& a) {
  const ModulePres& q = c.minimal(a);
  const Ring& R = q.phi.ring;
  if (R.nvars() != 2) return -1;
  Submodule ann = annihilator(q);
  std::vector<Poly> m_gens;
  for (int i = 0; i < R.nvars(); ++i) m_gens.push_back(poly_var(R, i));
  if (!submodule_eq(ann, saturate(ann, m_gens))) return 0;  // embedded irrelevant component
  GroebnerBasis gb = buchberger(ann);
  if (gb.g.size() != 1) return -1;
  Poly g = mv_to_polys(R, 1, gb.g[0])[0];
  auto h = poly_homogeneity(g);
  if (!h.homogeneous || h.degree < 1) return -1;
  int k = h.degree;
  // g = sum c_i x^(k-i) y^i; read off the edge coefficients
  std::vector<std::int64_t> coeff(static_cast<size_t>(k) + 1, 0);
  for (const auto& t : g.t) coeff[static_cast<size_t>(t.m[1])] = t.c;
  bool has_x_edge = coeff[0] != 0;
  bool has_y_edge = coeff[static_cast<size_t>(k)] != 0;
  if (!has_x_edge && !has_y_edge) {
    // divisible by both variables: radical contains (x) and (y)
    return 0;
  }
  if (!has_x_edge || !has_y_edge) {
    // a pure variable power is primary; a variable times more is not
    bool pure = g.t.size() == 1;
    return pure ? 1 : 0;
  }
  // both edges present: test g = c*(x + t*y)^k with t from the first slope
  std::int64_t t0 = fp_mul(coeff[1], fp_inv(fp_mul(k % R.p, coeff[0], R.p), R.p), R.p);
  Poly l = poly_add(R, poly_var(R, 0), poly_scale(R, poly_var(R, 1), t0));
  Poly pw = poly_const(R, 1);
  for (int j = 0; j < k; ++j) pw = poly_mul(R, pw, l);
  std::int64_t scale = fp_mul(coeff[0], fp_inv(pw.t.front().c, R.p), R.p);
  if (poly_eq(poly_scale(R, pw, scale), g)) return 1;
  return -1;  // several distinct factors or an irreducible factor of higher degree
}

BoundReport eval_dim2cm(InvariantCache& c, const ModulePres& a) {
  BoundReport r = base_report("dim2cm");
  const Ring& R = a.phi.ring;
  if (R.nvars() != 2) return inapplicable(r.bound_id, "needs a two-variable ring");
  if (c.is_zero(a)) return inapplicable(r.bound_id, "zero module");
  InvariantSet inv = c.invariants(a);
  if (inv.dim != 1) return inapplicable(r.bound_id, "module dimension is not 1");
  if (inv.depth != inv.dim) return inapplicable(r.bound_id, "module is not Cohen-Macaulay");
  long long hd = inv.hdeg;
  r.lhs = h0_of_tensor(c, a, a);
  r.rhs = 3 * hd * hd * hd * hd;
  finish(r);
  long long rhs_primary = 2 * hd * hd * hd * hd;
  r.notes.emplace_back("rhs_primary_branch", rhs_primary);
  r.notes.emplace_back("primary_branch_holds", r.lhs <= rhs_primary ? 1 : 0);
  r.notes.emplace_back("ann_primary", annihilator_primary_hint(c, a));
  return r;
}

BoundReport eval_h0dim3(InvariantCache& c, const ModulePres& a, const ModulePres& b) {
  BoundReport r = base_report("h0dim3");
  r.strict = true;
  const Ring& R = a.phi.ring;
  if (R.nvars() != 3) return inapplicable(r.bound_id, "needs a three-variable ring");
  if (c.is_zero(a) || c.is_zero(b)) return inapplicable(r.bound_id, "zero module");
  if (!c.predicates(a).torsionfree || !c.predicates(b).torsionfree)
    return inapplicable(r.bound_id, "inputs must be torsionfree");
  r.lhs = h0_of_tensor(c, a, b);
  r.rhs = 4 * c.hdeg(a) * c.hdeg(b);
  finish(r);
  return r;
}

BoundReport eval_addiofreg(InvariantCache& c, const ModulePres& a) {
  BoundReport r = base_report("addiofreg");
  const Ring& R = a.phi.ring;
  if (R.nvars() != 2) return inapplicable(r.bound_id, "needs a two-variable ring");
  if (c.is_zero(a)) return inapplicable(r.bound_id, "zero module");
  const BidualResult& bd = c.bidual(a);
  if (c.is_zero(bd.torsion)) return inapplicable(r.bound_id, "torsion submodule vanishes");
  ModulePres quot = quotient_by_torsion(c, a);
  if (c.is_zero(quot)) return inapplicable(r.bound_id, "module is all torsion");
  auto reg_a = c.invariants(a).reg;
  auto reg_t = c.invariants(bd.torsion).reg;
  auto reg_q = c.invariants(quot).reg;
  r.lhs = *reg_a;
  r.rhs = *reg_t + *reg_q;
  finish(r);
  bool sub_bound = *reg_t <= *reg_a;
  r.holds = r.holds && sub_bound;
  r.notes.emplace_back("reg_torsion", *reg_t);
  r.notes.emplace_back("reg_quotient", *reg_q);
  r.notes.emplace_back("reg_torsion_le_reg", sub_bound ? 1 : 0);
  return r;
}

BoundReport eval_grdim2(InvariantCache& c, const ModulePres& a) {
  BoundReport r = base_report("grdim2");
  const Ring& R = a.phi.ring;
  if (R.nvars() != 2) return inapplicable(r.bound_id, "needs a two-variable ring");
  if (c.is_zero(a)) return inapplicable(r.bound_id, "zero module");
  InvariantSet inv = c.invariants(a);
  if (inv.dim != 1) return inapplicable(r.bound_id, "module dimension is not 1");
  if (!c.predicates(a).equigenerated_deg0)
    return inapplicable(r.bound_id, "module is not equigenerated in degree 0");
  const ResolutionResult& rr = c.resolution(a);
  if (rr.res.length() != 1 || rr.betti.beta(0) != rr.betti.beta(1))
    return inapplicable(r.bound_id, "presentation is not a square injection");
  long long rk = rr.betti.beta(0);
  r.lhs = h0_of_tensor(c, a, a);
  r.rhs = rk * rk * rk * rk * inv.deg * (inv.deg - 1);
  finish(r);
  return r;
}

// hdeg(A) = hdeg(A**) + (d-1) * hdeg(C) for a bundle A with reflexive-hull
// cokernel C. The finite-length module C enters through Ext^{d-1}(A,R), whose
// binomial weight in the hdeg recursion is d-1; the weight is 1 exactly when
// d = 2.
BoundReport eval_refl_additivity(InvariantCache& c, const ModulePres& a) {
  BoundReport r = base_report("refl_additivity");
  r.equality = true;
  const Ring& R = a.phi.ring;
  int d = R.nvars();
  if (d != 2 && d != 3) return inapplicable(r.bound_id, "needs ring dimension 2 or 3");
  if (c.is_zero(a)) return inapplicable(r.bound_id, "zero module");
  Predicates pr = c.predicates(a);
  if (!pr.torsionfree) return inapplicable(r.bound_id, "module has torsion");
  if (!pr.vector_bundle)
    return inapplicable(r.bound_id, "module is not free on the punctured spectrum");
  const BidualResult& bd = c.bidual(a);
  r.lhs = c.hdeg(a);
  r.rhs = c.hdeg(bd.double_star) + (d - 1) * c.hdeg(bd.coker);
  finish(r);
  r.notes.emplace_back("hdeg_double_dual", c.hdeg(bd.double_star));
  r.notes.emplace_back("hdeg_coker", c.hdeg(bd.coker));
  r.notes.emplace_back("coker_weight", d - 1);
  return r;
}

}  // namespace

BoundReport evaluate_degabc(const Ring& R, const std::vector<Poly>& forms) {
  BoundReport r = base_report("degabc");
  r.equality = false;
  if (forms.size() < 2) return inapplicable(r.bound_id, "needs at least two forms");
  InvariantCache c;
  long long n = static_cast<long long>(forms.size());
  std::vector<long long> degs;
  for (const auto& f : forms) {
    auto h = poly_homogeneity(f);
    if (f.is_zero() || !h.homogeneous || h.degree < 1)
      return inapplicable(r.bound_id, "forms must be homogeneous of positive degree");
    degs.push_back(h.degree);
  }
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j) {
      ModulePres pairq = coker_of_ideal(R, {forms[i], forms[j]});
      if (c.series(pairq).dim != 0)
        return inapplicable(r.bound_id, "forms are not pairwise coprime");
    }
  // z_i = (prod forms)/forms[i]
  std::vector<Poly> zs;
  for (size_t i = 0; i < forms.size(); ++i) {
    Poly z = poly_const(R, 1);
    for (size_t j = 0; j < forms.size(); ++j)
      if (j != i) z = poly_mul(R, z, forms[j]);
    zs.push_back(std::move(z));
  }
  ModulePres quo = coker_of_ideal(R, zs);
  long long lhs = multiplicity(c.series(quo));
  long long identity = 0;
  long long total = 0;
  for (size_t i = 0; i < degs.size(); ++i) {
    total += degs[i];
    for (size_t j = i + 1; j < degs.size(); ++j) identity += degs[i] * degs[j];
  }
  long long rhs2 = (total * total - n) / 2;  // total^2 - n is even iff ... kept exact below
  bool half_exact = (total * total - n) % 2 == 0;
  r.lhs = lhs;
  r.rhs = rhs2;
  finish(r);
  bool identity_ok = lhs == identity;
  // the inequality against (deg^2 - n)/2 is checked without rounding
  bool ineq_ok = 2 * lhs <= total * total - n;
  r.holds = identity_ok && ineq_ok;
  r.notes.emplace_back("pairwise_identity", identity);
  r.notes.emplace_back("identity_holds", identity_ok ? 1 : 0);
  r.notes.emplace_back("half_bound_exact", half_exact ? 1 : 0);
  return r;
}

const std::vector<std::string>& known_bounds() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [name, info] : bound_table()) v.push_back(name);
    return v;
  }();
  return ids;
}

bool bound_takes_pair(const std::string& id) { return info_for(id).pair; }
Tier bound_tier(const std::string& id) { return info_for(id).tier; }

BoundReport evaluate_bound_item(const std::string& id, const CorpusItem& item,
                                InvariantCache& cache) {
  if (id == "degabc") {
    if (item.forms.empty())
      return inapplicable(id, "needs a generated form family");
    return evaluate_degabc(item.a.phi.ring, item.forms);
  }
  const BoundInfo& info = info_for(id);
  if (info.pair) {
    if (!item.b) return inapplicable(id, "needs a pair of modules");
    require_same_ring(item.a.phi.ring, item.b->phi.ring);
    if (id == "AmodA0") return eval_amoda0(cache, item.a, *item.b);
    if (id == "tor1_syzygy") return eval_tor1_syzygy(cache, item.a, *item.b);
    if (id == "vbbetahi") return eval_vbbetahi(cache, item.a, *item.b);
    if (id == "h0vb") return eval_h0vb(cache, item.a, *item.b);
    if (id == "tor1_CB") return eval_tor1_cb(cache, item.a, *item.b);
    if (id == "h0dim3") return eval_h0dim3(cache, item.a, *item.b);
  } else {
    if (id == "degandbetti") return eval_degandbetti(cache, item.a);
    if (id == "nagel") return eval_nagel(cache, item.a);
    if (id == "hdegsyz") return eval_hdegsyz(cache, item.a);
    if (id == "bv_hdeg") return eval_bv_hdeg(cache, item.a);
    if (id == "dim2cm") return eval_dim2cm(cache, item.a);
    if (id == "addiofreg") return eval_addiofreg(cache, item.a);
    if (id == "grdim2") return eval_grdim2(cache, item.a);
    if (id == "refl_additivity") return eval_refl_additivity(cache, item.a);
  }
  fail(Errc::internal, "unhandled bound id: " + id);
}

BoundReport evaluate_bound(const std::string& id, const ModulePres& a, const ModulePres* b) {
  CorpusItem item;
  item.id = "adhoc";
  item.a = a;
  if (b) item.b = *b;
  InvariantCache cache;
  return evaluate_bound_item(id, item, cache);
}

ProbeReport tensor_power_probe(const ModulePres& m, int e_max, long long budget) {
  if (e_max < 1) fail(Errc::bad_argument, "probe needs e_max >= 1");
  ProbeReport rep;
  rep.e_max = e_max;
  rep.budget = budget;
  InvariantCache cache;
  const ModulePres& q = cache.minimal(m);
  if (q.phi.target.rank() == 0) return rep;
  const Ring& R = q.phi.ring;
  long long nu = q.phi.target.rank();
  ModulePres power = q;
  long long size = 1;
  for (int e = 1; e <= e_max; ++e) {
    size *= nu;
    if (size > budget) {
      rep.budget_exceeded = true;
      return rep;
    }
    if (e > 1) power = minimalize(tensor_pres(power, q));
    bool has_torsion;
    HilbertSeries hs = cache.series(power);
    if (hs.reduced.is_zero()) {
      has_torsion = false;
    } else if (hs.dim < R.nvars()) {
      has_torsion = true;  // every element is killed by a nonzero ring element
    } else {
      has_torsion = !cache.is_zero(cache.bidual(power).torsion);
    }
    if (has_torsion) {
      rep.e_found = e;
      return rep;
    }
  }
  return rep;
}

namespace {

struct ItemResult {
  std::vector<std::pair<std::string, BoundReport>> reports;  // sub-item id -> report
};

ItemResult run_item(const CorpusItem& item, const std::vector<std::string>& ids) {
  ItemResult out;
  InvariantCache cache;
  for (const auto& id : ids) {
    if (id == "degabc") {
      if (!item.forms.empty())
        out.reports.emplace_back(item.id, evaluate_bound_item(id, item, cache));
      continue;
    }
    if (!item.forms.empty()) continue;  // form items only feed the product identity
    if (bound_takes_pair(id)) {
      if (item.b) out.reports.emplace_back(item.id, evaluate_bound_item(id, item, cache));
    } else {
      CorpusItem ia{item.id + (item.b ? ".a" : ""), item.a, std::nullopt, {}};
      out.reports.emplace_back(ia.id, evaluate_bound_item(id, ia, cache));
      if (item.b) {
        CorpusItem ib{item.id + ".b", *item.b, std::nullopt, {}};
        out.reports.emplace_back(ib.id, evaluate_bound_item(id, ib, cache));
      }
    }
  }
  return out;
}

}  // namespace

SuiteReport verify_suite(const std::vector<CorpusItem>& corpus, const SuiteOptions& opt) {
  std::vector<std::string> ids = opt.bounds.empty() ? known_bounds() : opt.bounds;
  for (const auto& id : ids) info_for(id);  // validate
  if (opt.tier) {
    std::vector<std::string> filtered;
    for (const auto& id : ids)
      if (bound_tier(id) == *opt.tier) filtered.push_back(id);
    ids = std::move(filtered);
  }

  unsigned jobs = opt.jobs > 0 ? static_cast<unsigned>(opt.jobs)
                               : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, corpus.empty() ? 1 : static_cast<unsigned>(corpus.size()));

  std::vector<ItemResult> results(corpus.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < corpus.size(); ++i) results[i] = run_item(corpus[i], ids);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> workers;
    std::exception_ptr first_error;
    std::mutex err_mu;
    for (unsigned w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= corpus.size()) return;
          try {
            results[i] = run_item(corpus[i], ids);
          } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      }));
    for (auto& f : workers) f.get();
    if (first_error) std::rethrow_exception(first_error);
  }

  SuiteReport rep;
  rep.items = static_cast<long long>(corpus.size());
  for (const auto& id : ids) rep.per_bound[id];  // stable key set
  for (const auto& res : results)
    for (const auto& [sub_id, r] : res.reports) {
      BoundAgg& agg = rep.per_bound[r.bound_id];
      if (!r.applicable) continue;
      ++agg.applicable;
      if (r.holds)
        ++agg.holds;
      else
        ++agg.violated;
      if (r.lhs > 0 && r.rhs > 0) {
        // keep the largest lhs/rhs as an exact fraction
        if (r.lhs * agg.max_ratio_den > agg.max_ratio_num * r.rhs) {
          agg.max_ratio_num = r.lhs;
          agg.max_ratio_den = r.rhs;
          agg.max_ratio_item = sub_id;
        }
      }
      if (!r.holds) {
        rep.violations.push_back(Violation{r.bound_id, sub_id, r});
        if (r.tier == Tier::proven)
          rep.proven_violations.push_back(Violation{r.bound_id, sub_id, r});
      }
    }
  return rep;
}

namespace {

ordered_json report_to_json(const BoundReport& r) {
  ordered_json j;
  j["bound_id"] = r.bound_id;
  j["tier"] = tier_name(r.tier);
  j["applicable"] = r.applicable;
  if (!r.applicable) {
    j["reason"] = r.reason;
    return j;
  }
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["relation"] = r.equality ? "==" : (r.strict ? "<" : "<=");
  j["holds"] = r.holds;
  j["slack"] = r.slack;
  if (!r.notes.empty()) {
    ordered_json n;
    for (const auto& [k, v] : r.notes) n[k] = v;
    j["notes"] = n;
  }
  return j;
}

ordered_json meta_to_json(const RunMeta& meta) {
  ordered_json j;
  j["p"] = meta.p;
  j["variables"] = meta.variables;
  j["order"] = kOrderTag;
  if (meta.seed)
    j["seed"] = *meta.seed;
  else
    j["seed"] = nullptr;
  j["rng"] = meta.rng;
  return j;
}

}  // namespace

std::string bound_report_json(const BoundReport& r) { return report_to_json(r).dump(2); }

std::string probe_report_json(const ProbeReport& r, const RunMeta& meta) {
  ordered_json j;
  j["meta"] = meta_to_json(meta);
  j["module"] = r.module_id;
  j["e_max"] = r.e_max;
  if (r.e_found)
    j["e_found"] = *r.e_found;
  else
    j["e_found"] = nullptr;
  j["budget"] = r.budget;
  j["budget_exceeded"] = r.budget_exceeded;
  return j.dump(2);
}

std::string suite_report_json(const SuiteReport& r, const RunMeta& meta) {
  ordered_json j;
  j["meta"] = meta_to_json(meta);
  j["items"] = r.items;
  ordered_json bounds;
  for (const auto& [id, agg] : r.per_bound) {
    ordered_json b;
    b["tier"] = tier_name(bound_tier(id));
    b["applicable"] = agg.applicable;
    b["holds"] = agg.holds;
    b["violated"] = agg.violated;
    if (agg.max_ratio_num > 0) {
      ordered_json ratio;
      ratio["num"] = agg.max_ratio_num;
      ratio["den"] = agg.max_ratio_den;
      ratio["item"] = agg.max_ratio_item;
      b["max_ratio"] = ratio;
    } else {
      b["max_ratio"] = nullptr;
    }
    bounds[id] = b;
  }
  j["bounds"] = bounds;
  ordered_json viols = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json jv;
    jv["bound_id"] = v.bound_id;
    jv["item"] = v.item_id;
    jv["report"] = report_to_json(v.report);
    viols.push_back(jv);
  }
  j["violations"] = viols;
  return j.dump(2);
}

}  // namespace ghom
