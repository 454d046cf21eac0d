#include <algorithm>

#include "ghom/invariants.hpp"

namespace ghom {

namespace {

IntLaurent numerator_of(const ModulePres& q) {
  const Ring& R = q.phi.ring;
  GroebnerBasis gb = buchberger(image_of(q.phi));
  return hilbert_numerator(R, q.phi.target, lead_terms(gb));
}

}  // namespace

const ModulePres& InvariantCache::minimal(const ModulePres& p) {
  std::string key = pres_key(p);
  auto it = minimal_.find(key);
  if (it != minimal_.end()) return it->second;
  ModulePres q = p.minimal ? p : minimalize(p);
  return minimal_.emplace(std::move(key), std::move(q)).first->second;
}

const ResolutionResult& InvariantCache::resolution(const ModulePres& p) {
  const ModulePres& q = minimal(p);
  std::string key = pres_key(q);
  auto it = res_.find(key);
  if (it != res_.end()) return *it->second;
  auto rr = std::make_shared<ResolutionResult>(free_resolution(q));
  return *res_.emplace(std::move(key), std::move(rr)).first->second;
}

HilbertSeries InvariantCache::series(const ModulePres& p) {
  const ModulePres& q = minimal(p);
  std::string key = pres_key(q);
  auto it = numerator_.find(key);
  if (it == numerator_.end()) it = numerator_.emplace(std::move(key), numerator_of(q)).first;
  return make_series(q.phi.ring, it->second);
}

bool InvariantCache::is_zero(const ModulePres& p) { return minimal(p).phi.target.rank() == 0; }

long long InvariantCache::length(const ModulePres& p) {
  if (is_zero(p)) return 0;
  HilbertSeries hs = series(p);
  if (hs.dim != 0) fail(Errc::infinite_length, "module has positive dimension");
  return multiplicity(hs);
}

long long InvariantCache::hdeg(const ModulePres& p) {
  const ModulePres& q = minimal(p);
  if (q.phi.target.rank() == 0) return 0;
  std::string key = pres_key(q);
  auto it = hdeg_.find(key);
  if (it != hdeg_.end()) return it->second;

  const Ring& R = q.phi.ring;
  HilbertSeries hs = series(q);
  long long acc = multiplicity(hs);
  int r = R.nvars();
  int dm = hs.dim;
  // window r-dm+1 .. r; each Ext in it has strictly smaller dimension
  for (int i = r - dm + 1; i <= r; ++i) {
    long long w = binom(dm - 1, i - r + dm - 1);
    if (w == 0) continue;
    ModulePres e = ext_module_with_res(R, resolution(q), i);
    acc += w * hdeg(e);
  }
  hdeg_.emplace(std::move(key), acc);
  return acc;
}

long long InvariantCache::h0_via_saturation(const ModulePres& p) {
  const ModulePres& q = minimal(p);
  const Ring& R = q.phi.ring;
  if (q.phi.target.rank() == 0) return 0;
  std::vector<Poly> m_gens;
  for (int i = 0; i < R.nvars(); ++i) m_gens.push_back(poly_var(R, i));
  Submodule im = image_of(q.phi);
  GroebnerBasis gb_im = buchberger(im);
  Submodule sat = saturate(Submodule{R, im.ambient, gb_im.g}, m_gens);
  GroebnerBasis gb_sat = buchberger(sat);
  IntLaurent diff = lp_sub(hilbert_numerator(R, q.phi.target, lead_terms(gb_im)),
                           hilbert_numerator(R, q.phi.target, lead_terms(gb_sat)));
  HilbertSeries hs = make_series(R, diff);
  if (!hs.reduced.is_zero() && hs.dim != 0)
    fail(Errc::internal, "finite-support part has positive dimension");
  return multiplicity(hs);
}

long long InvariantCache::ext_length(const ModulePres& p, int i) {
  const ModulePres& q = minimal(p);
  const Ring& R = q.phi.ring;
  if (q.phi.target.rank() == 0) return 0;
  ModulePres e = ext_module_with_res(R, resolution(q), i);
  return length(e);
}

const BidualResult& InvariantCache::bidual(const ModulePres& p) {
  const ModulePres& q = minimal(p);
  std::string key = pres_key(q);
  auto it = bidual_.find(key);
  if (it != bidual_.end()) return *it->second;
  auto b = std::make_shared<BidualResult>(dual_and_bidual(q));
  return *bidual_.emplace(std::move(key), std::move(b)).first->second;
}

InvariantSet InvariantCache::invariants(const ModulePres& p) {
  const ModulePres& q = minimal(p);
  const Ring& R = q.phi.ring;
  int d = R.nvars();
  InvariantSet inv;
  inv.h.assign(static_cast<size_t>(d), 0);
  if (q.phi.target.rank() == 0) return inv;

  const ResolutionResult& rr = resolution(q);
  HilbertSeries hs = series(q);
  inv.nu = q.phi.target.rank();
  inv.alpha = *std::max_element(q.phi.target.twists.begin(), q.phi.target.twists.end());
  inv.dim = hs.dim;
  inv.deg = multiplicity(hs);
  inv.pd = rr.res.length();
  inv.depth = d - inv.pd;
  inv.reg = rr.betti.reg();
  for (int i = 0; i < d; ++i) {
    ModulePres e = ext_module_with_res(R, rr, d - i);
    if (is_zero(e)) {
      inv.h[static_cast<size_t>(i)] = 0;
      continue;
    }
    HilbertSeries es = series(e);
    if (es.dim != 0)
      inv.h[static_cast<size_t>(i)] = std::nullopt;
    else
      inv.h[static_cast<size_t>(i)] = multiplicity(es);
  }
  // the two computations of h_0 must agree
  long long sat_h0 = h0_via_saturation(q);
  if (!inv.h[0] || *inv.h[0] != sat_h0)
    fail(Errc::internal, "saturation and duality disagree on h_0");
  inv.hdeg = hdeg(q);
  return inv;
}

Predicates InvariantCache::predicates(const ModulePres& p) {
  const ModulePres& q = minimal(p);
  const Ring& R = q.phi.ring;
  Predicates out;
  if (q.phi.target.rank() == 0) return {true, true, true, true};

  out.torsionfree = is_zero(bidual(q).torsion);
  out.vector_bundle = true;
  for (int i = 1; i <= R.nvars() && out.vector_bundle; ++i) {
    ModulePres e = ext_module_with_res(R, resolution(q), i);
    if (is_zero(e)) continue;
    if (series(e).dim != 0) out.vector_bundle = false;
  }
  HilbertSeries hs = series(q);
  out.cm = (R.nvars() - resolution(q).res.length()) == hs.dim;
  out.equigenerated_deg0 = true;
  for (int t : q.phi.target.twists)
    if (t != 0) out.equigenerated_deg0 = false;
  return out;
}

HilbertSeries hilbert_series(const ModulePres& p) {
  InvariantCache c;
  return c.series(p);
}

InvariantSet compute_invariants(const ModulePres& p) {
  InvariantCache c;
  return c.invariants(p);
}

long long hdeg(const ModulePres& p) {
  InvariantCache c;
  return c.hdeg(p);
}

Predicates predicates(const ModulePres& p) {
  InvariantCache c;
  return c.predicates(p);
}

long long module_length(const ModulePres& p) {
  InvariantCache c;
  return c.length(p);
}

long long local_cohomology_length(const ModulePres& p, int i) {
  const Ring& R = p.phi.ring;
  int d = R.nvars();
  if (i < 0 || i >= d) fail(Errc::bad_argument, "local cohomology index out of range");
  InvariantCache c;
  ModulePres e = ext_module_with_res(R, c.resolution(p), d - i);
  long long len = c.length(e);  // throws when infinite
  if (i == 0) {
    long long sat = c.h0_via_saturation(p);
    if (sat != len) fail(Errc::internal, "saturation and duality disagree on h_0");
  }
  return len;
}

std::vector<std::optional<long long>> local_cohomology_lengths(const ModulePres& p) {
  InvariantCache c;
  return c.invariants(p).h;
}

Submodule minors_ideal(const GradedMatrix& m, int k) {
  const Ring& R = m.ring;
  int rows = m.target.rank(), cols = m.source.rank();
  if (k < 0 || k > std::min(rows, cols))
    fail(Errc::bad_argument, "minor size exceeds the matrix dimensions");
  std::vector<Poly> gens;
  if (k == 0) {
    gens.push_back(poly_const(R, 1));
    return submodule_from_ideal(R, gens);
  }
  std::vector<int> ri(static_cast<size_t>(k)), ci(static_cast<size_t>(k));
  auto first = [&](std::vector<int>& v) {
    for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = i;
  };
  auto next = [&](std::vector<int>& v, int n) {
    int i = k - 1;
    while (i >= 0 && v[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++v[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) v[static_cast<size_t>(j)] = v[static_cast<size_t>(j - 1)] + 1;
    return true;
  };
  first(ri);
  do {
    first(ci);
    do {
      // determinant of the selected submatrix
      std::vector<std::vector<Poly>> sub(static_cast<size_t>(k), std::vector<Poly>(static_cast<size_t>(k)));
      FreeMod st, ss;
      for (int i = 0; i < k; ++i) st.twists.push_back(m.target.twists[static_cast<size_t>(ri[static_cast<size_t>(i)])]);
      for (int j = 0; j < k; ++j) ss.twists.push_back(m.source.twists[static_cast<size_t>(ci[static_cast<size_t>(j)])]);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          sub[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              m.e[static_cast<size_t>(ri[static_cast<size_t>(i)])][static_cast<size_t>(ci[static_cast<size_t>(j)])];
      Poly det = mat_det(GradedMatrix{R, st, ss, std::move(sub)});
      if (!det.is_zero()) gens.push_back(std::move(det));
    } while (next(ci, cols));
  } while (next(ri, rows));
  return submodule_from_ideal(R, gens);
}

}  // namespace ghom
