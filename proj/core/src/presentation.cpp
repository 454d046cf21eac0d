#include <sstream>

#include "ghom/presentation.hpp"

namespace ghom {

ModulePres make_pres(GradedMatrix phi) {
  require_homogeneous(phi);
  return ModulePres{std::move(phi), false};
}

ModulePres pres_free(const Ring& R, FreeMod f) {
  GradedMatrix phi = mat_zero(R, std::move(f), FreeMod{});
  return ModulePres{std::move(phi), true};
}

ModulePres pres_zero(const Ring& R) { return pres_free(R, FreeMod{}); }

ModulePres coker_of_ideal(const Ring& R, const std::vector<Poly>& ideal_gens) {
  FreeMod target{{0}};
  std::vector<ModuleVec> cols;
  for (const auto& f : ideal_gens) {
    if (f.is_zero()) continue;
    auto h = poly_homogeneity(f);
    if (!h.homogeneous) fail(Errc::homogeneity, "ideal generator is not homogeneous");
    cols.push_back(mv_from_polys(R, {f}));
  }
  return make_pres(mat_from_columns(R, target, cols));
}

namespace {

bool constant_entry(const Poly& f) {
  return f.t.size() == 1 && mono_is_one(f.t.front().m);
}

}  // namespace

ModulePres minimalize(const ModulePres& p) {
  const Ring& R = p.phi.ring;
  std::vector<int> rows = p.phi.target.twists;
  std::vector<int> cols = p.phi.source.twists;
  std::vector<std::vector<Poly>> e = p.phi.e;

  while (true) {
    int pi = -1, pj = -1;
    for (size_t i = 0; i < rows.size() && pi < 0; ++i)
      for (size_t j = 0; j < cols.size(); ++j)
        if (constant_entry(e[i][j])) {
          pi = static_cast<int>(i);
          pj = static_cast<int>(j);
          break;
        }
    if (pi < 0) break;
    // Scale the pivot column to make the pivot 1, clear row pi with column
    // operations; after that the pivot row is a unit row and dropping row pi
    // and column pj leaves the remaining entries untouched.
    std::int64_t inv = fp_inv(e[pi][pj].t.front().c, R.p);
    for (size_t i = 0; i < rows.size(); ++i) e[i][pj] = poly_scale(R, e[i][pj], inv);
    for (size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(j) == pj || e[pi][j].is_zero()) continue;
      Poly q = e[pi][j];
      for (size_t i = 0; i < rows.size(); ++i)
        e[i][j] = poly_sub(R, e[i][j], poly_mul(R, q, e[i][pj]));
    }
    for (size_t i = 0; i < rows.size(); ++i) e[i].erase(e[i].begin() + pj);
    cols.erase(cols.begin() + pj);
    e.erase(e.begin() + pi);
    rows.erase(rows.begin() + pi);
  }

  // drop zero columns
  std::vector<size_t> keep;
  for (size_t j = 0; j < cols.size(); ++j) {
    bool zero = true;
    for (size_t i = 0; i < rows.size() && zero; ++i) zero = e[i][j].is_zero();
    if (!zero) keep.push_back(j);
  }
  std::vector<int> cols2;
  std::vector<std::vector<Poly>> e2(rows.size());
  for (size_t j : keep) cols2.push_back(cols[j]);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j : keep) e2[i].push_back(std::move(e[i][j]));

  ModulePres out{mat_make(R, FreeMod{rows}, FreeMod{cols2}, std::move(e2)), true};
  return out;
}

bool pres_is_zero(const ModulePres& p) {
  if (p.phi.target.rank() == 0) return true;
  if (p.minimal) return false;
  return minimalize(p).phi.target.rank() == 0;
}

ModulePres subquotient_pres(const Submodule& z, const Submodule& b) {
  require_same_ring(z.ring, b.ring);
  if (!(z.ambient == b.ambient) && !b.gens.empty())
    fail(Errc::ambient_mismatch, "subquotient ambient mismatch");
  const Ring& R = z.ring;

  std::vector<ModuleVec> zgens;
  for (const auto& g : z.gens)
    if (!g.is_zero()) zgens.push_back(g);
  if (zgens.empty()) {
    for (const auto& bg : b.gens)
      if (!bg.is_zero())
        fail(Errc::containment, "subquotient: second module is not contained in the first");
    return pres_zero(R);
  }

  TrackedSubmodule tr(Submodule{R, z.ambient, zgens});
  FreeMod target = tr.syzygy_ambient();

  std::vector<ModuleVec> relations = tr.syzygy_gens();
  for (const auto& bg : b.gens) {
    if (bg.is_zero()) continue;
    auto [r, w] = tr.reduce(bg);
    if (!r.is_zero())
      fail(Errc::containment, "subquotient: second module is not contained in the first");
    relations.push_back(mv_from_polys(R, w));
  }
  return make_pres(mat_from_columns(R, target, relations));
}

ModulePres pres_from_submodule(const Submodule& s) {
  return subquotient_pres(s, Submodule{s.ring, s.ambient, {}});
}

std::string pres_key(const ModulePres& p) {
  std::ostringstream os;
  os << "p" << p.phi.ring.p << ";v";
  for (const auto& v : p.phi.ring.vars) os << v << ",";
  os << ";T";
  for (int t : p.phi.target.twists) os << t << ",";
  os << ";S";
  for (int t : p.phi.source.twists) os << t << ",";
  os << ";M";
  for (const auto& row : p.phi.e) {
    for (const auto& f : row) os << poly_to_string(p.phi.ring, f) << "|";
    os << "/";
  }
  return os.str();
}

}  // namespace ghom
