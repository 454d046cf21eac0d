#include "common.hpp"

using namespace ghom;
using namespace ghom::test;

namespace {

bool contains_vec(const GroebnerBasis& gb, const ModuleVec& v) {
  for (const auto& g : gb.g)
    if (mv_eq(g, v)) return true;
  return false;
}

}  // namespace

TEST_CASE("normal form examples") {
  Ring R = r2();
  GroebnerBasis gx = buchberger(ideal(R, {"x"}));
  CHECK(normal_form(vec(R, {"x^2"}), gx).is_zero());
  CHECK(mv_eq(normal_form(vec(R, {"x + y"}), gx), vec(R, {"y"})));
  GroebnerBasis gxy = buchberger(ideal(R, {"x - y"}));
  // one division step on the lead term x
  CHECK(mv_eq(normal_form(vec(R, {"x*y + y^3"}), gxy), vec(R, {"y^2 + y^3"})));
}

TEST_CASE("buchberger on ideals") {
  Ring R = r2();
  SUBCASE("monomial generators are already a basis") {
    GroebnerBasis gb = buchberger(ideal(R, {"x", "y"}));
    CHECK(gb.g.size() == 2);
  }
  SUBCASE("one S-pair closes the basis") {
    GroebnerBasis gb = buchberger(ideal(R, {"x^2", "x*y + y^2"}));
    REQUIRE(gb.g.size() == 3);
    CHECK(contains_vec(gb, vec(R, {"x^2"})));
    CHECK(contains_vec(gb, vec(R, {"x*y + y^2"})));
    CHECK(contains_vec(gb, vec(R, {"y^3"})));
  }
  SUBCASE("redundant generators are pruned") {
    GroebnerBasis gb = buchberger(ideal(R, {"x - y", "y - x"}));
    REQUIRE(gb.g.size() == 1);
    CHECK(mv_eq(gb.g[0], vec(R, {"x - y"})));
  }
}

TEST_CASE("buchberger is idempotent on reduced bases") {
  Ring R = r2();
  GroebnerBasis gb = buchberger(ideal(R, {"x^2", "x*y + y^2"}));
  GroebnerBasis again = buchberger(Submodule{gb.ring, gb.ambient, gb.g});
  REQUIRE(gb.g.size() == again.g.size());
  for (size_t i = 0; i < gb.g.size(); ++i) CHECK(mv_eq(gb.g[i], again.g[i]));
}

TEST_CASE("membership matches the slice oracle") {
  Ring R = r2();
  Rng rng(31);
  for (int round = 0; round < 12; ++round) {
    std::vector<ModuleVec> gens;
    FreeMod amb{{0, 0}};
    for (int k = 0; k < 2; ++k) {
      std::vector<Poly> comps;
      int deg = 1 + static_cast<int>(rng.below(2));
      for (int i = 0; i < 2; ++i) comps.push_back(random_form(R, deg, rng));
      ModuleVec v = mv_from_polys(R, comps);
      if (!v.is_zero()) gens.push_back(v);
    }
    if (gens.empty()) continue;
    Submodule s{R, amb, gens};
    GroebnerBasis gb = buchberger(s);
    // a random combination lies in the span
    ModuleVec combo;
    for (const auto& g : gens) {
      Monomial u(2, 0);
      u[0] = static_cast<int>(rng.below(2));
      u[1] = static_cast<int>(rng.below(2));
      combo = mv_add(R, combo, mv_mul_term(R, g, 1 + rng.below(R.p - 1), u));
    }
    if (!combo.is_zero() && mv_homogeneity(amb, combo).homogeneous)
      CHECK(normal_form(combo, gb).is_zero());
    // the lead-term count agrees with the oracle rank in every low degree
    LeadTermModule lt = lead_terms(gb);
    for (int t = 0; t <= 6; ++t) {
      long long gb_dim = oracle::free_slice_dim(R, amb, t) - standard_monomial_count(R, amb, lt, t);
      CHECK(gb_dim == oracle::slice_dim(R, amb, gens, t));
    }
  }
}

TEST_CASE("syzygies") {
  Ring R = r2();
  SUBCASE("koszul relation") {
    Submodule s = ideal(R, {"x", "y"});
    Submodule syz = syzygies(s);
    REQUIRE(syz.gens.size() == 1);
    // the relation kills the generator row
    GradedMatrix gens_mat = mat_from_columns(R, s.ambient, s.gens);
    GradedMatrix syz_mat = mat_from_columns(R, syz.ambient, syz.gens);
    CHECK(mat_is_zero(mat_mul(gens_mat, syz_mat)));
    CHECK(syz.ambient.twists == std::vector<int>{1, 1});
  }
  SUBCASE("a nonzerodivisor has no relations") {
    CHECK(syzygies(ideal(R, {"x"})).gens.empty());
  }
  SUBCASE("three quadric monomials") {
    Submodule s = ideal(R, {"x^2", "x*y", "y^2"});
    Submodule syz = syzygies(s);
    Submodule expected{R, FreeMod{{2, 2, 2}},
                       {vec(R, {"y", "-x", "0"}), vec(R, {"0", "y", "-x"})}};
    CHECK(submodule_eq(syz, expected));
  }
}

TEST_CASE("syzygy columns always kill the generator matrix") {
  Rng rng(41);
  Ring R = r2();
  for (int round = 0; round < 10; ++round) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) {
      Poly f = random_form(R, 1 + static_cast<int>(rng.below(3)), rng);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    Submodule s = submodule_from_ideal(R, gens);
    Submodule syz = syzygies(s);
    GradedMatrix gens_mat = mat_from_columns(R, s.ambient, s.gens);
    if (syz.gens.empty()) continue;
    GradedMatrix syz_mat = mat_from_columns(R, syz.ambient, syz.gens);
    CHECK(mat_is_zero(mat_mul(gens_mat, syz_mat)));
    // and the relations are complete: degreewise kernel dimensions match
    for (int t = 0; t <= 7; ++t) {
      long long ker_dim = oracle::free_slice_dim(R, syz.ambient, t) -
                          oracle::map_slice_rank(gens_mat, t);
      CHECK(oracle::slice_dim(R, syz.ambient, syz.gens, t) == ker_dim);
    }
  }
}

TEST_CASE("kernel of a map") {
  Ring R = r2();
  SUBCASE("row vector") {
    GradedMatrix m = mat_make(R, FreeMod{{0}}, FreeMod{{1, 1}}, {{pp(R, "x"), pp(R, "y")}});
    Submodule k = kernel_of_map(m);
    Submodule expected{R, m.source, {vec(R, {"y", "-x"})}};
    CHECK(submodule_eq(k, expected));
  }
  SUBCASE("identity has no kernel") {
    GradedMatrix id = mat_identity(R, FreeMod{{0, 0}});
    CHECK(buchberger(kernel_of_map(id)).g.empty());
  }
  SUBCASE("transposed torsion presentations against the oracle") {
    for (int n : {1, 2, 3}) {
      GradedMatrix m = mat_make(
          R, FreeMod{{0, n - 1}}, FreeMod{{1, n}},
          {{pp(R, "x"), poly_var(R, 1, n)}, {pp(R, "0"), pp(R, "x")}});
      GradedMatrix mt = mat_transpose(m);
      Submodule k = kernel_of_map(mt);
      for (int t = -3; t <= n + 3; ++t) {
        long long ker_dim = oracle::free_slice_dim(R, mt.source, t) -
                            oracle::map_slice_rank(mt, t);
        CHECK(oracle::slice_dim(R, mt.source, k.gens, t) == ker_dim);
      }
    }
  }
}

TEST_CASE("colon and saturation") {
  Ring R = r2();
  std::vector<Poly> m_gens = {pp(R, "x"), pp(R, "y")};
  Submodule i = ideal(R, {"x^2", "x*y"});
  SUBCASE("colon by the irrelevant ideal") {
    CHECK(submodule_eq(colon(i, m_gens), ideal(R, {"x"})));
  }
  SUBCASE("saturation stabilizes after one step") {
    CHECK(submodule_eq(saturate(i, m_gens), ideal(R, {"x"})));
  }
  SUBCASE("saturated ideals are fixed points") {
    Submodule x = ideal(R, {"x"});
    CHECK(submodule_eq(saturate(x, m_gens), x));
    CHECK(submodule_eq(saturate(saturate(i, m_gens), m_gens), saturate(i, m_gens)));
  }
  SUBCASE("mode dispatch") {
    CHECK(submodule_eq(colon_and_saturate(i, m_gens, ColonMode::colon), colon(i, m_gens)));
    CHECK(submodule_eq(colon_and_saturate(i, m_gens, ColonMode::saturate), saturate(i, m_gens)));
  }
}

TEST_CASE("intersection") {
  Ring R = r2();
  CHECK(submodule_eq(intersect(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"})));
  CHECK(submodule_eq(intersect(ideal(R, {"x", "y"}), ideal(R, {"x"})), ideal(R, {"x"})));
}

TEST_CASE("minimal generators filter by degree") {
  Ring R = r2();
  Submodule s = ideal(R, {"x", "x^2", "y", "x*y + y^2"});
  auto gens = min_generators(s);
  CHECK(gens.size() == 2);
}

TEST_CASE("lift through a generator list") {
  Ring R = r2();
  Submodule s = ideal(R, {"x^2", "x*y"});
  ModuleVec v = vec(R, {"x^2*y + x*y^2"});
  auto w = lift_through(s, v);
  REQUIRE(w.has_value());
  ModuleVec rebuilt = mv_combine(R, s.gens, *w);
  CHECK(mv_eq(rebuilt, v));
  CHECK(!lift_through(s, vec(R, {"y^2"})).has_value());
}

TEST_CASE("zero and empty submodules short-circuit") {
  Ring R = r2();
  Submodule empty{R, FreeMod{{0}}, {}};
  CHECK(buchberger(empty).g.empty());
  CHECK(syzygies(empty).gens.empty());
  Submodule zerogen{R, FreeMod{{0}}, {ModuleVec{}}};
  Submodule syz = syzygies(zerogen);
  REQUIRE(syz.gens.size() == 1);  // the tautological relation on the zero generator
  FreeMod rank0;
  Submodule nothing{R, rank0, {}};
  CHECK(buchberger(nothing).g.empty());
}
