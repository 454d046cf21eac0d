#include "common.hpp"

using namespace ghom;
using namespace ghom::test;

TEST_CASE("basic invariants of familiar modules") {
  Ring R = r2();
  SUBCASE("residue field") {
    InvariantSet inv = compute_invariants(quotient_ring(R, {"x", "y"}));
    CHECK(inv.deg == 1);
    CHECK(inv.dim == 0);
    CHECK(inv.depth == 0);
    CHECK(inv.pd == 2);
    CHECK(inv.reg.value() == 0);
    CHECK(inv.hdeg == 1);
  }
  SUBCASE("complete intersection of two quadrics") {
    InvariantSet inv = compute_invariants(quotient_ring(R, {"x^2", "y^2"}));
    CHECK(inv.deg == 4);
    CHECK(inv.reg.value() == 2);
    CHECK(inv.dim == 0);
  }
  SUBCASE("irrelevant ideal as a module") {
    InvariantSet inv = compute_invariants(example_maximal_ideal(R));
    CHECK(inv.nu == 2);
    CHECK(inv.alpha == 1);
    CHECK(inv.deg == 1);
    CHECK(inv.depth == 1);
    CHECK(inv.reg.value() == 1);
    CHECK(inv.dim == 2);
  }
  SUBCASE("2x2 torsion family") {
    InvariantSet inv = compute_invariants(example_cautionary2x2(R, 1));
    CHECK(inv.dim == 1);
    CHECK(inv.deg == 2);
    CHECK(inv.depth == 1);
  }
  SUBCASE("zero module") {
    InvariantSet inv = compute_invariants(pres_zero(R));
    CHECK(inv.deg == 0);
    CHECK(inv.hdeg == 0);
    CHECK(!inv.reg.has_value());
  }
}

TEST_CASE("local cohomology lengths") {
  Ring R = r2();
  SUBCASE("residue field") {
    CHECK(local_cohomology_length(quotient_ring(R, {"x", "y"}), 0) == 1);
    CHECK(local_cohomology_length(quotient_ring(R, {"x", "y"}), 1) == 0);
  }
  SUBCASE("irrelevant ideal") {
    ModulePres m = example_maximal_ideal(R);
    CHECK(local_cohomology_length(m, 0) == 0);
    CHECK(local_cohomology_length(m, 1) == 1);
  }
  SUBCASE("tensor square of the torsion family at n = 3") {
    ModulePres a = example_cautionary2x2(R, 3);
    ModulePres t = tensor_pres(a, a);
    InvariantCache c;
    CHECK(c.h0_via_saturation(t) == 6);
  }
  SUBCASE("infinite lengths are refused") {
    // dim-1 torsion module: h_1 is not finite
    ModulePres a = example_cautionary2x2(R, 2);
    CHECK(local_cohomology_length(a, 0) == 0);
    CHECK_THROWS_AS(local_cohomology_length(a, 1), Error);
    auto all = local_cohomology_lengths(a);
    CHECK(all[0].value() == 0);
    CHECK(!all[1].has_value());
  }
  SUBCASE("index range") {
    CHECK_THROWS_AS(local_cohomology_length(example_maximal_ideal(R), 2), Error);
  }
}

TEST_CASE("hdeg") {
  Ring R = r2();
  CHECK(hdeg(pres_free(R, FreeMod{{0}})) == 1);
  CHECK(hdeg(quotient_ring(R, {"x", "y"})) == 1);
  CHECK(hdeg(example_maximal_ideal(R)) == 2);
  SUBCASE("bourbaki column (x, y)") {
    GradedMatrix phi = mat_make(R, FreeMod{{0, 0}}, FreeMod{{1}},
                                {{pp(R, "x")}, {pp(R, "y")}});
    CHECK(hdeg(make_pres(phi)) == 2);  // deg + length of ext^1
  }
  SUBCASE("cm modules calibrate to the multiplicity") {
    CHECK(hdeg(example_cautionary2x2(R, 4)) == 2);
    CHECK(hdeg(quotient_ring(R, {"x^2", "y^2"})) == 4);
  }
}

TEST_CASE("hdeg satisfies the finite-support additivity") {
  Ring R = r2();
  Rng rng(101);
  for (int round = 0; round < 6; ++round) {
    CorpusSpec spec;
    spec.kind = "general";
    spec.count = 1;
    spec.max_rank = 2;
    spec.max_entry_degree = 2;
    ModulePres p = random_modules(R, spec, rng)[0];
    auto fs = finite_support_part(p);
    InvariantCache c;
    CHECK(hdeg(p) == module_length(fs.m0) + hdeg(fs.mbar));
  }
}

TEST_CASE("three-variable classics") {
  Ring R = r3();
  SUBCASE("residue field: koszul betti row and unit hdeg") {
    ModulePres k_res = quotient_ring(R, {"x", "y", "z"});
    InvariantCache c;
    const BettiTable& b = c.resolution(k_res).betti;
    CHECK(b.beta(0) == 1);
    CHECK(b.beta(1) == 3);
    CHECK(b.beta(2) == 3);
    CHECK(b.beta(3) == 1);
    CHECK(c.invariants(k_res).reg.value() == 0);
    CHECK(c.hdeg(k_res) == 1);
    CHECK(module_length(ext_module(k_res, 3)) == 1);
    CHECK(pres_is_zero(ext_module(k_res, 2)));
    // tor of the koszul complex against itself has binomial ranks
    for (int i = 0; i <= 3; ++i)
      CHECK(module_length(tor_module(k_res, k_res, i)) == binom(3, i));
  }
  SUBCASE("irrelevant ideal: depth one, hdeg three") {
    ModulePres m = example_maximal_ideal(R);
    InvariantCache c;
    InvariantSet inv = c.invariants(m);
    CHECK(inv.nu == 3);
    CHECK(inv.dim == 3);
    CHECK(inv.depth == 1);
    CHECK(inv.pd == 2);
    CHECK(inv.reg.value() == 1);
    // deg 1 plus the weight-two contribution of ext^2 = k
    CHECK(inv.hdeg == 3);
    CHECK(inv.h[0].value() == 0);
    CHECK(inv.h[1].value() == 1);  // the residue-field class from 0 -> m -> R -> k -> 0
    CHECK(inv.h[2].value() == 0);
  }
  SUBCASE("a one-dimensional quotient only sees the top ext") {
    ModulePres p = quotient_ring(R, {"x", "y^2"});
    InvariantCache c;
    InvariantSet inv = c.invariants(p);
    CHECK(inv.dim == 1);
    CHECK(inv.deg == 2);
    CHECK(inv.depth == 1);
    // complete intersection: cm, so hdeg calibrates to deg
    CHECK(inv.hdeg == 2);
  }
  SUBCASE("a depth-zero quotient splits its finite part") {
    // (x,y)^2 + (x*z, y*z) saturates to (x,y): the classes of x and y are the
    // finite part, the quotient is the z-line
    ModulePres p = quotient_ring(R, {"x^2", "x*y", "y^2", "x*z", "y*z"});
    InvariantCache c;
    auto fs = finite_support_part(p);
    CHECK(module_length(fs.m0) == 2);
    CHECK(c.hdeg(p) == module_length(fs.m0) + c.hdeg(fs.mbar));
    CHECK(c.hdeg(fs.mbar) == 1);
  }
}

TEST_CASE("hdeg splits along the torsion sequence") {
  // direct sums of a dimension-1 torsion module and a torsionfree module:
  // hdeg(A) = deg(T(A)) + hdeg(A/T(A))
  Ring R = r2();
  Rng rng(109);
  CorpusSpec torsion_spec;
  torsion_spec.kind = "dim1_square";
  torsion_spec.count = 1;
  torsion_spec.max_rank = 2;
  torsion_spec.max_entry_degree = 2;
  CorpusSpec free_spec;
  free_spec.kind = "torsionfree";
  free_spec.count = 1;
  free_spec.max_rank = 2;
  free_spec.max_entry_degree = 2;
  for (int round = 0; round < 4; ++round) {
    ModulePres t = random_modules(R, torsion_spec, rng)[0];
    ModulePres f = random_modules(R, free_spec, rng)[0];
    // block direct sum
    int r0 = t.phi.target.rank() + f.phi.target.rank();
    FreeMod target;
    target.twists = t.phi.target.twists;
    target.twists.insert(target.twists.end(), f.phi.target.twists.begin(),
                         f.phi.target.twists.end());
    FreeMod source;
    source.twists = t.phi.source.twists;
    source.twists.insert(source.twists.end(), f.phi.source.twists.begin(),
                         f.phi.source.twists.end());
    std::vector<std::vector<Poly>> e(r0, std::vector<Poly>(source.rank()));
    for (int i = 0; i < t.phi.target.rank(); ++i)
      for (int j = 0; j < t.phi.source.rank(); ++j) e[i][j] = t.phi.e[i][j];
    for (int i = 0; i < f.phi.target.rank(); ++i)
      for (int j = 0; j < f.phi.source.rank(); ++j)
        e[t.phi.target.rank() + i][t.phi.source.rank() + j] = f.phi.e[i][j];
    ModulePres sum = make_pres(mat_make(R, target, source, std::move(e)));

    InvariantCache c;
    const BidualResult& bd = c.bidual(sum);
    HilbertSeries ts = c.series(bd.torsion);
    REQUIRE(ts.dim == 1);
    // quotient by the torsion submodule
    std::vector<ModuleVec> rels;
    const ModulePres& q = c.minimal(sum);
    for (int j = 0; j < q.phi.source.rank(); ++j) rels.push_back(mat_column(q.phi, j));
    for (const auto& g : bd.torsion_preimage.gens) rels.push_back(g);
    ModulePres quot = make_pres(mat_from_columns(R, q.phi.target, rels));
    CHECK(c.hdeg(sum) == multiplicity(ts) + c.hdeg(quot));
    // the torsion part never raises the regularity
    CHECK(c.invariants(bd.torsion).reg.value() <= c.invariants(sum).reg.value());
  }
}

TEST_CASE("minors ideals") {
  Ring R = r2();
  ModulePres a = example_cautionary2x2(R, 3);
  const GradedMatrix& phi = a.phi;
  SUBCASE("entries") {
    CHECK(submodule_eq(minors_ideal(phi, 1), ideal(R, {"x", "y^3"})));
  }
  SUBCASE("determinant") {
    CHECK(submodule_eq(minors_ideal(phi, 2), ideal(R, {"x^2"})));
  }
  SUBCASE("zero matrix") {
    GradedMatrix z = mat_zero(R, FreeMod{{0}}, FreeMod{{1}});
    CHECK(minors_ideal(z, 1).gens.empty());
  }
}

TEST_CASE("predicates") {
  Ring R = r2();
  SUBCASE("irrelevant ideal") {
    Predicates pr = predicates(example_maximal_ideal(R));
    CHECK(pr.torsionfree);
    CHECK(pr.vector_bundle);
    // depth 1 < dim 2
    CHECK(!pr.cm);
    CHECK(!pr.equigenerated_deg0);
  }
  SUBCASE("2x2 torsion family") {
    Predicates pr = predicates(example_cautionary2x2(R, 2));
    CHECK(!pr.torsionfree);
    CHECK(pr.cm);  // dim 1 = depth 1
  }
  SUBCASE("residue field") {
    Predicates pr = predicates(quotient_ring(R, {"x", "y"}));
    CHECK(pr.vector_bundle);  // finite length
    CHECK(!pr.torsionfree);
    CHECK(pr.cm);
    CHECK(pr.equigenerated_deg0);
  }
}

TEST_CASE("duality cross-check runs on random modules") {
  Ring R = r2();
  Rng rng(103);
  for (int round = 0; round < 6; ++round) {
    CorpusSpec spec;
    spec.kind = "general";
    spec.count = 1;
    spec.max_rank = 2;
    spec.max_entry_degree = 2;
    ModulePres p = random_modules(R, spec, rng)[0];
    InvariantCache c;
    // invariants() hard-fails if saturation and duality disagree on h_0
    InvariantSet inv = c.invariants(p);
    CHECK(inv.depth + inv.pd == 2);
    CHECK(inv.depth <= inv.dim);
  }
}

TEST_CASE("betti and regularity bounds from the degree function") {
  Ring R = r2();
  Rng rng(107);
  for (int round = 0; round < 6; ++round) {
    CorpusSpec spec;
    spec.kind = round % 2 == 0 ? "general" : "dim1_square";
    spec.count = 1;
    spec.max_rank = 2;
    spec.max_entry_degree = 2;
    ModulePres p = random_modules(R, spec, rng)[0];
    InvariantCache c;
    InvariantSet inv = c.invariants(p);
    const BettiTable& b = c.resolution(p).betti;
    for (int i = 0; i <= b.pd(); ++i) CHECK(b.beta(i) <= inv.hdeg * binom(2, i));
    CHECK(inv.reg.value() < inv.hdeg + inv.alpha);
  }
}
