#include <nlohmann/json.hpp>

#include "ghom/corpus.hpp"

namespace ghom {

using json = nlohmann::json;

long long Rng::below(long long n) {
  if (n <= 0) fail(Errc::bad_argument, "empty draw range");
  return static_cast<long long>(u64() % static_cast<std::uint64_t>(n));
}

long long Rng::range(long long lo, long long hi) { return lo + below(hi - lo + 1); }

Ring default_ring(int d, std::int64_t p) {
  static const char* names[] = {"x", "y", "z"};
  std::vector<std::string> vars;
  if (d <= 3) {
    for (int i = 0; i < d; ++i) vars.push_back(names[i]);
  } else {
    for (int i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i + 1));
  }
  return make_ring(p, std::move(vars));
}

ModulePres example_cautionary2x2(const Ring& R, int n) {
  if (R.nvars() != 2) fail(Errc::bad_argument, "cautionary2x2 lives over two variables");
  if (n < 1) fail(Errc::bad_argument, "cautionary2x2 needs n >= 1");
  Poly x = poly_var(R, 0), yn = poly_var(R, 1, n);
  FreeMod target{{0, n - 1}};
  FreeMod source{{1, n}};
  std::vector<std::vector<Poly>> e = {{x, yn}, {poly_zero(), x}};
  return minimalize(make_pres(mat_make(R, target, source, std::move(e))));
}

ModulePres example_maximal_ideal(const Ring& R) {
  std::vector<Poly> vars;
  for (int i = 0; i < R.nvars(); ++i) vars.push_back(poly_var(R, i));
  ModulePres p = pres_from_submodule(submodule_from_ideal(R, vars));
  p.minimal = true;  // variables generate minimally; their syzygies lie in m
  return p;
}

ModulePres example_degabc(const Ring& R, const std::vector<Poly>& forms) {
  if (forms.size() < 2) fail(Errc::bad_argument, "degabc needs at least two forms");
  InvariantCache c;
  for (size_t i = 0; i < forms.size(); ++i) {
    auto h = poly_homogeneity(forms[i]);
    if (forms[i].is_zero() || !h.homogeneous || h.degree < 1)
      fail(Errc::bad_argument, "degabc forms must be homogeneous of positive degree");
    for (size_t j = i + 1; j < forms.size(); ++j)
      if (c.series(coker_of_ideal(R, {forms[i], forms[j]})).dim != 0)
        fail(Errc::bad_argument, "degabc forms must be pairwise coprime");
  }
  std::vector<Poly> zs;
  for (size_t i = 0; i < forms.size(); ++i) {
    Poly z = poly_const(R, 1);
    for (size_t j = 0; j < forms.size(); ++j)
      if (j != i) z = poly_mul(R, z, forms[j]);
    zs.push_back(std::move(z));
  }
  return minimalize(coker_of_ideal(R, zs));
}

Poly random_form(const Ring& R, int degree, Rng& rng) {
  std::vector<Term> raw;
  for (auto& m : monomials_of_degree(R.nvars(), degree)) {
    std::int64_t c = rng.below(R.p);
    if (c != 0) raw.push_back(Term{c, std::move(m)});
  }
  return poly_normalize(R, std::move(raw));
}

ModulePres example_bourbaki(const Ring& R, int n, int max_entry_degree, Rng& rng,
                            int retry_budget) {
  if (n < 1 || max_entry_degree < 1) fail(Errc::bad_argument, "bad bourbaki parameters");
  int d = R.nvars();
  int rows = n + d - 1;
  InvariantCache c;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    FreeMod target;
    target.twists.assign(static_cast<size_t>(rows), 0);
    FreeMod source;
    std::vector<std::vector<Poly>> e(static_cast<size_t>(rows));
    for (int j = 0; j < n; ++j) source.twists.push_back(static_cast<int>(rng.range(1, max_entry_degree)));
    for (int i = 0; i < rows; ++i) {
      e[static_cast<size_t>(i)].resize(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j)
        e[static_cast<size_t>(i)][static_cast<size_t>(j)] = random_form(R, source.twists[static_cast<size_t>(j)], rng);
    }
    GradedMatrix phi = mat_make(R, target, source, std::move(e));
    Submodule minors = minors_ideal(phi, n);
    if (minors.gens.empty()) continue;
    std::vector<Poly> gens;
    for (const auto& g : minors.gens) gens.push_back(mv_to_polys(R, 1, g)[0]);
    if (c.series(coker_of_ideal(R, gens)).dim != 0) continue;
    return minimalize(make_pres(std::move(phi)));
  }
  fail(Errc::retry_exhausted, "no presentation with irrelevant-primary maximal minors found");
}

ModulePres named_example(const std::string& name, const Ring& R, int n, Rng* rng) {
  if (name == "cautionary2x2") return example_cautionary2x2(R, n);
  if (name == "maximal_ideal") return example_maximal_ideal(R);
  if (name == "bourbaki_bv") {
    if (!rng) fail(Errc::bad_argument, "bourbaki_bv needs a seeded generator");
    return example_bourbaki(R, n < 1 ? 1 : n, 2, *rng);
  }
  if (name == "degabc") {
    if (R.nvars() != 2) fail(Errc::bad_argument, "default degabc forms live over two variables");
    std::vector<Poly> forms = {poly_var(R, 0), poly_var(R, 1),
                               poly_add(R, poly_var(R, 0), poly_var(R, 1))};
    return example_degabc(R, forms);
  }
  fail(Errc::bad_argument, "unknown example name: " + name);
}

namespace {

ModulePres random_general(const Ring& R, const CorpusSpec& spec, Rng& rng) {
  for (int attempt = 0; attempt < spec.retry_budget; ++attempt) {
    int r0 = static_cast<int>(rng.range(1, spec.max_rank));
    int cols = static_cast<int>(rng.range(1, r0 + 1));
    FreeMod target;
    for (int i = 0; i < r0; ++i) target.twists.push_back(static_cast<int>(rng.range(0, 1)));
    int tmax = *std::max_element(target.twists.begin(), target.twists.end());
    FreeMod source;
    for (int j = 0; j < cols; ++j)
      source.twists.push_back(tmax + static_cast<int>(rng.range(1, spec.max_entry_degree)));
    std::vector<std::vector<Poly>> e(static_cast<size_t>(r0));
    for (int i = 0; i < r0; ++i) {
      e[static_cast<size_t>(i)].resize(static_cast<size_t>(cols));
      for (int j = 0; j < cols; ++j) {
        bool drop = rng.below(4) == 0;
        e[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            drop ? poly_zero() : random_form(R, source.twists[static_cast<size_t>(j)] - target.twists[static_cast<size_t>(i)], rng);
      }
    }
    ModulePres p = minimalize(make_pres(mat_make(R, target, source, std::move(e))));
    if (p.phi.target.rank() == 0) continue;
    if (spec.min_depth >= 1) {
      ModulePres bar = finite_support_part(p).mbar;
      bar = minimalize(bar);
      if (bar.phi.target.rank() == 0) continue;
      p = std::move(bar);
    }
    return p;
  }
  fail(Errc::retry_exhausted, "random module generation exhausted its retry budget");
}

ModulePres random_torsionfree(const Ring& R, const CorpusSpec& spec, Rng& rng) {
  for (int attempt = 0; attempt < spec.retry_budget; ++attempt) {
    int rank = static_cast<int>(rng.range(1, spec.max_rank));
    // more generators than the ambient rank, so non-free submodules appear
    int count = static_cast<int>(rng.range(rank, rank + 2));
    FreeMod amb;
    amb.twists.assign(static_cast<size_t>(rank), 0);
    std::vector<ModuleVec> gens;
    for (int k = 0; k < count; ++k) {
      int deg = static_cast<int>(rng.range(1, spec.max_entry_degree));
      std::vector<Poly> comps;
      for (int i = 0; i < rank; ++i) comps.push_back(random_form(R, deg, rng));
      ModuleVec v = mv_from_polys(R, comps);
      if (!v.is_zero()) gens.push_back(std::move(v));
    }
    if (gens.empty()) continue;
    Submodule s{R, amb, min_generators(Submodule{R, amb, gens})};
    if (s.gens.empty()) continue;
    ModulePres p = pres_from_submodule(s);
    p.minimal = true;
    return p;
  }
  fail(Errc::retry_exhausted, "random torsionfree generation exhausted its retry budget");
}

ModulePres random_dim1_square(const Ring& R, const CorpusSpec& spec, Rng& rng) {
  for (int attempt = 0; attempt < spec.retry_budget; ++attempt) {
    int rank = static_cast<int>(rng.range(1, spec.max_rank));
    FreeMod target;
    target.twists.assign(static_cast<size_t>(rank), 0);
    FreeMod source;
    for (int j = 0; j < rank; ++j)
      source.twists.push_back(static_cast<int>(rng.range(1, spec.max_entry_degree)));
    std::vector<std::vector<Poly>> e(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) {
      e[static_cast<size_t>(i)].resize(static_cast<size_t>(rank));
      for (int j = 0; j < rank; ++j) {
        bool drop = rng.below(5) == 0;
        e[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            drop ? poly_zero() : random_form(R, source.twists[static_cast<size_t>(j)], rng);
      }
    }
    GradedMatrix phi = mat_make(R, target, source, std::move(e));
    if (mat_det(phi).is_zero()) continue;
    ModulePres p = minimalize(make_pres(std::move(phi)));
    if (p.phi.target.rank() == 0) continue;
    return p;
  }
  fail(Errc::retry_exhausted, "random square generation exhausted its retry budget");
}

}  // namespace

std::vector<ModulePres> random_modules(const Ring& R, const CorpusSpec& spec, Rng& rng) {
  std::vector<ModulePres> out;
  out.reserve(static_cast<size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    if (spec.kind == "general") {
      out.push_back(random_general(R, spec, rng));
    } else if (spec.kind == "torsionfree") {
      out.push_back(random_torsionfree(R, spec, rng));
    } else if (spec.kind == "vector_bundle_bv") {
      int n = spec.n > 0 ? spec.n : static_cast<int>(rng.range(1, std::min(spec.max_rank, 3)));
      out.push_back(example_bourbaki(R, n, spec.max_entry_degree, rng, spec.retry_budget));
    } else if (spec.kind == "dim1_square" || spec.kind == "equigenerated_deg0") {
      out.push_back(random_dim1_square(R, spec, rng));
    } else {
      fail(Errc::bad_argument, "unknown corpus kind: " + spec.kind);
    }
  }
  return out;
}

std::vector<ModulePres> random_modules(const Ring& R, const CorpusSpec& spec) {
  Rng rng(spec.seed);
  return random_modules(R, spec, rng);
}

std::vector<Poly> random_coprime_forms(const Ring& R, int count, int max_degree, Rng& rng,
                                       int retry_budget) {
  InvariantCache c;
  std::vector<Poly> forms;
  for (int i = 0; i < count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < retry_budget && !placed; ++attempt) {
      Poly f = random_form(R, static_cast<int>(rng.range(1, max_degree)), rng);
      if (f.is_zero()) continue;
      bool ok = true;
      for (const auto& g : forms)
        if (c.series(coker_of_ideal(R, {f, g})).dim != 0) {
          ok = false;
          break;
        }
      if (ok) {
        forms.push_back(std::move(f));
        placed = true;
      }
    }
    if (!placed) fail(Errc::retry_exhausted, "could not draw pairwise coprime forms");
  }
  return forms;
}

namespace {

CorpusSpec spec_from_json(const json& j, int d, std::uint64_t seed) {
  CorpusSpec s;
  s.seed = seed;
  s.d = d;
  s.kind = j.value("kind", "general");
  s.count = j.value("count", 1);
  s.max_rank = j.value("max_rank", 3);
  s.max_entry_degree = j.value("max_entry_degree", 2);
  s.n = j.value("n", 0);
  s.min_depth = j.value("min_depth", 0);
  s.retry_budget = j.value("retry_budget", 100);
  return s;
}

}  // namespace

std::vector<CorpusItem> corpus_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("corpus file: ") + e.what());
  }
  std::int64_t p = j.value("p", std::int64_t{32003});
  std::vector<std::string> vars = j.value("variables", std::vector<std::string>{});
  Ring R = vars.empty() ? default_ring(j.value("d", 2), p) : make_ring(p, vars);
  std::uint64_t seed = j.value("seed", std::uint64_t{0});
  Rng rng(seed);

  std::vector<CorpusItem> items;
  if (!j.contains("groups") || !j["groups"].is_array())
    fail(Errc::parse_error, "corpus file: missing groups array");
  int gi = 0;
  for (const auto& g : j["groups"]) {
    std::string kind = g.value("kind", "general");
    std::string prefix = std::to_string(gi) + ":" + kind + ":";
    if (kind == "pair") {
      int count = g.value("count", 1);
      CorpusSpec sa = spec_from_json(g.value("a", json::object()), R.nvars(), seed);
      CorpusSpec sb = spec_from_json(g.value("b", json::object()), R.nvars(), seed);
      sa.count = sb.count = 1;
      for (int i = 0; i < count; ++i) {
        ModulePres a = random_modules(R, sa, rng)[0];
        ModulePres b = random_modules(R, sb, rng)[0];
        items.push_back(CorpusItem{prefix + std::to_string(i), std::move(a), std::move(b), {}});
      }
    } else if (kind == "named") {
      std::string name = g.value("name", "maximal_ideal");
      int n = g.value("n", 1);
      items.push_back(CorpusItem{prefix + name, named_example(name, R, n, &rng), std::nullopt, {}});
    } else if (kind == "degabc") {
      std::vector<Poly> forms;
      for (const auto& s : g.value("forms", std::vector<std::string>{}))
        forms.push_back(poly_parse(R, s));
      CorpusItem item{prefix + "forms", example_degabc(R, forms), std::nullopt, forms};
      items.push_back(std::move(item));
    } else if (kind == "degabc_random") {
      int count = g.value("count", 1);
      int nforms = g.value("nforms", 3);
      int maxdeg = g.value("max_form_degree", 2);
      for (int i = 0; i < count; ++i) {
        auto forms = random_coprime_forms(R, nforms, maxdeg, rng);
        CorpusItem item{prefix + std::to_string(i), example_degabc(R, forms), std::nullopt, forms};
        items.push_back(std::move(item));
      }
    } else {
      CorpusSpec s = spec_from_json(g, R.nvars(), seed);
      auto mods = random_modules(R, s, rng);
      for (size_t i = 0; i < mods.size(); ++i)
        items.push_back(CorpusItem{prefix + std::to_string(i), std::move(mods[i]), std::nullopt, {}});
    }
    ++gi;
  }
  return items;
}

std::string corpus_meta_json(const std::string& text) {
  json j = json::parse(text);
  nlohmann::ordered_json meta;
  meta["p"] = j.value("p", std::int64_t{32003});
  meta["seed"] = j.value("seed", std::uint64_t{0});
  meta["variables"] = j.value("variables", std::vector<std::string>{});
  meta["order"] = kOrderTag;
  meta["rng"] = "mt19937-64";
  return meta.dump(2);
}

}  // namespace ghom
