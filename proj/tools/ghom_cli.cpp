// Command-line surface: compute invariants of module files, tensor pairs,
// verify bound suites over generated corpora, and probe tensor powers for
// torsion. Exit codes: 0 success, 1 usage or parse failure, 2 violation of a
// proven-tier bound, 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ghom/corpus.hpp"
#include "ghom/module_io.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace ghom;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::bad_argument, "cannot write output file: " + out_path);
  out << text << "\n";
}

void diagnostic(const Error& e) {
  ordered_json j;
  j["error"] = ordered_json{{"code", errc_name(e.code())}, {"message", e.what()}};
  std::cerr << "error: " << e.what() << "\n" << j.dump() << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunMeta meta_for(const Ring& R, std::optional<std::uint64_t> seed = std::nullopt) {
  RunMeta m;
  m.p = R.p;
  m.variables = R.vars;
  m.seed = seed;
  return m;
}

int run_compute(const std::string& module_path, const std::string& out_path) {
  ParsedModule pm = parse_module_file(module_path);
  InvariantSet inv = compute_invariants(pm.pres);
  emit(invariant_set_json(inv, pm.ring), out_path);
  return 0;
}

int run_tensor(const std::string& a_path, const std::string& b_path,
               const std::vector<std::string>& wanted, const std::string& out_path) {
  ParsedModule a = parse_module_file(a_path);
  ParsedModule b = parse_module_file(b_path);
  require_same_ring(a.ring, b.ring);
  ModulePres t = tensor_pres(a.pres, b.pres);
  InvariantCache cache;
  ordered_json j;
  for (const auto& w : wanted) {
    if (w == "h0") {
      j["h0"] = cache.h0_via_saturation(t);
    } else if (w == "deg") {
      j["deg"] = multiplicity(cache.series(t));
    } else if (w == "dim") {
      j["dim"] = cache.series(t).dim;
    } else if (w == "nu") {
      j["nu"] = cache.minimal(t).phi.target.rank();
    } else if (w == "hdeg") {
      j["hdeg"] = cache.hdeg(t);
    } else {
      fail(Errc::bad_argument, "unknown tensor invariant: " + w);
    }
  }
  ordered_json meta;
  meta["p"] = a.ring.p;
  meta["variables"] = a.ring.vars;
  meta["order"] = kOrderTag;
  j["meta"] = meta;
  emit(j.dump(2), out_path);
  return 0;
}

void dump_violations(const SuiteReport& rep, const std::vector<CorpusItem>& corpus,
                     const std::string& dir) {
  if (rep.violations.empty() || dir.empty()) return;
  fs::create_directories(dir);
  int idx = 0;
  for (const auto& v : rep.violations) {
    std::string base = dir + "/violation_" + v.bound_id + "_" + std::to_string(idx++);
    // reproducer: the offending module files plus the report
    for (const auto& item : corpus) {
      if (v.item_id.rfind(item.id, 0) != 0) continue;
      write_module_file(base + "_a.json", item.a, item.id);
      if (item.b) write_module_file(base + "_b.json", *item.b, item.id);
      break;
    }
    std::ofstream out(base + ".json");
    out << bound_report_json(v.report) << "\n";
  }
}

int run_verify(const std::string& corpus_path, const std::vector<std::string>& bounds,
               const std::string& tier, const std::string& out_path, const std::string& dump_dir,
               int jobs) {
  std::string text = read_file(corpus_path);
  std::vector<CorpusItem> corpus = corpus_from_json(text);
  SuiteOptions opt;
  opt.bounds = bounds;
  opt.jobs = jobs;
  if (tier == "proven")
    opt.tier = Tier::proven;
  else if (tier == "conditional")
    opt.tier = Tier::conditional;
  else if (tier == "exploratory")
    opt.tier = Tier::exploratory;
  else if (!tier.empty() && tier != "all")
    fail(Errc::bad_argument, "unknown tier: " + tier);
  SuiteReport rep = verify_suite(corpus, opt);

  nlohmann::json meta_src = nlohmann::json::parse(text);
  RunMeta meta;
  meta.p = meta_src.value("p", std::int64_t{32003});
  meta.seed = meta_src.value("seed", std::uint64_t{0});
  if (meta_src.contains("variables"))
    meta.variables = meta_src["variables"].get<std::vector<std::string>>();
  else
    meta.variables = default_ring(meta_src.value("d", 2), meta.p).vars;
  emit(suite_report_json(rep, meta), out_path);
  dump_violations(rep, corpus, dump_dir);
  return rep.proven_violations.empty() ? 0 : 2;
}

int run_fuzz(std::uint64_t seed, int count, int d, const std::string& kind, int max_rank,
             int max_degree, const std::vector<std::string>& bounds, const std::string& out_path,
             const std::string& dump_dir, int jobs) {
  ordered_json spec;
  spec["p"] = 32003;
  spec["d"] = d;
  spec["seed"] = seed;
  ordered_json group;
  if (kind == "pair") {
    group["kind"] = "pair";
    group["count"] = count;
    group["a"] = ordered_json{{"kind", "general"}, {"max_rank", max_rank}, {"max_entry_degree", max_degree}};
    group["b"] = ordered_json{{"kind", "general"}, {"max_rank", max_rank}, {"max_entry_degree", max_degree}};
  } else {
    group["kind"] = kind;
    group["count"] = count;
    group["max_rank"] = max_rank;
    group["max_entry_degree"] = max_degree;
  }
  spec["groups"] = ordered_json::array({group});
  std::vector<CorpusItem> corpus = corpus_from_json(spec.dump());
  SuiteOptions opt;
  opt.bounds = bounds;
  opt.jobs = jobs;
  SuiteReport rep = verify_suite(corpus, opt);
  RunMeta meta;
  meta.seed = seed;
  meta.variables = default_ring(d).vars;
  emit(suite_report_json(rep, meta), out_path);
  dump_violations(rep, corpus, dump_dir);
  return rep.proven_violations.empty() ? 0 : 2;
}

int run_example(const std::string& name, int n, int d, const std::string& forms_arg,
                std::uint64_t seed, const std::string& emit_dir) {
  Ring R = default_ring(d);
  ModulePres p = pres_zero(R);
  if (name == "degabc" && !forms_arg.empty()) {
    std::vector<Poly> forms;
    std::string cur;
    std::vector<std::string> parts;
    for (char ch : forms_arg) {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    parts.push_back(cur);
    for (const auto& s : parts) forms.push_back(poly_parse(R, s));
    p = example_degabc(R, forms);
  } else {
    Rng rng(seed);
    p = named_example(name, R, n, &rng);
  }
  bool sized = name == "cautionary2x2" || name == "bourbaki_bv";
  std::string provenance = name + (sized ? "(n=" + std::to_string(n) + ")" : "");
  if (emit_dir.empty()) {
    std::cout << emit_module_json(p, provenance) << "\n";
  } else {
    fs::create_directories(emit_dir);
    std::string path = emit_dir + "/" + name + (sized ? "_n" + std::to_string(n) : "") + ".json";
    write_module_file(path, p, provenance);
    std::cout << path << "\n";
  }
  return 0;
}

int run_probe(const std::string& module_path, int emax, long long budget,
              const std::string& out_path) {
  ParsedModule pm = parse_module_file(module_path);
  ProbeReport rep = tensor_power_probe(pm.pres, emax, budget);
  rep.module_id = pm.source;
  emit(probe_report_json(rep, meta_for(pm.ring)), out_path);
  return rep.budget_exceeded ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded-module homology engine"};
  app.require_subcommand(1);

  std::string module_path, out_path, a_path, b_path, corpus_path, tier = "all";
  std::string dump_dir, kind = "general", name, forms_arg, emit_dir;
  std::vector<std::string> bounds, invariants_wanted = {"h0"};
  std::uint64_t seed = 0;
  int count = 10, d = 2, max_rank = 3, max_degree = 2, n = 1, emax = 2, jobs = 0;
  long long budget = 200000;

  auto* compute = app.add_subcommand("compute", "invariants of a module file");
  compute->add_option("--module", module_path, "module file")->required();
  compute->add_option("--out", out_path, "output path (default stdout)");

  auto* tensor = app.add_subcommand("tensor", "invariants of a tensor product");
  tensor->add_option("a", a_path, "first module file")->required();
  tensor->add_option("b", b_path, "second module file")->required();
  tensor->add_option("--invariants", invariants_wanted, "subset of h0,deg,dim,nu,hdeg")
      ->delimiter(',');
  tensor->add_option("--out", out_path, "output path");

  auto* verify = app.add_subcommand("verify", "run the bound suite over a corpus file");
  verify->add_option("--corpus", corpus_path, "corpus description file")->required();
  verify->add_option("--bounds", bounds, "bound ids (default all)")->delimiter(',');
  verify->add_option("--tier", tier, "proven|conditional|exploratory|all");
  verify->add_option("--out", out_path, "report path");
  verify->add_option("--dump-dir", dump_dir, "directory for violation reproducers");
  verify->add_option("--jobs", jobs, "worker threads (0 = auto)");

  auto* fuzz = app.add_subcommand("fuzz", "generate a corpus and verify it");
  fuzz->add_option("--seed", seed, "corpus seed")->required();
  fuzz->add_option("--count", count, "number of items");
  fuzz->add_option("--d", d, "number of variables");
  fuzz->add_option("--kind", kind, "corpus kind or 'pair'");
  fuzz->add_option("--max-rank", max_rank, "generator count bound");
  fuzz->add_option("--max-degree", max_degree, "entry degree bound");
  fuzz->add_option("--bounds", bounds, "bound ids (default all)")->delimiter(',');
  fuzz->add_option("--out", out_path, "report path");
  fuzz->add_option("--dump-dir", dump_dir, "directory for violation reproducers");
  fuzz->add_option("--jobs", jobs, "worker threads (0 = auto)");

  auto* example = app.add_subcommand("example", "emit a named module file");
  example->add_option("--name", name, "cautionary2x2|bourbaki_bv|degabc|maximal_ideal")->required();
  example->add_option("--n", n, "size parameter");
  example->add_option("--d", d, "number of variables");
  example->add_option("--forms", forms_arg, "comma-separated forms for degabc");
  example->add_option("--seed", seed, "seed for randomized examples");
  example->add_option("--emit", emit_dir, "directory to write into (default stdout)");

  auto* probe = app.add_subcommand("probe", "tensor-power torsion probe");
  probe->add_option("--module", module_path, "module file")->required();
  probe->add_option("--emax", emax, "largest tensor power");
  probe->add_option("--budget", budget, "generator-count budget");
  probe->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e) == 0) return 0;
    ordered_json j;
    j["error"] = ordered_json{{"code", "usage"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return 1;
  }

  try {
    if (compute->parsed()) return run_compute(module_path, out_path);
    if (tensor->parsed()) return run_tensor(a_path, b_path, invariants_wanted, out_path);
    if (verify->parsed())
      return run_verify(corpus_path, bounds, tier, out_path, dump_dir, jobs);
    if (fuzz->parsed())
      return run_fuzz(seed, count, d, kind, max_rank, max_degree, bounds, out_path, dump_dir, jobs);
    if (example->parsed()) return run_example(name, n, d, forms_arg, seed, emit_dir);
    if (probe->parsed()) return run_probe(module_path, emax, budget, out_path);
  } catch (const Error& e) {
    diagnostic(e);
    if (e.code() == Errc::budget_exceeded) return 3;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
