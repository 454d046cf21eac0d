#pragma once

#include <random>

#include "ghom/bounds.hpp"

namespace ghom {

// Deterministic RNG: mt19937-64 with explicit 64-bit seeding; bounded draws
// go through the raw stream so corpora are bit-reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t u64() { return eng_(); }
  long long below(long long n);                 // uniform-ish in [0, n)
  long long range(long long lo, long long hi);  // inclusive
 private:
  std::mt19937_64 eng_;
};

struct CorpusSpec {
  std::uint64_t seed = 0;
  int count = 0;
  int d = 2;
  std::string kind = "general";  // general | torsionfree | vector_bundle_bv |
                                 // dim1_square | equigenerated_deg0
  int max_rank = 3;
  int max_entry_degree = 2;
  int n = 0;          // bv size parameter; 0 = draw in [1, max_rank]
  int min_depth = 0;  // general kind only: 1 drops the finite-support part
  int retry_budget = 100;
};

Ring default_ring(int d, std::int64_t p = 32003);

// Named constructions used throughout the test corpora.
ModulePres example_cautionary2x2(const Ring& R, int n);
ModulePres example_maximal_ideal(const Ring& R);
// Presentation of R/(z_1..z_n) for z_i = (prod forms)/forms[i]; the forms must
// be pairwise coprime.
ModulePres example_degabc(const Ring& R, const std::vector<Poly>& forms);
// Random (n+d-1) x n presentation retried until the maximal-minor ideal is
// primary to the irrelevant ideal.
ModulePres example_bourbaki(const Ring& R, int n, int max_entry_degree, Rng& rng,
                            int retry_budget = 100);

ModulePres named_example(const std::string& name, const Ring& R, int n, Rng* rng);

Poly random_form(const Ring& R, int degree, Rng& rng);
std::vector<ModulePres> random_modules(const Ring& R, const CorpusSpec& spec);
std::vector<ModulePres> random_modules(const Ring& R, const CorpusSpec& spec, Rng& rng);

// Pairwise-coprime homogeneous forms, degrees in [1, max_degree].
std::vector<Poly> random_coprime_forms(const Ring& R, int count, int max_degree, Rng& rng,
                                       int retry_budget = 100);

// Corpus description file -> items; see module_io for the schema.
std::vector<CorpusItem> corpus_from_json(const std::string& text);
std::string corpus_meta_json(const std::string& text);

}  // namespace ghom
