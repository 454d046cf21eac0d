#pragma once

#include "ghom/invariants.hpp"

namespace ghom {

enum class Tier { proven, conditional, exploratory };
const char* tier_name(Tier t);

struct BoundReport {
  std::string bound_id;
  bool applicable = false;
  std::string reason;  // failed guard when inapplicable
  long long lhs = 0;
  long long rhs = 0;
  bool strict = false;  // holds means lhs < rhs; equality bounds set eq
  bool equality = false;
  bool holds = false;
  long long slack = 0;  // rhs - lhs
  Tier tier = Tier::proven;
  std::vector<std::pair<std::string, long long>> notes;
};

struct ProbeReport {
  std::string module_id;
  int e_max = 0;
  std::optional<int> e_found;
  bool budget_exceeded = false;
  long long budget = 0;
};

const std::vector<std::string>& known_bounds();
bool bound_takes_pair(const std::string& id);
Tier bound_tier(const std::string& id);

// One corpus entry: a module, a pair, or a pairwise-coprime form family for
// the product-degree identity.
struct CorpusItem {
  std::string id;
  ModulePres a;
  std::optional<ModulePres> b;
  std::vector<Poly> forms;  // only for "degabc" items
};

BoundReport evaluate_bound(const std::string& id, const ModulePres& a, const ModulePres* b);
BoundReport evaluate_bound_item(const std::string& id, const CorpusItem& item, InvariantCache& cache);
BoundReport evaluate_degabc(const Ring& R, const std::vector<Poly>& forms);

ProbeReport tensor_power_probe(const ModulePres& m, int e_max, long long budget = 200000);

struct BoundAgg {
  long long applicable = 0;
  long long holds = 0;
  long long violated = 0;
  // max lhs/rhs ratio kept as an exact fraction
  long long max_ratio_num = 0;
  long long max_ratio_den = 1;
  std::string max_ratio_item;
};

struct Violation {
  std::string bound_id;
  std::string item_id;
  BoundReport report;
};

struct SuiteOptions {
  std::vector<std::string> bounds;  // empty = all
  std::optional<Tier> tier;
  int jobs = 0;  // 0 = hardware concurrency
};

struct SuiteReport {
  std::map<std::string, BoundAgg> per_bound;
  std::vector<Violation> violations;         // all tiers
  std::vector<Violation> proven_violations;  // subset that gates
  long long items = 0;
};

SuiteReport verify_suite(const std::vector<CorpusItem>& corpus, const SuiteOptions& opt);

struct RunMeta {
  std::int64_t p = 32003;
  std::vector<std::string> variables;
  std::optional<std::uint64_t> seed;
  std::string rng = "mt19937-64";
};

std::string bound_report_json(const BoundReport& r);
std::string probe_report_json(const ProbeReport& r, const RunMeta& meta);
std::string suite_report_json(const SuiteReport& r, const RunMeta& meta);

}  // namespace ghom
