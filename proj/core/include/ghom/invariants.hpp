#pragma once

#include <map>
#include <memory>

#include "ghom/homology.hpp"

namespace ghom {

struct InvariantSet {
  long long deg = 0;
  long long nu = 0;
  long long alpha = 0;
  long long dim = 0;
  long long depth = 0;
  long long pd = 0;
  std::optional<long long> reg;           // nullopt for the zero module
  std::vector<std::optional<long long>> h;  // h_0..h_{d-1}; nullopt when infinite
  long long hdeg = 0;
};

struct Predicates {
  bool torsionfree = false;
  bool vector_bundle = false;
  bool cm = false;
  bool equigenerated_deg0 = false;
};

// Memoizes minimal presentations, resolutions and hdeg values within one
// computation; not shared across concurrent computations.
class InvariantCache {
 public:
  const ModulePres& minimal(const ModulePres& p);
  const ResolutionResult& resolution(const ModulePres& p);
  HilbertSeries series(const ModulePres& p);
  long long hdeg(const ModulePres& p);
  long long h0_via_saturation(const ModulePres& p);
  long long ext_length(const ModulePres& p, int i);  // throws when infinite
  InvariantSet invariants(const ModulePres& p);
  Predicates predicates(const ModulePres& p);
  const BidualResult& bidual(const ModulePres& p);
  long long length(const ModulePres& p);  // finite length, throws otherwise
  bool is_zero(const ModulePres& p);

 private:
  std::map<std::string, ModulePres> minimal_;
  std::map<std::string, std::shared_ptr<ResolutionResult>> res_;
  std::map<std::string, long long> hdeg_;
  std::map<std::string, std::shared_ptr<BidualResult>> bidual_;
  std::map<std::string, IntLaurent> numerator_;
};

HilbertSeries hilbert_series(const ModulePres& p);
InvariantSet compute_invariants(const ModulePres& p);
long long hdeg(const ModulePres& p);
Predicates predicates(const ModulePres& p);
long long module_length(const ModulePres& p);

// h_i(M) = length of Ext^{d-i}(M,R); throws Errc::infinite_length when the
// requested h_i is not finite.
long long local_cohomology_length(const ModulePres& p, int i);
// All h_0..h_{d-1}; infinite entries come back as nullopt.
std::vector<std::optional<long long>> local_cohomology_lengths(const ModulePres& p);

// Ideal generated by all k x k minors.
Submodule minors_ideal(const GradedMatrix& m, int k);

}  // namespace ghom
