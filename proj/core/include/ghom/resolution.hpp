#pragma once

#include "ghom/presentation.hpp"

namespace ghom {

// Minimal graded free resolution: maps[k] is phi_{k+1} : F_{k+1} -> F_k, and
// consecutive maps compose to zero. Length is bounded by the variable count.
struct Resolution {
  FreeMod f0;
  std::vector<GradedMatrix> maps;
  int length() const { return static_cast<int>(maps.size()); }
};

struct BettiTable {
  std::vector<std::vector<int>> twists;  // twists[i]: sorted twists of F_i
  long long beta(int i) const {
    return i >= 0 && i < static_cast<int>(twists.size()) ? static_cast<long long>(twists[i].size())
                                                         : 0;
  }
  int pd() const;
  // max over the table of (twist - homological index); nullopt for the zero
  // module.
  std::optional<int> reg() const;
};

struct ResolutionResult {
  Resolution res;
  BettiTable betti;
};

ResolutionResult free_resolution(const ModulePres& p);

}  // namespace ghom
