#include <algorithm>

#include "ghom/resolution.hpp"

namespace ghom {

int BettiTable::pd() const {
  for (int i = static_cast<int>(twists.size()) - 1; i >= 0; --i)
    if (!twists[static_cast<size_t>(i)].empty()) return i;
  return 0;
}

std::optional<int> BettiTable::reg() const {
  std::optional<int> r;
  for (size_t i = 0; i < twists.size(); ++i)
    for (int t : twists[i]) {
      int v = t - static_cast<int>(i);
      if (!r || v > *r) r = v;
    }
  return r;
}

ResolutionResult free_resolution(const ModulePres& p) {
  ModulePres q = p.minimal ? p : minimalize(p);
  const Ring& R = q.phi.ring;

  Resolution res;
  res.f0 = q.phi.target;

  if (res.f0.rank() > 0 && q.phi.source.rank() > 0) {
    // Columns of a minimal presentation need not minimally generate the
    // relation module; refilter before resolving.
    auto g1 = min_generators(image_of(q.phi));
    if (!g1.empty()) {
      res.maps.push_back(mat_from_columns(R, res.f0, g1));
      while (true) {
        Submodule ker = kernel_of_map(res.maps.back());
        auto gens = min_generators(ker);
        if (gens.empty()) break;
        res.maps.push_back(mat_from_columns(R, res.maps.back().source, gens));
        if (res.length() > R.nvars())
          fail(Errc::internal, "resolution exceeds the global dimension");
      }
    }
  }

  BettiTable betti;
  betti.twists.push_back(res.f0.twists);
  for (const auto& m : res.maps) betti.twists.push_back(m.source.twists);
  for (auto& tw : betti.twists) std::sort(tw.begin(), tw.end());
  return ResolutionResult{std::move(res), std::move(betti)};
}

}  // namespace ghom
