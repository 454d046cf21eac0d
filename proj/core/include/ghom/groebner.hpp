#pragma once

#include <memory>
#include <optional>

#include "ghom/graded_matrix.hpp"

namespace ghom {

inline constexpr const char* kMonomialOrder = "grevlex";
inline constexpr const char* kModuleOrder = "position-over-term";
inline constexpr const char* kOrderTag = "grevlex/POT";

// Homogeneous submodule of a graded free module, given by generators.
struct Submodule {
  Ring ring;
  FreeMod ambient;
  std::vector<ModuleVec> gens;
};

// Validates that every generator is homogeneous and fits the ambient.
Submodule submodule(Ring R, FreeMod ambient, std::vector<ModuleVec> gens);
Submodule submodule_from_ideal(const Ring& R, const std::vector<Poly>& gens);
Submodule image_of(const GradedMatrix& m);

// Reduced Groebner basis for grevlex / position-over-term: elements monic,
// tails fully reduced, canonically ordered. Unique for a fixed order.
struct GroebnerBasis {
  Ring ring;
  FreeMod ambient;
  std::vector<ModuleVec> g;
};

GroebnerBasis buchberger(const Submodule& s);
ModuleVec normal_form(const ModuleVec& v, const GroebnerBasis& gb);
bool gb_contains(const GroebnerBasis& gb, const ModuleVec& v);

// Relations among the generators, in a free module with one basis element per
// generator, twisted by that generator's degree.
Submodule syzygies(const Submodule& s);
Submodule kernel_of_map(const GradedMatrix& m);

enum class ColonMode { colon, saturate };
Submodule colon(const Submodule& l, const std::vector<Poly>& ideal_gens);
// (l : ideal^∞), by iterating colon until the reduced Groebner basis is stable.
Submodule saturate(const Submodule& l, const std::vector<Poly>& ideal_gens);
Submodule colon_and_saturate(const Submodule& l, const std::vector<Poly>& ideal_gens, ColonMode mode);
Submodule intersect(const Submodule& a, const Submodule& b);

bool submodule_eq(const Submodule& a, const Submodule& b);

// Minimal homogeneous generating set, filtered degree by degree.
std::vector<ModuleVec> min_generators(const Submodule& s);

// v = sum coeffs[i]*gens[i]; nullopt when v lies outside the span.
std::optional<std::vector<Poly>> lift_through(const Submodule& s, const ModuleVec& v);

// Groebner data for a fixed generator list with representation tracking:
// exposes the relations among the generators and division with witness, from
// a single completion run.
class TrackedSubmodule {
 public:
  explicit TrackedSubmodule(Submodule s);
  ~TrackedSubmodule();
  TrackedSubmodule(TrackedSubmodule&&) noexcept;
  TrackedSubmodule& operator=(TrackedSubmodule&&) noexcept;

  const Submodule& input() const;
  // Generators of the relation module, in a free module with one basis
  // element per input generator.
  const std::vector<ModuleVec>& syzygy_gens() const;
  const FreeMod& syzygy_ambient() const;
  // remainder r and witness w with v = r + sum w_i * gens_i
  std::pair<ModuleVec, std::vector<Poly>> reduce(const ModuleVec& v) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ghom
