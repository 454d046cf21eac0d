#pragma once

#include <string>
#include <vector>

#include "ghom/error.hpp"
#include "ghom/fp.hpp"

namespace ghom {

// Ring context F_p[vars] with the standard grading (every variable has
// degree 1). Every operation threads one of these; mixing contexts is an
// error, never a silent coercion.
struct Ring {
  std::int64_t p = 32003;
  std::vector<std::string> vars;

  int nvars() const { return static_cast<int>(vars.size()); }
  bool operator==(const Ring&) const = default;
};

Ring make_ring(std::int64_t p, std::vector<std::string> vars);

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) fail(Errc::ring_mismatch, "operands live in different ring contexts");
}

}  // namespace ghom
