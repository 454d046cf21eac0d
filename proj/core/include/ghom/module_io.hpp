#pragma once

#include "ghom/invariants.hpp"

namespace ghom {

// Module file schema:
//   {"field":{"char":32003}, "variables":["x","y"],
//    "row_twists":[0,1], "matrix":[["x","y^2"],["0","x"]]}
// Column twists are inferred from row twists and entry degrees; inconsistent
// entries are rejected with their coordinates.
struct ParsedModule {
  Ring ring;
  ModulePres pres;  // validated and minimalized
  std::string source;
};

ParsedModule parse_module_json(const std::string& text, const std::string& source = "<string>");
ParsedModule parse_module_file(const std::string& path);

std::string emit_module_json(const ModulePres& p, const std::string& provenance = "");
void write_module_file(const std::string& path, const ModulePres& p,
                       const std::string& provenance = "");

std::string invariant_set_json(const InvariantSet& inv, const Ring& R);

}  // namespace ghom
