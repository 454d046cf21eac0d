#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ghom/module_io.hpp"

namespace ghom {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ParsedModule parse_module_json(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, source + ": " + e.what());
  }
  std::int64_t p = 32003;
  if (j.contains("field")) {
    if (!j["field"].is_object() || !j["field"].contains("char"))
      fail(Errc::parse_error, source + ": field must be an object with a char entry");
    p = j["field"]["char"].get<std::int64_t>();
  }
  if (!j.contains("variables") || !j["variables"].is_array())
    fail(Errc::parse_error, source + ": missing variables array");
  Ring R = make_ring(p, j["variables"].get<std::vector<std::string>>());

  if (!j.contains("row_twists") || !j["row_twists"].is_array())
    fail(Errc::parse_error, source + ": missing row_twists array");
  FreeMod target{j["row_twists"].get<std::vector<int>>()};

  if (!j.contains("matrix") || !j["matrix"].is_array())
    fail(Errc::parse_error, source + ": missing matrix array");
  const json& rows = j["matrix"];
  if (static_cast<int>(rows.size()) != target.rank())
    fail(Errc::parse_error, source + ": matrix row count does not match row_twists");

  int cols = -1;
  std::vector<std::vector<Poly>> entries(static_cast<size_t>(target.rank()));
  for (int i = 0; i < target.rank(); ++i) {
    const json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array()) fail(Errc::parse_error, source + ": matrix rows must be arrays");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols)
      fail(Errc::parse_error, source + ": ragged matrix rows");
    for (int k = 0; k < cols; ++k) {
      std::string cell = row[static_cast<size_t>(k)].get<std::string>();
      try {
        entries[static_cast<size_t>(i)].push_back(poly_parse(R, cell));
      } catch (const Error& e) {
        fail(Errc::parse_error, source + ": entry (" + std::to_string(i) + "," +
                                    std::to_string(k) + "): " + e.what());
      }
    }
  }
  if (cols < 0) cols = 0;

  // column twists are inferred from row twists plus entry degrees
  FreeMod src;
  src.twists.assign(static_cast<size_t>(cols), 0);
  for (int k = 0; k < cols; ++k) {
    bool seen = false;
    for (int i = 0; i < target.rank(); ++i) {
      const Poly& f = entries[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (f.is_zero()) continue;
      auto h = poly_homogeneity(f);
      if (!h.homogeneous)
        fail(Errc::homogeneity, source + ": entry (" + std::to_string(i) + "," +
                                    std::to_string(k) + ") is not homogeneous");
      int tw = h.degree + target.twists[static_cast<size_t>(i)];
      if (!seen) {
        src.twists[static_cast<size_t>(k)] = tw;
        seen = true;
      } else if (src.twists[static_cast<size_t>(k)] != tw) {
        fail(Errc::homogeneity, source + ": entry (" + std::to_string(i) + "," +
                                    std::to_string(k) + ") breaks the column twist");
      }
    }
  }

  ParsedModule out{R, minimalize(make_pres(mat_make(R, target, src, std::move(entries)))), source};
  return out;
}

ParsedModule parse_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open module file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_module_json(ss.str(), path);
}

std::string emit_module_json(const ModulePres& p, const std::string& provenance) {
  const Ring& R = p.phi.ring;
  ordered_json j;
  j["field"] = ordered_json{{"char", R.p}};
  j["variables"] = R.vars;
  j["row_twists"] = p.phi.target.twists;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < p.phi.target.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < p.phi.source.rank(); ++k)
      row.push_back(poly_to_string(R, p.phi.e[static_cast<size_t>(i)][static_cast<size_t>(k)]));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  ordered_json meta;
  meta["order"] = kOrderTag;
  if (!provenance.empty()) meta["provenance"] = provenance;
  j["meta"] = meta;
  return j.dump(2);
}

void write_module_file(const std::string& path, const ModulePres& p, const std::string& provenance) {
  std::ofstream out(path);
  if (!out) fail(Errc::bad_argument, "cannot write module file: " + path);
  out << emit_module_json(p, provenance) << "\n";
}

std::string invariant_set_json(const InvariantSet& inv, const Ring& R) {
  ordered_json j;
  j["deg"] = inv.deg;
  j["nu"] = inv.nu;
  j["alpha"] = inv.alpha;
  j["dim"] = inv.dim;
  j["depth"] = inv.depth;
  j["pd"] = inv.pd;
  if (inv.reg)
    j["reg"] = *inv.reg;
  else
    j["reg"] = nullptr;
  for (size_t i = 0; i < inv.h.size(); ++i) {
    std::string key = "h" + std::to_string(i);
    if (inv.h[i])
      j[key] = *inv.h[i];
    else
      j[key] = nullptr;
  }
  j["hdeg"] = inv.hdeg;
  ordered_json meta;
  meta["p"] = R.p;
  meta["variables"] = R.vars;
  meta["order"] = kOrderTag;
  j["meta"] = meta;
  return j.dump(2);
}

}  // namespace ghom
