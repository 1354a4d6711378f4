#pragma once

// JSON views of the library objects, and the sigma spec format used by the
// command line: {"word": [...], "reflections": [[...], ...], "nu": [...],
// "conjugate": [...]} meaning c (w r_1 r_2 ... nu) c^-1. Every key is optional.

#include <string>
#include <vector>

#include <json.hpp>

#include "liecascade/cascade.hpp"
#include "liecascade/certifier.hpp"
#include "liecascade/diagram.hpp"
#include "liecascade/error.hpp"
#include "liecascade/rootsys.hpp"
#include "liecascade/torusauto.hpp"
#include "liecascade/weyl.hpp"

namespace liecascade {

using Json = nlohmann::ordered_json;

inline Json to_json(const Root& r) { return Json(r.coeffs); }

inline Json to_json(const OrthoSet& s) {
  Json out = Json::array();
  for (const auto& r : s) out.push_back(to_json(r));
  return out;
}

inline Json to_json(const WeylWord& w) { return Json(w.letters); }

inline Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

inline Json to_json(const RootSystem& rs) {
  Json out;
  out["type"] = rs.type().name();
  out["cartan"] = to_json(rs.cartan());
  out["positives"] = to_json(OrthoSet(rs.positives().begin(), rs.positives().end()));
  return out;
}

inline Json to_json(const FoldingRecord& f) {
  Json out;
  out["source"] = f.source;
  out["fixed"] = f.fixed;
  out["source_type"] = f.source_type.name();
  out["order"] = f.order;
  out["fixed_type"] = f.fixed_type.name();
  return out;
}

inline Json to_json(const StarSweep& s) {
  Json out;
  out["checked"] = s.checked;
  out["skipped"] = s.skipped;
  out["failed"] = s.failed;
  return out;
}

inline Json to_json(const Certificate& c) {
  Json out;
  out["case_path"] = std::string(to_string(c.case_path));
  out["type"] = c.type;
  out["sigma1_inner"] = c.sigma1_inner;
  out["sigma2_inner"] = c.sigma2_inner;
  out["sigma2_order"] = c.sigma2_order;
  Json w;
  w["omega"] = to_json(c.omega);
  w["omega_normal_form"] = to_json(c.omega_normal_form);
  if (!c.nu_normal_form.empty()) w["nu_normal_form"] = c.nu_normal_form;
  if (c.property_star) w["property_star"] = *c.property_star;
  if (c.parity_even) w["parity_even"] = *c.parity_even;
  if (c.lift) w["lift"] = *c.lift;
  if (c.form_index) w["form_index"] = *c.form_index;
  Json ranks = Json::object();
  for (const auto& [k, v] : c.ranks) ranks[k] = v;
  w["ranks"] = ranks;
  out["witnesses"] = w;
  out["citations"] = c.citations;
  out["verdict"] = c.verdict;
  return out;
}

inline Json to_json(const AbelianSubgroup& h) {
  Json out;
  out["order"] = h.size();
  out["shape"] = shape_name(h);
  Json gens = Json::array();
  for (const auto& g : h.generators) gens.push_back({g.a, g.b});
  out["generators"] = gens;
  return out;
}

inline Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, what + ": " + e.what());
  }
}

inline Root root_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "a root must be an integer array");
  IntVec c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::ParseError, "root coordinates must be integers");
    c.push_back(x.get<Int>());
  }
  if (c.size() != rs.dim()) fail(ErrorCode::ShapeError, "root has " + std::to_string(c.size()) + " coordinates");
  Root r(std::move(c));
  rs.require_root(r, "set element");
  return r;
}

inline OrthoSet ortho_set_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "a set must be an array of roots");
  OrthoSet out;
  for (const auto& r : j) out.push_back(root_from_json(rs, r));
  return out;
}

inline std::vector<int> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, what + " must be an integer array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::ParseError, what + " must be an integer array");
    out.push_back(x.get<int>());
  }
  return out;
}

inline DiagramAut diagram_aut_from_json(const RootSystem& rs, const Json& j) {
  DiagramAut nu{int_list(j, "nu")};
  require_diagram_aut(rs, nu);
  return nu;
}

inline TorusAut torus_aut_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "an automorphism spec must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "word" && key != "reflections" && key != "nu" && key != "conjugate")
      fail(ErrorCode::ParseError, "unknown key '" + key + "' in automorphism spec");
  LatticeMap m = LatticeMap::identity(rs.dim());
  if (j.contains("word")) {
    WeylWord w{int_list(j["word"], "word")};
    validate_word(rs, w);
    m = compile(rs, w);
  }
  if (j.contains("reflections"))
    for (const auto& r : ortho_set_from_json(rs, j["reflections"])) m = m * reflection_matrix(rs, r);
  if (j.contains("nu")) m = m * induced_lattice_map(rs, diagram_aut_from_json(rs, j["nu"]));
  if (j.contains("conjugate")) {
    WeylWord c{int_list(j["conjugate"], "conjugate")};
    validate_word(rs, c);
    m = compile(rs, c) * m * compile(rs, inverse(c));
  }
  return torus_aut_from_matrix(rs, m);
}

}  // namespace liecascade
