#include "gallai/report.hpp"

#include "gallai/error.hpp"

namespace gallai {

namespace {

std::vector<Vertex> vertices_from(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) throw Error(ErrorCode::ParseError, std::string("missing array '") + field + "'");
  return j.at(field).get<std::vector<Vertex>>();
}

std::optional<VertexPath> path_from(const Json& j, const char* field) {
  if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
  return VertexPath(vertices_from(j, field));
}

}  // namespace

Json to_json(const VertexPath& p) { return p.vertices(); }

Json to_json(const LongestPathReport& r, bool with_paths) {
  Json j{{"length", r.length}, {"path_count", r.path_count()}, {"intersection", r.intersection_vertices()}};
  if (with_paths) {
    Json paths = Json::array();
    for (const auto& p : r.paths) paths.push_back(to_json(p));
    j["paths"] = std::move(paths);
  }
  return j;
}

Json to_json(const GallaiVerdict& v) {
  Json j{{"verdict", v.kind == GallaiVerdict::Kind::HasCommonVertex ? "HasCommonVertex" : "Empty"},
         {"length", v.length},
         {"intersection", v.intersection}};
  if (v.kind == GallaiVerdict::Kind::Empty) {
    Json w = Json::array();
    for (const auto& p : v.witness) w.push_back(to_json(p));
    j["witness"] = std::move(w);
  }
  return j;
}

Json to_json(const KTupleVerdict& v) {
  Json j{{"verdict", v.kind == KTupleVerdict::Kind::AllKTuplesIntersect ? "AllKTuplesIntersect" : "CounterTuple"},
         {"distinct_vertex_sets", v.distinct_vertex_sets},
         {"tuples_checked", v.tuples_checked}};
  if (v.kind == KTupleVerdict::Kind::CounterTuple) {
    Json t = Json::array();
    for (const auto& p : v.tuple) t.push_back(to_json(p));
    j["tuple"] = std::move(t);
  }
  return j;
}

Json to_json(const BlockCutTree& t) {
  return Json{{"blocks", t.blocks()}, {"cutvertices", t.cutvertices()}, {"tree_adjacency", t.tree_adjacency()}};
}

Json to_json(const HamiltonicityVerdict& v) {
  Json j{{"hamiltonian", v.hamiltonian}, {"traceable", v.traceable}};
  j["cycle"] = v.cycle ? Json(*v.cycle) : Json(nullptr);
  j["path"] = v.path ? to_json(*v.path) : Json(nullptr);
  return j;
}

Json to_json(const CombDecomposition& d) {
  return Json{{"base", d.base}, {"leaves", d.leaves}, {"anchors", d.anchors}};
}

CombDecomposition comb_from_json(const Json& j) {
  try {
    return {j.at("base").get<std::vector<Vertex>>(), j.at("leaves").get<std::vector<std::vector<Vertex>>>(),
            j.at("anchors").get<std::vector<std::vector<Vertex>>>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("comb decomposition: ") + e.what());
  }
}

Json to_json(const ClaimReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims)
    claims.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return Json{{"block", r.block},
              {"case", to_string(r.proof_case)},
              {"deficient_paths", r.deficient_paths},
              {"all_pass", r.all_pass()},
              {"claims", std::move(claims)}};
}

Json to_json(const Certificate& c) {
  const CertificateEvidence& ev = c.evidence;
  Json evidence = Json::object();
  if (ev.hamiltonian_path) evidence["hamiltonian_path"] = to_json(*ev.hamiltonian_path);
  if (ev.comb) evidence["comb"] = to_json(*ev.comb);
  if (ev.cutvertex) evidence["cutvertex"] = *ev.cutvertex;
  if (!ev.block.empty()) evidence["block"] = ev.block;
  if (!ev.subcase.empty()) evidence["subcase"] = ev.subcase;
  if (!ev.attachments.empty()) evidence["attachments"] = ev.attachments;
  if (!ev.neighborhood_intersection.empty()) evidence["neighborhood_intersection"] = ev.neighborhood_intersection;
  if (ev.short_path) evidence["short_path"] = to_json(*ev.short_path);
  return Json{{"schema", kReportSchema},
              {"vertex", c.vertex},
              {"route", to_string(c.route)},
              {"pair", std::string("K1_3:") + std::string(to_string(c.pair))},
              {"graph6", c.graph6},
              {"evidence", std::move(evidence)}};
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate c;
    c.vertex = j.at("vertex").get<Vertex>();
    c.route = parse_certificate_route(j.at("route").get<std::string>());
    std::string pair = j.at("pair").get<std::string>();
    if (pair.starts_with("K1_3:")) pair = pair.substr(5);
    c.pair = parse_pattern_name(pair);
    c.graph6 = j.value("graph6", "");
    const Json& ev = j.at("evidence");
    c.evidence.hamiltonian_path = path_from(ev, "hamiltonian_path");
    c.evidence.short_path = path_from(ev, "short_path");
    if (ev.contains("comb")) c.evidence.comb = comb_from_json(ev.at("comb"));
    if (ev.contains("cutvertex")) c.evidence.cutvertex = ev.at("cutvertex").get<Vertex>();
    if (ev.contains("block")) c.evidence.block = vertices_from(ev, "block");
    c.evidence.subcase = ev.value("subcase", "");
    if (ev.contains("attachments")) c.evidence.attachments = vertices_from(ev, "attachments");
    if (ev.contains("neighborhood_intersection"))
      c.evidence.neighborhood_intersection = vertices_from(ev, "neighborhood_intersection");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate: ") + e.what());
  }
}

}  // namespace gallai
