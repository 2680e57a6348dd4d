#include "mulx/json_io.hpp"

namespace mulx {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const Multipartition& mp) {
  json out = json::array();
  for (const Partition& p : mp.components()) out.push_back(to_json(p));
  return out;
}

json to_json(const Multicharge& s) {
  json out;
  out["charges"] = s.charges;
  if (s.e.is_finite()) {
    out["e"] = s.e.value();
  } else {
    out["e"] = "inf";
  }
  return out;
}

json to_json(const CrystalGraph& graph) {
  json layers = json::array();
  for (const auto& layer : graph.layers) {
    json row = json::array();
    for (const Multipartition& mp : layer) row.push_back(to_json(mp));
    layers.push_back(std::move(row));
  }
  json out;
  out["layers"] = std::move(layers);
  if (graph.with_edges) {
    json edges = json::array();
    for (const CrystalEdge& e : graph.edges)
      edges.push_back(json::array({e.source, e.residue, e.target}));
    out["edges"] = std::move(edges);
  }
  return out;
}

json to_json(const MullineuxResult& result) {
  json trace = json::array();
  for (const TraceStage& stage : result.trace) {
    json row;
    row["stage"] = stage.name;
    row["charges"] = stage.charge.charges;
    row["mp"] = to_json(stage.mp);
    trace.push_back(std::move(row));
  }
  json out;
  out["image"] = to_json(result.image);
  out["source_class"] = result.source_class;
  out["target_class"] = result.target_class;
  out["exponents"] = result.exponents;
  out["eta"] = eta_display(result.exponents, static_cast<int>(result.source_class.size()));
  out["trace"] = std::move(trace);
  return out;
}

json to_json(const SweepReport& report) {
  json mismatches = json::array();
  for (const SweepMismatch& m : report.mismatches) {
    json row;
    row["charge_class"] = m.charge_class;
    row["mp"] = to_json(m.mp);
    row["pipeline"] = to_json(m.pipeline);
    row["oracle"] = to_json(m.oracle);
    mismatches.push_back(std::move(row));
  }
  json out;
  out["level"] = report.level;
  out["e"] = report.e;
  out["n_max"] = report.n_max;
  out["classes"] = report.classes;
  out["vertices"] = report.vertices;
  out["mismatches"] = std::move(mismatches);
  out["involution_failures"] = report.involution_failures;
  out["membership_failures"] = report.membership_failures;
  out["component_stage_failures"] = report.component_stage_failures;
  out["seconds"] = report.seconds;
  out["ok"] = report.ok();
  return out;
}

json to_json(const Error& err) {
  json inner;
  inner["code"] = std::string(to_string(err.code()));
  inner["message"] = err.what();
  if (err.detail() >= 0) inner["detail"] = err.detail();
  json out;
  out["error"] = std::move(inner);
  return out;
}

std::string_view to_string(errc code) {
  switch (code) {
    case errc::malformed_input: return "MalformedInput";
    case errc::parse_error: return "ParseError";
    case errc::not_regular: return "NotRegular";
    case errc::not_regular_component: return "NotRegularComponent";
    case errc::not_kleshchev: return "NotKleshchev";
    case errc::not_in_crystal: return "NotInCrystal";
    case errc::dead_end: return "DeadEnd";
    case errc::invalid_m: return "InvalidM";
    case errc::not_a_symbol: return "NotASymbol";
    case errc::match_exhausted: return "MatchExhausted";
    case errc::no_stabilization: return "NoStabilization";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::resource_limit: return "ResourceLimit";
  }
  return "Unknown";
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) fail(errc::malformed_input, "partition must be a JSON array");
  std::vector<int> parts;
  parts.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(errc::malformed_input, "partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

Multipartition multipartition_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    fail(errc::malformed_input, "multipartition must be a non-empty JSON array of arrays");
  std::vector<Partition> comps;
  comps.reserve(j.size());
  for (const auto& v : j) comps.push_back(partition_from_json(v));
  return Multipartition(std::move(comps));
}

std::vector<int> int_vector_from_json(const json& j) {
  if (!j.is_array()) fail(errc::malformed_input, "expected a JSON array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(errc::malformed_input, "expected integer entries");
    out.push_back(v.get<int>());
  }
  return out;
}

Multicharge multicharge_from_json(const json& j) {
  if (!j.is_object() || !j.contains("charges") || !j.contains("e"))
    fail(errc::malformed_input, "multicharge must be {\"charges\":[...],\"e\":k|\"inf\"}");
  Multicharge out;
  out.charges = int_vector_from_json(j["charges"]);
  if (out.charges.empty()) fail(errc::malformed_input, "empty multicharge");
  if (j["e"].is_string()) {
    if (j["e"].get<std::string>() != "inf") fail(errc::malformed_input, "e must be an integer or \"inf\"");
    out.e = Modulus::infinity();
  } else if (j["e"].is_number_integer()) {
    out.e = Modulus::finite(j["e"].get<int>());
  } else {
    fail(errc::malformed_input, "e must be an integer or \"inf\"");
  }
  return out;
}

json parse_json(const std::string& text) {
  json out = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (out.is_discarded()) fail(errc::malformed_input, "invalid JSON: " + text);
  return out;
}

std::string to_dot(const CrystalGraph& graph) {
  return to_dot(graph, [](const Multipartition& mp) { return to_json(mp).dump(); });
}

}  // namespace mulx
