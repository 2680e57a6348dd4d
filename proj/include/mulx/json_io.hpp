#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mulx/crystal.hpp"
#include "mulx/mullineux.hpp"
#include "mulx/partition.hpp"

namespace mulx {

// Wire formats: Partition = non-increasing array of positive integers;
// Multipartition = array of l such arrays; Multicharge =
// {"charges":[...], "e": k | "inf"}; CrystalGraph =
// {"layers":[[mp,...],...], "edges":[[source,residue,target],...]} with
// global vertex indices ("edges" only when the graph carries them).

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Multipartition& mp);
nlohmann::json to_json(const Multicharge& s);
nlohmann::json to_json(const CrystalGraph& graph);
nlohmann::json to_json(const MullineuxResult& result);
nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const Error& err);

Partition partition_from_json(const nlohmann::json& j);
Multipartition multipartition_from_json(const nlohmann::json& j);
Multicharge multicharge_from_json(const nlohmann::json& j);
std::vector<int> int_vector_from_json(const nlohmann::json& j);

/// Parses text as JSON, mapping syntax errors to malformed_input.
nlohmann::json parse_json(const std::string& text);

/// DOT export with each vertex labelled by its JSON form.
std::string to_dot(const CrystalGraph& graph);

}  // namespace mulx
