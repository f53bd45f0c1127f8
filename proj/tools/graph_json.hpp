#pragma once

#include <string>

#include <json.hpp>

#include "zptower/cover.hpp"
#include "zptower/graph.hpp"
#include "zptower/iwasawa.hpp"
#include "zptower/seal.hpp"

namespace zpt::io {

using Json = nlohmann::ordered_json;

struct GraphInput {
  Multigraph graph;
  RamificationData ramification;
  VoltageAssignment voltage;
};

// Throws InputError on malformed documents.
GraphInput parse_graph(const nlohmann::json& doc);
GraphInput parse_graph_text(const std::string& text);
GraphInput load_graph_file(const std::string& path);

Json graph_to_json(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a = {});
Json cover_to_json(const Multigraph& base, const CoverGraph& c);
Json decomposition_to_json(const Multigraph& g, const SegmentDecomposition& d);
Json failure_to_json(const NoDecomposition& f);
Json poly_to_json(const IntPoly& f);
Json laurent_to_json(const LaurentPoly& f);
Json triple_to_json(const InvariantTriple& t);
Json fit_to_json(const EmpiricalFit& f, const char* count_name);
Json verdict_to_json(const Verdict& v);

}  // namespace zpt::io
