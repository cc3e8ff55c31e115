#pragma once

#include <string>

#include <json.hpp>

#include "edgefair/allocation.hpp"
#include "edgefair/fairness.hpp"
#include "edgefair/instance.hpp"

namespace edgefair {

// JSON schemas are bit-exact (integers only):
//   instance:   { "agents": n, "edges": [{"id":k,"u":i,"v":j}, ...],
//                 "values": [{"agent":i,"edge":k,"num":p,"den":q}, ...] }
//   allocation: { "owner": {"<edge id>": agent, ...} }  (partial: omit keys)
// Omitted incident (agent, edge) pairs default to 0 (Dummy).

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json allocation_to_json(const Allocation& allocation);
Allocation allocation_from_json(const nlohmann::json& j, int edge_count);

nlohmann::json report_to_json(const ViolationReport& report);

Instance load_instance(const std::string& path);
Allocation load_allocation(const std::string& path, int edge_count);
void save_json(const std::string& path, const nlohmann::json& j);
nlohmann::json load_json(const std::string& path);

}  // namespace edgefair
