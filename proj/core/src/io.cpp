#include "edgefair/io.hpp"

#include <fstream>
#include <sstream>

#include "edgefair/errors.hpp"

namespace edgefair {

using nlohmann::json;

json instance_to_json(const Instance& instance) {
  const auto* additive = dynamic_cast<const AdditiveValuation*>(&instance.valuation());
  if (!additive)
    fail(Errc::InvalidArgument, "only additive valuations are serializable");

  json edges = json::array();
  for (const Edge& e : instance.edges()) {
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  }
  json values = json::array();
  for (const auto& entry : additive->entries()) {
    values.push_back({{"agent", entry.agent},
                      {"edge", entry.edge},
                      {"num", entry.value.num()},
                      {"den", entry.value.den()}});
  }
  return json{{"agents", instance.agent_count()}, {"edges", edges}, {"values", values}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("agents") || !j.contains("edges"))
    fail(Errc::ParseError, "instance JSON needs 'agents' and 'edges'");
  int n = j.at("agents").get<int>();
  const json& edges = j.at("edges");
  std::vector<std::pair<AgentId, AgentId>> endpoints(edges.size(), {0, 0});
  std::vector<bool> seen(edges.size(), false);
  for (const json& je : edges) {
    int id = je.at("id").get<int>();
    if (id < 0 || id >= static_cast<int>(edges.size()) || seen[static_cast<size_t>(id)])
      fail(Errc::ParseError, "edge ids must be dense 0..m-1");
    seen[static_cast<size_t>(id)] = true;
    endpoints[static_cast<size_t>(id)] = {je.at("u").get<int>(), je.at("v").get<int>()};
  }
  std::vector<ValueEntry> values;
  if (j.contains("values")) {
    for (const json& jv : j.at("values")) {
      long long num = jv.at("num").get<long long>();
      long long den = jv.contains("den") ? jv.at("den").get<long long>() : 1;
      values.push_back({jv.at("agent").get<int>(), jv.at("edge").get<int>(), Value(num, den)});
    }
  }
  return build_instance(n, endpoints, values);
}

json allocation_to_json(const Allocation& allocation) {
  json owner = json::object();
  for (EdgeId e = 0; e < allocation.edge_count(); ++e) {
    if (auto a = allocation.owner(e)) owner[std::to_string(e)] = *a;
  }
  return json{{"owner", owner}};
}

Allocation allocation_from_json(const json& j, int edge_count) {
  Allocation alloc(edge_count);
  if (!j.is_object() || !j.contains("owner"))
    fail(Errc::ParseError, "allocation JSON needs an 'owner' object");
  for (const auto& [key, val] : j.at("owner").items()) {
    int e = 0;
    try {
      e = std::stoi(key);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "allocation owner key is not an edge id: " + key);
    }
    if (e < 0 || e >= edge_count) fail(Errc::ParseError, "allocation references unknown edge " + key);
    alloc.assign(e, val.get<int>());
  }
  return alloc;
}

json report_to_json(const ViolationReport& report) {
  json out;
  out["notion"] = notion_name(report.notion);
  out["ok"] = report.ok();
  json violations = json::array();
  for (const Violation& v : report.violations) {
    json jv{{"envious", v.envious}, {"envied", v.envied}};
    switch (v.side) {
      case WitnessSide::Envy: jv["side"] = "envy"; break;
      case WitnessSide::EnviedBundle: jv["side"] = "envied_bundle"; break;
      case WitnessSide::OwnBundle: jv["side"] = "own_bundle"; break;
    }
    if (v.witness_edge) jv["edge"] = *v.witness_edge;
    violations.push_back(jv);
  }
  out["violations"] = violations;
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
  return j;
}

Instance load_instance(const std::string& path) { return instance_from_json(load_json(path)); }

Allocation load_allocation(const std::string& path, int edge_count) {
  return allocation_from_json(load_json(path), edge_count);
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace edgefair
