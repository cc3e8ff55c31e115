#include "edgefair/instance.hpp"

#include <algorithm>
#include <set>

namespace edgefair {

Instance::Instance(int agent_count, std::vector<Edge> edges,
                   std::shared_ptr<const Valuation> valuation)
    : n_(agent_count), edges_(std::move(edges)), valuation_(std::move(valuation)) {
  if (n_ < 1) fail(Errc::EmptyAgentSet, "instance needs at least one agent");
  incident_.resize(static_cast<size_t>(n_));
  goods_.resize(static_cast<size_t>(n_));
  chores_.resize(static_cast<size_t>(n_));
  dummies_.resize(static_cast<size_t>(n_));
  nonchores_.resize(static_cast<size_t>(n_));

  for (const Edge& e : edges_) {
    for (AgentId a : {e.u, e.v}) {
      incident_[static_cast<size_t>(a)].push_back(e.id);
      switch (valuation_->sign(a, e.id)) {
        case SignClass::Good:
          goods_[static_cast<size_t>(a)].push_back(e.id);
          nonchores_[static_cast<size_t>(a)].push_back(e.id);
          break;
        case SignClass::Chore:
          chores_[static_cast<size_t>(a)].push_back(e.id);
          break;
        case SignClass::Dummy:
          dummies_[static_cast<size_t>(a)].push_back(e.id);
          nonchores_[static_cast<size_t>(a)].push_back(e.id);
          break;
      }
    }
  }
  for (auto* buckets : {&incident_, &goods_, &chores_, &dummies_, &nonchores_}) {
    for (auto& v : *buckets) std::sort(v.begin(), v.end());
  }

  bool any_chore = false, any_good = false;
  for (AgentId a = 0; a < n_; ++a) {
    any_chore = any_chore || !chores_[static_cast<size_t>(a)].empty();
    any_good = any_good || !goods_[static_cast<size_t>(a)].empty();
  }
  kind_ = !any_chore ? InstanceKind::Goods
                     : (!any_good ? InstanceKind::Chores : InstanceKind::Mixed);
}

std::optional<EdgeId> Instance::edge_between(AgentId a, AgentId b) const {
  const auto& ea = incident_[static_cast<size_t>(a)];
  for (EdgeId e : ea) {
    if (edges_[static_cast<size_t>(e)].incident(b)) return e;
  }
  return std::nullopt;
}

bool Instance::all_edges_chore_for_both() const {
  for (const Edge& e : edges_) {
    if (sign(e.u, e.id) != SignClass::Chore || sign(e.v, e.id) != SignClass::Chore) return false;
  }
  return true;
}

Instance build_instance(int agent_count, const std::vector<std::pair<AgentId, AgentId>>& endpoints,
                        const std::vector<ValueEntry>& values) {
  if (agent_count < 1) fail(Errc::EmptyAgentSet, "agent count must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(endpoints.size());
  std::set<std::pair<AgentId, AgentId>> seen;
  for (size_t k = 0; k < endpoints.size(); ++k) {
    AgentId u = endpoints[k].first, v = endpoints[k].second;
    if (u < 0 || u >= agent_count || v < 0 || v >= agent_count)
      fail(Errc::InvalidArgument, "edge endpoint out of range");
    if (u == v) fail(Errc::SelfLoop, "edge " + std::to_string(k) + " is a self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      fail(Errc::DuplicateEdge, "duplicate edge between agents " + std::to_string(u) + " and " +
                                    std::to_string(v));
    edges.push_back(Edge{static_cast<EdgeId>(k), u, v});
  }

  std::vector<AdditiveValuation::Entry> entries;
  entries.reserve(values.size());
  for (const ValueEntry& ve : values) {
    if (ve.edge < 0 || ve.edge >= static_cast<EdgeId>(edges.size()))
      fail(Errc::InvalidArgument, "value entry references unknown edge");
    if (!edges[static_cast<size_t>(ve.edge)].incident(ve.agent))
      fail(Errc::NonIncidentValue, "value entry for non-incident pair (agent " +
                                       std::to_string(ve.agent) + ", edge " +
                                       std::to_string(ve.edge) + ")");
    entries.push_back({ve.agent, ve.edge, ve.value});
  }

  auto valuation = std::make_shared<AdditiveValuation>(agent_count,
                                                       static_cast<int>(edges.size()), entries);
  return Instance(agent_count, std::move(edges), std::move(valuation));
}

InstanceKind classify(const Instance& instance) { return instance.kind(); }

const char* kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::Goods: return "goods";
    case InstanceKind::Chores: return "chores";
    case InstanceKind::Mixed: return "mixed";
  }
  return "?";
}

}  // namespace edgefair
