#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "edgefair/errors.hpp"
#include "edgefair/rational.hpp"
#include "edgefair/types.hpp"
#include "edgefair/valuation.hpp"

namespace edgefair {

enum class InstanceKind { Goods, Chores, Mixed };

/// Immutable problem instance: a simple graph whose vertices are agents and
/// whose edges are items, plus a valuation. Incident-edge lists and
/// per-agent sign buckets are cached at construction. Instances are safe to
/// share read-only across threads.
class Instance {
 public:
  Instance(int agent_count, std::vector<Edge> edges, std::shared_ptr<const Valuation> valuation);

  int agent_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }

  const Valuation& valuation() const { return *valuation_; }
  std::shared_ptr<const Valuation> valuation_ptr() const { return valuation_; }

  Value value(AgentId agent, std::span<const EdgeId> bundle) const {
    return valuation_->value(agent, bundle);
  }
  Value value_of(AgentId agent, EdgeId edge) const {
    return valuation_->value(agent, std::span<const EdgeId>(&edge, 1));
  }
  SignClass sign(AgentId agent, EdgeId edge) const { return valuation_->sign(agent, edge); }

  /// E_i: incident edges, ascending EdgeId.
  const std::vector<EdgeId>& incident(AgentId a) const { return incident_[static_cast<size_t>(a)]; }
  /// E_i^{>0}, E_i^{<0}, E_i^{=0}, E_i^{>=0}: sign buckets, ascending EdgeId.
  const std::vector<EdgeId>& goods_of(AgentId a) const { return goods_[static_cast<size_t>(a)]; }
  const std::vector<EdgeId>& chores_of(AgentId a) const { return chores_[static_cast<size_t>(a)]; }
  const std::vector<EdgeId>& dummies_of(AgentId a) const { return dummies_[static_cast<size_t>(a)]; }
  const std::vector<EdgeId>& nonchores_of(AgentId a) const { return nonchores_[static_cast<size_t>(a)]; }

  /// Edge between two agents, if present (the graph is simple, so it is unique).
  std::optional<EdgeId> edge_between(AgentId a, AgentId b) const;

  InstanceKind kind() const { return kind_; }
  bool is_goods() const { return kind_ == InstanceKind::Goods; }
  bool is_chores() const { return kind_ == InstanceKind::Chores; }

  /// True when every edge is a chore for both of its endpoints.
  bool all_edges_chore_for_both() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::shared_ptr<const Valuation> valuation_;
  std::vector<std::vector<EdgeId>> incident_, goods_, chores_, dummies_, nonchores_;
  InstanceKind kind_;
};

struct ValueEntry {
  AgentId agent;
  EdgeId edge;
  Value value;
};

/// Validating constructor used by deserialization, generators and tests.
/// Endpoint pairs are given in edge-id order; values only for incident pairs.
/// Throws SelfLoop, DuplicateEdge, NonIncidentValue, EmptyAgentSet.
Instance build_instance(int agent_count, const std::vector<std::pair<AgentId, AgentId>>& endpoints,
                        const std::vector<ValueEntry>& values);

InstanceKind classify(const Instance& instance);

const char* kind_name(InstanceKind k);

}  // namespace edgefair
