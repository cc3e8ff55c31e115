#pragma once

#include <memory>
#include <span>
#include <vector>

#include "edgefair/rational.hpp"
#include "edgefair/types.hpp"

namespace edgefair {

/// Valuation contract. Algorithms only ever query bundle values and
/// per-item sign classes, never additivity, except where a construction is
/// explicitly stated for additive valuations (the reduction compilers).
///
/// Implementations must be sign-consistent: adding a Good to any set
/// strictly increases its value, a Chore strictly decreases it, a Dummy
/// leaves it unchanged, and sign(a, e) == Dummy whenever a is not an
/// endpoint of e.
class Valuation {
 public:
  virtual ~Valuation() = default;

  virtual Value value(AgentId agent, std::span<const EdgeId> bundle) const = 0;
  virtual SignClass sign(AgentId agent, EdgeId edge) const = 0;
};

/// Additive valuation: a table of per-(agent, incident edge) values, the
/// only serializable implementation. Missing incident pairs default to 0.
class AdditiveValuation final : public Valuation {
 public:
  struct Entry {
    AgentId agent;
    EdgeId edge;
    Value value;
  };

  /// `n` agents, `m` edges; entries may appear in any order, at most one
  /// per (agent, edge) pair.
  AdditiveValuation(int n, int m, const std::vector<Entry>& entries);

  Value value(AgentId agent, std::span<const EdgeId> bundle) const override;
  SignClass sign(AgentId agent, EdgeId edge) const override;

  /// Single-item value; 0 for pairs without a table entry.
  const Value& item_value(AgentId agent, EdgeId edge) const;

  int agent_count() const { return n_; }
  int edge_count() const { return m_; }

  /// All explicitly stored entries in (agent, edge) order.
  std::vector<Entry> entries() const;

 private:
  int n_;
  int m_;
  // Dense rows: values_[agent * m_ + edge]. Sized n*m; instances in this
  // artifact stay small enough that the simplicity is worth the memory.
  std::vector<Value> values_;
  std::vector<bool> stored_;
};

}  // namespace edgefair
