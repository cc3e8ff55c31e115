#pragma once

#include <optional>
#include <vector>

#include "edgefair/instance.hpp"
#include "edgefair/types.hpp"

namespace edgefair {

/// A (possibly partial) assignment of edges to agents. An orientation is an
/// allocation in which every assigned edge went to one of its endpoints;
/// is_orientation() checks that refinement. The unallocated set R is
/// everything without an owner.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(int edge_count) : owner_(static_cast<size_t>(edge_count), kFree) {}

  int edge_count() const { return static_cast<int>(owner_.size()); }

  std::optional<AgentId> owner(EdgeId e) const {
    int o = owner_[static_cast<size_t>(e)];
    if (o == kFree) return std::nullopt;
    return o;
  }
  bool allocated(EdgeId e) const { return owner_[static_cast<size_t>(e)] != kFree; }

  void assign(EdgeId e, AgentId a) { owner_[static_cast<size_t>(e)] = a; }
  void release(EdgeId e) { owner_[static_cast<size_t>(e)] = kFree; }

  bool is_total() const;
  /// R: unallocated edge ids, ascending.
  std::vector<EdgeId> unallocated() const;

  /// Bundles X_0..X_{n-1}; each bundle ascending by EdgeId.
  std::vector<std::vector<EdgeId>> bundles(int agent_count) const;
  std::vector<EdgeId> bundle_of(AgentId a) const;

  /// Every allocated edge is owned by one of its endpoints.
  bool is_orientation(const Instance& instance) const;

  bool operator==(const Allocation& other) const { return owner_ == other.owner_; }

 private:
  static constexpr int kFree = -1;
  std::vector<int> owner_;
};

/// Decision-procedure outcome: existence verdict plus a witness iff exists.
struct DecideResult {
  bool exists = false;
  std::optional<Allocation> witness;
};

}  // namespace edgefair
