#pragma once

#include <vector>

#include "edgefair/allocation.hpp"
#include "edgefair/instance.hpp"

namespace edgefair {

/// Goods instances: every orientation is EFX-plus, so each edge goes to its
/// lower-indexed endpoint (the arbitrary choice, fixed for determinism).
/// Throws NotGoodsInstance.
Allocation goods_efxplus_orientation(const Instance& instance);

/// Goods instances: an EFX-0 allocation. Realized by the general mixed-manna
/// solver, whose own-bundle condition is vacuous on goods instances.
/// Throws NotGoodsInstance.
Allocation goods_efx0_allocation(const Instance& instance);

/// Chores instances, n >= 3: each edge to the smallest agent that is not an
/// endpoint; the result is envy-free. Throws NotChoresInstance, and
/// TooFewAgents when n <= 2 and at least one edge exists (no non-endpoint
/// agent is available, and EF itself can be impossible there).
Allocation chores_ef_allocation(const Instance& instance);

/// Decides whether a chores instance admits an EFX-minus orientation.
/// Prunes edges that are dummies for an endpoint; existence holds iff every
/// pruned component has at most as many edges as vertices, and the witness
/// gives each pruned-component agent at most one edge. Throws NotChoresInstance.
DecideResult chores_efxminus_orientation(const Instance& instance);

/// Decides whether a chores instance admits an EFX-0 orientation, by the
/// push-based maximal-orientation procedure. Throws NotChoresInstance.
DecideResult chores_efx0_orientation(const Instance& instance);

/// Outcome of one push attempt. When flag is true the partial orientation
/// became maximal with respect to `touched` (every edge incident to a
/// touched agent is now owned inside `touched`) and agents outside it were
/// not modified.
struct PushOutcome {
  bool flag = false;
  Allocation orientation;
  std::vector<AgentId> touched;   // U, ascending
  std::vector<EdgeId> remaining;  // R after the push, ascending
};

/// Push edge e to `target` (an endpoint): fails iff target already owns
/// anything; otherwise target takes e (plus, when e is a dummy for her, all
/// her remaining dummies), and every remaining incident edge of target is
/// recursively pushed to its other endpoint.
PushOutcome push(const Instance& instance, const Allocation& orientation, EdgeId e, AgentId target,
                 const std::vector<EdgeId>& remaining);

}  // namespace edgefair
