#pragma once

#include <optional>
#include <set>
#include <vector>

#include "edgefair/allocation.hpp"
#include "edgefair/instance.hpp"
#include "edgefair/types.hpp"

namespace edgefair {

/// Which bundle the hypothetical removal that failed to cure the envy was
/// taken from. Envy means the pair envies with no removal condition at all
/// (used for plain EF violations).
enum class WitnessSide { Envy, EnviedBundle, OwnBundle };

struct Violation {
  AgentId envious;
  AgentId envied;
  WitnessSide side;
  std::optional<EdgeId> witness_edge;  // absent for plain-envy (EF) violations
};

/// Empty iff the allocation satisfies the checked notion. Witnesses are
/// enumerated in deterministic order: agent pairs lexicographic, edges
/// ascending, envied-bundle side before own-bundle side.
struct ViolationReport {
  Notion notion;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Full witness enumeration. Requires a total allocation (IncompleteAllocation).
ViolationReport check(const Instance& instance, const Allocation& allocation, Notion notion);

/// Early-exit variant of check() for search loops; same verdict.
bool passes(const Instance& instance, const Allocation& allocation, Notion notion);

bool is_envy_free(const Instance& instance, const Allocation& allocation);

/// Directed envy relation of a (partial) allocation, recomputable from
/// (instance, allocation): i envies j iff v_i(X_j) > v_i(X_i).
struct EnvyState {
  std::vector<std::vector<AgentId>> enviers;  // enviers[i]: agents envying i, ascending
  std::vector<std::vector<AgentId>> envied;   // envied[i]: agents i envies, ascending

  bool is_envied(AgentId a) const { return !enviers[static_cast<size_t>(a)].empty(); }
  int envied_by_count(AgentId a) const { return static_cast<int>(enviers[static_cast<size_t>(a)].size()); }
  std::vector<std::pair<AgentId, AgentId>> envy_pairs() const;  // (envious, envied), lexicographic
};

EnvyState compute_envy(const Instance& instance, const Allocation& allocation);

/// candidate is safe for protected_agent iff protected_agent would still not
/// envy candidate after candidate also took every unallocated edge that is a
/// non-chore for protected_agent:
///   v_p(X_p) >= v_p(X_c  ∪  (E_p^{>=0} ∩ R)).
bool safe_for(const Instance& instance, const Allocation& allocation, AgentId candidate,
              AgentId protected_agent);

/// The eight partial-allocation properties driving the mixed-manna
/// allocation algorithm:
///  (1) every agent values her bundle at least as much as any single
///      unallocated incident non-chore;
///  (2) every envied agent values her bundle at least as much as all her
///      unallocated incident non-chores together;
///  (3) for every two envied agents (ordered pairs and the diagonal) some
///      non-envied agent is safe for both;
///  (4) nobody holds an edge that is a chore for her;
///  (5) every envied agent holds exactly one edge;
///  (6) every envied agent has exactly one envier;
///  (7) the envy digraph is acyclic;
///  (8) on every envy path ending at a non-envied agent, every agent after
///      the start is safe for the start.
std::set<int> audit_properties(const Instance& instance, const Allocation& allocation);

/// Reverse-envy path a_{i0} <- a_{i1} <- ... <- a_{is}: agents[l] envies
/// agents[l-1]; the terminal agent is non-envied when produced by
/// find_envy_path.
struct EnvyPath {
  std::vector<AgentId> agents;

  AgentId terminal() const { return agents.back(); }
  int hops() const { return static_cast<int>(agents.size()) - 1; }
};

/// Follows enviers from `from` (smallest envier on ties) until a non-envied
/// agent is reached. Throws EnvyCycleDetected if the walk revisits an agent,
/// which signals a Property (7) violation.
EnvyPath find_envy_path(const Instance& instance, const Allocation& allocation, AgentId from);
EnvyPath find_envy_path(const Instance& instance, const Allocation& allocation,
                        const EnvyState& envy, AgentId from);

}  // namespace edgefair
