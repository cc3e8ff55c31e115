#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "edgefair/allocation.hpp"
#include "edgefair/fairness.hpp"
#include "edgefair/instance.hpp"

namespace edgefair {

/// One step of the mixed-manna solver, for debugging and verification.
/// `owners` is the full owner vector after the step (-1 = unallocated), so a
/// trace consumer can re-audit every intermediate state independently.
struct TraceStep {
  std::string op;               // initial | repair2 | repair3 | repair8 | part2_g1 | ...
  std::vector<AgentId> agents;  // agents whose bundles changed
  std::vector<int> owners;
  std::set<int> audit;          // audit_properties after the step
};

using TraceSink = std::function<void(const TraceStep&)>;

/// Partial orientation state between the two parts of the EFX-0-minus
/// allocation algorithm.
struct Part1State {
  Allocation orientation;

  std::vector<EdgeId> remaining(const Instance& instance) const {
    (void)instance;
    return orientation.unallocated();
  }
};

/// Chain process: an unserved agent picks her most valuable unallocated
/// incident non-chore (ties to the smallest EdgeId), then the picked edge's
/// other endpoint picks next. Result satisfies Properties (1), (4)-(7).
Part1State initial_orientation(const Instance& instance, const TraceSink& trace = nullptr);

/// Property (2) repair: an envied agent preferring her unallocated
/// non-chores swaps her bundle for them; agents preferring a single released
/// edge upgrade until stable. Result satisfies Properties (1)-(7).
void repair_property2(const Instance& instance, Part1State& state, const TraceSink& trace = nullptr);

/// Property (3) repair: resolves the smallest violating envied pair via the
/// three-case envy-path rotation analysis; may leave Property (2) broken
/// (it is repaired by the scheduler next). Throws PreconditionViolated.
void repair_property3(const Instance& instance, Part1State& state, const TraceSink& trace = nullptr);

/// Property (8) repair: the only possible violation shape is a path terminal
/// holding the edge back to the path start while unsafe for it; rotate that
/// path. Throws PreconditionViolated.
void repair_property8(const Instance& instance, Part1State& state, const TraceSink& trace = nullptr);

/// Part 1: initial orientation, then repair the lowest-numbered violated
/// property until all eight hold. The result is a partial EFX-0-minus
/// orientation. Throws NonTermination if the iteration cap 4nm is hit
/// (unreachable by construction).
Part1State part1(const Instance& instance, const TraceSink& trace = nullptr);

/// Part 2: allocates the remaining edges by the G1-G4 group rules, keeping
/// every property and returning a total EFX-0-minus allocation.
Allocation part2(const Instance& instance, const Part1State& state, const TraceSink& trace = nullptr);

/// An EFX-0-minus allocation: part2(part1(instance)). Always exists.
Allocation efx0minus_allocation(const Instance& instance, const TraceSink& trace = nullptr);

/// An EFX-plus-0 allocation. Always exists: pure chore-for-both instances
/// route to the envy-free chores allocation (n >= 3) or the one-chore
/// assignment (n <= 2); otherwise the two-case direct construction.
Allocation efxplus0_allocation(const Instance& instance);

/// An EFX-plus-minus allocation, by delegation to efxplus0_allocation.
Allocation efxplusminus_allocation(const Instance& instance);

/// Exact EFX-00 existence by exhaustive search (the notion is NP-hard to
/// decide, so no polynomial solver is shipped). Throws BudgetExceeded.
DecideResult efx00_allocation_bruteforce(const Instance& instance,
                                         std::uint64_t budget = 20'000'000);

}  // namespace edgefair
