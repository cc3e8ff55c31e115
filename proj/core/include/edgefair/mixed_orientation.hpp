#pragma once

#include "edgefair/allocation.hpp"
#include "edgefair/instance.hpp"

namespace edgefair {

/// Trees: EFX-plus-0 orientation via BFS layering from `root`. The root
/// takes her goods; every deeper agent takes her parent edge (if still
/// unallocated) plus her unallocated goods. Throws NotATree.
Allocation tree_efxplus0_orientation(const Instance& instance, AgentId root = 0);

/// Stars: decides EFX-00 / EFX-0-minus orientation existence by checking the
/// forced orientation (chores-for-satellite to the center, goods-for-satellite
/// to the satellites, dummies by the center's preference). Throws NotAStar,
/// InvalidArgument for other notions.
DecideResult star_efx00_decide(const Instance& instance, Notion notion);

/// Paths where every edge is a good for both endpoints or a chore for both:
/// decides EFX-0-minus (equivalently EFX-00) orientation existence by the
/// chore-neighborhood pattern analysis with forced-segment recursion.
/// Throws NotAPath, UnsupportedSignPattern.
DecideResult path_efx0minus_decide(const Instance& instance);

/// Shape probes used for CLI dispatch.
bool is_tree(const Instance& instance);
bool is_star(const Instance& instance);
bool is_path(const Instance& instance);

}  // namespace edgefair
