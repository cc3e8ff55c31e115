#pragma once

#include <cstdint>

#include "edgefair/allocation.hpp"
#include "edgefair/fairness.hpp"
#include "edgefair/instance.hpp"

namespace edgefair {

enum class SearchMode { Allocations, Orientations };

/// Exhaustive-search request. States are owner vectors enumerated in
/// mixed-radix order (edge 0 most significant); the verdict, witness and
/// count are independent of `jobs`.
struct SearchSpec {
  SearchMode mode = SearchMode::Allocations;
  Notion notion = Notion::Efx00;
  std::uint64_t budget = 20'000'000;
  int jobs = 1;
};

/// Ground truth by enumeration: exists iff some assignment passes the
/// checker; the witness is the first passing state in canonical order.
/// Throws BudgetExceeded when the state count is over budget.
DecideResult oracle_exists(const Instance& instance, const SearchSpec& spec);

/// Number of passing states.
std::uint64_t oracle_count(const Instance& instance, const SearchSpec& spec);

/// State count n^m or 2^m, saturating at 2^63-1.
std::uint64_t oracle_state_count(const Instance& instance, SearchMode mode);

}  // namespace edgefair
