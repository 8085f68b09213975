#ifndef SDNCC_PLACEMENT_SEARCH_HPP
#define SDNCC_PLACEMENT_SEARCH_HPP

#include <vector>

#include "sdncc/capacity_alloc.hpp"
#include "sdncc/cost_model.hpp"
#include "sdncc/server_select.hpp"
#include "sdncc/util.hpp"

namespace sdncc {

struct SearchOptions {
  SelectMode mode = SelectMode::lp;
  bool nearest_shortcut = true;
  BigInt budget = 1000000;
  // Accept zero-copy counts (service hosted at the origin only). Off by
  // default: a requested count of zero is rejected as a bound violation.
  bool allow_zero_copies = false;
  int threads = 0;  // 0: hardware concurrency
};

// Candidate space: per service, the eligible node set and the number of
// copies to place. One extra origin-only candidate is always enumerated
// after the cartesian product.
struct SearchSpace {
  std::vector<std::vector<NodeId>> candidates;  // per service (contents then computations)
  std::vector<int> copy_counts;                 // per service
  BigInt q = 1;                                 // product of binomials, exact
};

// Builds the space from rounded copy counts, throwing BudgetExceeded when
// the candidate count q passes options.budget. Counts are clamped down to
// the candidate-set size.
SearchSpace enumerate_space(const CopyAllocation& counts, const Topology& topo,
                            const ServiceCatalog& catalog, const SearchOptions& options = {});

// Materializes candidate number `rank` (0-based over the cartesian product,
// q itself addressing the origin-only placement).
Placement candidate_placement(const SearchSpace& space, const Instance& instance, BigInt rank);

struct SearchResult {
  Placement placement;
  SelectionSolution selection;
  CostBreakdown cost;
  long evaluated = 0;
  long capacity_infeasible = 0;
  long link_infeasible = 0;
  BigInt q = 1;
};

// Evaluates every candidate (selection solve + full cost), returning the
// cheapest; ties go to the earliest enumeration rank. Candidate evaluation
// runs on a thread pool with a deterministic (cost, rank) reduction.
SearchResult exhaustive_search(const SearchSpace& space, const Instance& instance,
                               const SearchOptions& options = {});

// Places each service's copies one node at a time, always picking the node
// that lowers the running cost most under nearest-server selection, then
// solves one final selection over the assembled placement. Services are
// processed in catalog order and share the capacity bookkeeping.
SearchResult greedy_placement(const CopyAllocation& counts, const Instance& instance,
                              const SearchOptions& options = {});

// Every request served by the origin; no in-network copies.
SearchResult baseline_origin(const Instance& instance);

}  // namespace sdncc

#endif
