#include "sdncc/placement_search.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <thread>

#include "sdncc/errors.hpp"

namespace sdncc {

namespace {

std::vector<NodeId> service_candidates(const Topology& topo, const ServiceCatalog& catalog, int k) {
  return catalog.is_content(k) ? topo.caching_nodes() : topo.computing_nodes();
}

}  // namespace

SearchSpace enumerate_space(const CopyAllocation& counts, const Topology& topo,
                            const ServiceCatalog& catalog, const SearchOptions& options) {
  if (static_cast<int>(counts.contents.size()) != catalog.f1() ||
      static_cast<int>(counts.computations.size()) != catalog.f2())
    throw InvalidSpec("copy allocation does not match the catalog");

  SearchSpace space;
  for (int k = 0; k < catalog.service_count(); ++k) {
    std::vector<NodeId> candidates = service_candidates(topo, catalog, k);
    std::sort(candidates.begin(), candidates.end());
    int requested = catalog.is_content(k)
                        ? counts.contents[static_cast<size_t>(k)].rounded
                        : counts.computations[static_cast<size_t>(k - catalog.f1())].rounded;
    int copies = std::min(requested, static_cast<int>(candidates.size()));
    if (copies < 1 && !(options.allow_zero_copies && copies == 0))
      throw InvalidSpec("copy count for " + catalog.service_id(k) +
                        " must be in 1..candidate-set size");
    space.q *= binomial(static_cast<int>(candidates.size()), copies);
    space.candidates.push_back(std::move(candidates));
    space.copy_counts.push_back(copies);
  }
  if (space.q > options.budget)
    throw BudgetExceeded("candidate count " + space.q.str() + " exceeds budget " +
                         options.budget.str());
  return space;
}

Placement candidate_placement(const SearchSpace& space, const Instance& instance, BigInt rank) {
  Placement placement(instance.topo, instance.catalog);
  if (rank == space.q) return placement;  // appended origin-only candidate
  // Mixed-radix decode, last service fastest.
  for (int k = static_cast<int>(space.candidates.size()) - 1; k >= 0; --k) {
    const std::vector<NodeId>& candidates = space.candidates[static_cast<size_t>(k)];
    int copies = space.copy_counts[static_cast<size_t>(k)];
    BigInt radix = binomial(static_cast<int>(candidates.size()), copies);
    BigInt digit = rank % radix;
    rank /= radix;
    for (int pos : unrank_combination(static_cast<int>(candidates.size()), copies, digit))
      placement.add(candidates[static_cast<size_t>(pos)], k);
  }
  return placement;
}

namespace {

struct Candidate {
  double cost = std::numeric_limits<double>::infinity();
  BigInt rank = -1;
  long capacity_infeasible = 0;
  long link_infeasible = 0;
};

CostBreakdown assemble_cost(const Instance& instance, const Placement& placement,
                            const SelectionSolution& solution) {
  return total_cost(placement, solution.selection, instance.catalog, instance.demand,
                    instance.dist, instance.params);
}

}  // namespace

SearchResult exhaustive_search(const SearchSpace& space, const Instance& instance,
                               const SearchOptions& options) {
  const long total = static_cast<long>(space.q) + 1;  // + origin-only
  SolveOptions solve_options{options.mode, options.nearest_shortcut};

  auto evaluate_range = [&](long begin, long end) {
    Candidate best;
    for (long rank = begin; rank < end; ++rank) {
      Placement placement = candidate_placement(space, instance, rank);
      if (!placement_feasible(placement, instance.topo, instance.catalog)) {
        ++best.capacity_infeasible;
        continue;
      }
      SelectionProblem problem{&instance, &placement};
      SelectionSolution solution = solve_selection(problem, solve_options);
      if (solution.status != SelectStatus::optimal) {
        ++best.link_infeasible;
        continue;
      }
      double cost = assemble_cost(instance, placement, solution).total;
      if (cost < best.cost || (cost == best.cost && BigInt(rank) < best.rank)) {
        best.cost = cost;
        best.rank = rank;
      }
    }
    return best;
  };

  long threads = options.threads > 0 ? options.threads
                                     : static_cast<long>(std::thread::hardware_concurrency());
  threads = std::max(1L, std::min(threads, total));

  std::vector<Candidate> partials;
  if (threads == 1) {
    partials.push_back(evaluate_range(0, total));
  } else {
    std::vector<std::future<Candidate>> futures;
    long chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      long begin = t * chunk;
      long end = std::min(total, begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, evaluate_range, begin, end));
    }
    for (auto& f : futures) partials.push_back(f.get());
  }

  Candidate best;
  for (const Candidate& c : partials) {
    best.capacity_infeasible += c.capacity_infeasible;
    best.link_infeasible += c.link_infeasible;
    if (c.rank >= 0 && (c.cost < best.cost || (c.cost == best.cost && c.rank < best.rank))) {
      best.cost = c.cost;
      best.rank = c.rank;
    }
  }
  if (best.rank < 0)
    throw AllInfeasible("no candidate placement satisfies the capacity constraints");

  SearchResult result;
  result.placement = candidate_placement(space, instance, best.rank);
  SelectionProblem problem{&instance, &result.placement};
  result.selection = solve_selection(problem, solve_options);
  result.cost = assemble_cost(instance, result.placement, result.selection);
  result.evaluated = total - best.capacity_infeasible - best.link_infeasible;
  result.capacity_infeasible = best.capacity_infeasible;
  result.link_infeasible = best.link_infeasible;
  result.q = space.q;
  return result;
}

SearchResult greedy_placement(const CopyAllocation& counts, const Instance& instance,
                              const SearchOptions& options) {
  const Topology& topo = instance.topo;
  const ServiceCatalog& catalog = instance.catalog;
  if (static_cast<int>(counts.contents.size()) != catalog.f1() ||
      static_cast<int>(counts.computations.size()) != catalog.f2())
    throw InvalidSpec("copy allocation does not match the catalog");

  Placement placement(topo, catalog);
  std::vector<double> cache_left(static_cast<size_t>(topo.node_count()));
  std::vector<double> compute_left(static_cast<size_t>(topo.node_count()));
  for (const NodeRecord& nr : topo.nodes()) {
    cache_left[static_cast<size_t>(nr.id)] = nr.cache_capacity_bits;
    compute_left[static_cast<size_t>(nr.id)] = nr.compute_capacity_units;
  }

  for (int k = 0; k < catalog.service_count(); ++k) {
    const bool content = catalog.is_content(k);
    const double footprint =
        content ? catalog.content(k).size_bits : catalog.computation(k).workload_units;
    const double copy_energy =
        content ? catalog.content(k).size_bits * instance.params.p_ca_w_per_bit *
                      instance.params.duration_s
                : instance.params.p_static_w * instance.params.duration_s;
    int copies = content ? counts.contents[static_cast<size_t>(k)].rounded
                         : counts.computations[static_cast<size_t>(k - catalog.f1())].rounded;

    std::vector<NodeId> candidates = service_candidates(topo, catalog, k);
    std::sort(candidates.begin(), candidates.end());

    // Served weight per user under the servers chosen so far (origin only at
    // the start).
    SelectionProblem probe{&instance, &placement};
    std::vector<double> best_w(instance.demand.users.size());
    for (size_t u = 0; u < instance.demand.users.size(); ++u)
      best_w[u] = probe.weight(topo.origin(), instance.demand.users[u]);

    std::vector<bool> taken(candidates.size(), false);
    for (int step = 0; step < copies; ++step) {
      int chosen = -1;
      double chosen_delta = std::numeric_limits<double>::infinity();
      for (size_t c = 0; c < candidates.size(); ++c) {
        if (taken[c]) continue;
        NodeId node = candidates[c];
        double left = content ? cache_left[static_cast<size_t>(node)]
                              : compute_left[static_cast<size_t>(node)];
        if (footprint > left) continue;
        double delta = copy_energy;
        for (size_t u = 0; u < instance.demand.users.size(); ++u) {
          double m = instance.demand.m[static_cast<size_t>(k)][u];
          if (m == 0.0) continue;
          double w = probe.weight(node, instance.demand.users[u]);
          if (w < best_w[u]) delta -= (best_w[u] - w) * m;
        }
        if (delta < chosen_delta) {  // ascending scan keeps the lowest id on ties
          chosen_delta = delta;
          chosen = static_cast<int>(c);
        }
      }
      if (chosen < 0) break;  // no candidate has capacity left
      NodeId node = candidates[static_cast<size_t>(chosen)];
      taken[static_cast<size_t>(chosen)] = true;
      placement.add(node, k);
      if (content)
        cache_left[static_cast<size_t>(node)] -= footprint;
      else
        compute_left[static_cast<size_t>(node)] -= footprint;
      for (size_t u = 0; u < instance.demand.users.size(); ++u)
        best_w[u] = std::min(best_w[u], probe.weight(node, instance.demand.users[u]));
    }
  }

  SearchResult result;
  result.placement = std::move(placement);
  SelectionProblem problem{&instance, &result.placement};
  result.selection = solve_selection(problem, SolveOptions{options.mode, options.nearest_shortcut});
  if (result.selection.status != SelectStatus::optimal)
    throw Infeasible("link capacities cannot carry the demand under the greedy placement");
  result.cost = assemble_cost(instance, result.placement, result.selection);
  result.evaluated = 1;
  result.q = 1;
  return result;
}

SearchResult baseline_origin(const Instance& instance) {
  SearchResult result;
  result.placement = Placement::origin_only(instance.topo, instance.catalog);

  SelectionSolution solution;
  solution.selection =
      Selection::empty(instance.catalog.service_count(), instance.demand.users);
  solution.objective = 0.0;
  SelectionProblem problem{&instance, &result.placement};
  for (int k = 0; k < instance.catalog.service_count(); ++k) {
    for (size_t u = 0; u < instance.demand.users.size(); ++u) {
      double m = instance.demand.m[static_cast<size_t>(k)][u];
      if (m == 0.0) continue;
      solution.selection.rho[static_cast<size_t>(k)][u].emplace_back(instance.topo.origin(), 1.0);
      solution.objective += problem.weight(instance.topo.origin(), instance.demand.users[u]) * m;
    }
  }
  solution.link_load =
      link_loads(instance.topo, instance.routing, solution.selection.flows(instance.demand)).load;
  solution.status = SelectStatus::optimal;

  result.selection = std::move(solution);
  result.cost = assemble_cost(instance, result.placement, result.selection);
  result.evaluated = 1;
  result.q = 1;
  return result;
}

}  // namespace sdncc
