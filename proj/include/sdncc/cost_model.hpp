#ifndef SDNCC_COST_MODEL_HPP
#define SDNCC_COST_MODEL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sdncc/capacity_alloc.hpp"
#include "sdncc/catalog.hpp"
#include "sdncc/energy_params.hpp"
#include "sdncc/topology.hpp"

namespace sdncc {

// Binary service-hosting matrix over servers 0..N (row N is the origin,
// which hosts everything). Content may be hosted on caching nodes, a
// computation's VM on computing nodes.
class Placement {
 public:
  Placement() = default;
  Placement(const Topology& topo, const ServiceCatalog& catalog);

  static Placement origin_only(const Topology& topo, const ServiceCatalog& catalog) {
    return Placement(topo, catalog);
  }

  bool hosts(NodeId i, int k) const { return h_[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0; }
  void add(NodeId i, int k) { h_[static_cast<size_t>(i)][static_cast<size_t>(k)] = 1; }
  void remove(NodeId i, int k) { h_[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0; }

  int n_nodes() const { return n_nodes_; }
  int service_count() const { return service_count_; }
  // Copies hosted on physical nodes; the origin copy is not counted.
  int in_network_copies(int k) const;
  std::vector<NodeId> hosts_of(int k) const;  // origin included, ascending

 private:
  int n_nodes_ = 0;
  int service_count_ = 0;
  std::vector<std::vector<uint8_t>> h_;  // (N+1) x K
};

// Capacity constraints plus role eligibility. On failure `why` (if given)
// names the first violated node.
bool placement_feasible(const Placement& placement, const Topology& topo,
                        const ServiceCatalog& catalog, std::string* why = nullptr);

// Fractional assignment of each (service, user) demand across servers.
// rho[k][u] holds (server, fraction) pairs; fractions over each pair with
// positive demand sum to 1.
struct Selection {
  std::vector<NodeId> users;
  std::vector<std::vector<std::vector<std::pair<NodeId, double>>>> rho;

  static Selection empty(int service_count, const std::vector<NodeId>& users);
  // Traffic terms m * rho as explicit flows (zero-demand pairs dropped).
  std::vector<Flow> flows(const DemandMatrix& demand) const;
};

struct CostBreakdown {
  double caching_j = 0.0;
  double computing_j = 0.0;
  double transmission_j = 0.0;
  double usage = 0.0;  // latency-weighted bits
  double total = 0.0;  // caching + computing + transmission + gamma * usage
};

double caching_energy(const Placement& placement, const ServiceCatalog& catalog,
                      const EnergyParams& params);
double computing_energy(const Placement& placement, const ServiceCatalog& catalog,
                        const EnergyParams& params);
double transmission_energy(const Selection& selection, const DemandMatrix& demand,
                           const DistanceTable& dist);
double network_usage(const Selection& selection, const DemandMatrix& demand,
                     const DistanceTable& dist);

// All four components. Throws InconsistentDecision when the selection sends
// traffic to a server that does not host the service.
CostBreakdown total_cost(const Placement& placement, const Selection& selection,
                         const ServiceCatalog& catalog, const DemandMatrix& demand,
                         const DistanceTable& dist, const EnergyParams& params);

// Catalog-wide energy and usage when every service runs the given copy
// counts and users sit at the power-law average distance.
struct AggregateCost {
  double energy_j = 0.0;
  double usage = 0.0;

  double combined(double gamma) const { return energy_j + gamma * usage; }
};

AggregateCost aggregate_cost(const CopyAllocation& counts, const ServiceCatalog& catalog,
                             const HopLawFit& fit, const EnergyParams& params);

}  // namespace sdncc

#endif
