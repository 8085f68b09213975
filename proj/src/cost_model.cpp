#include "sdncc/cost_model.hpp"

#include <cmath>

#include "sdncc/errors.hpp"

namespace sdncc {

void EnergyParams::validate() const {
  if (p_tr_link_j_per_bit < 0 || p_tr_node_j_per_bit < 0 || p_ca_w_per_bit < 0 ||
      p_static_w < 0 || p_active_j_per_unit < 0 || gamma < 0 || eta < 0)
    throw InvalidSpec("energy parameters must be non-negative");
  if (!(duration_s > 0)) throw InvalidSpec("duration must be > 0");
}

Placement::Placement(const Topology& topo, const ServiceCatalog& catalog)
    : n_nodes_(topo.node_count()), service_count_(catalog.service_count()) {
  h_.assign(static_cast<size_t>(n_nodes_) + 1,
            std::vector<uint8_t>(static_cast<size_t>(service_count_), 0));
  // The origin hosts every service.
  for (int k = 0; k < service_count_; ++k) h_[static_cast<size_t>(n_nodes_)][static_cast<size_t>(k)] = 1;
}

int Placement::in_network_copies(int k) const {
  int copies = 0;
  for (int i = 0; i < n_nodes_; ++i) copies += h_[static_cast<size_t>(i)][static_cast<size_t>(k)];
  return copies;
}

std::vector<NodeId> Placement::hosts_of(int k) const {
  std::vector<NodeId> out;
  for (int i = 0; i <= n_nodes_; ++i)
    if (h_[static_cast<size_t>(i)][static_cast<size_t>(k)]) out.push_back(i);
  return out;
}

bool placement_feasible(const Placement& placement, const Topology& topo,
                        const ServiceCatalog& catalog, std::string* why) {
  for (const NodeRecord& nr : topo.nodes()) {
    double cache_used = 0.0;
    double compute_used = 0.0;
    for (int k = 0; k < catalog.service_count(); ++k) {
      if (!placement.hosts(nr.id, k)) continue;
      if (catalog.is_content(k)) {
        if (!nr.has(kCaching)) {
          if (why) *why = "content on non-caching node " + std::to_string(nr.id);
          return false;
        }
        cache_used += catalog.content(k).size_bits;
      } else {
        if (!nr.has(kComputing)) {
          if (why) *why = "computation on non-computing node " + std::to_string(nr.id);
          return false;
        }
        compute_used += catalog.computation(k).workload_units;
      }
    }
    if (cache_used > nr.cache_capacity_bits) {
      if (why) *why = "cache capacity exceeded on node " + std::to_string(nr.id);
      return false;
    }
    if (compute_used > nr.compute_capacity_units) {
      if (why) *why = "compute capacity exceeded on node " + std::to_string(nr.id);
      return false;
    }
  }
  return true;
}

Selection Selection::empty(int service_count, const std::vector<NodeId>& users) {
  Selection s;
  s.users = users;
  s.rho.assign(static_cast<size_t>(service_count),
               std::vector<std::vector<std::pair<NodeId, double>>>(users.size()));
  return s;
}

std::vector<Flow> Selection::flows(const DemandMatrix& demand) const {
  std::vector<Flow> out;
  for (size_t k = 0; k < rho.size(); ++k) {
    for (size_t u = 0; u < users.size(); ++u) {
      double m = demand.m[k][u];
      if (m == 0.0) continue;
      for (const auto& [server, frac] : rho[k][u])
        if (frac != 0.0)
          out.push_back({static_cast<int>(k), server, users[u], m * frac});
    }
  }
  return out;
}

double caching_energy(const Placement& placement, const ServiceCatalog& catalog,
                      const EnergyParams& params) {
  double energy = 0.0;
  for (int k = 0; k < catalog.f1(); ++k)
    energy += placement.in_network_copies(k) * catalog.content(k).size_bits *
              params.p_ca_w_per_bit * params.duration_s;
  return energy;
}

double computing_energy(const Placement& placement, const ServiceCatalog& catalog,
                        const EnergyParams& params) {
  double energy = 0.0;
  for (int k = catalog.f1(); k < catalog.service_count(); ++k) {
    const ComputationItem& item = catalog.computation(k);
    energy += placement.in_network_copies(k) * params.p_static_w * params.duration_s;
    // Processing energy accrues wherever the workload runs, copies or not.
    energy += item.popularity * item.workload_units * params.p_active_j_per_unit;
  }
  return energy;
}

namespace {

template <class Weight>
double weighted_flow_sum(const Selection& selection, const DemandMatrix& demand,
                         Weight&& weight) {
  double sum = 0.0;
  for (size_t k = 0; k < selection.rho.size(); ++k) {
    for (size_t u = 0; u < selection.users.size(); ++u) {
      double m = demand.m[k][u];
      if (m == 0.0) continue;
      for (const auto& [server, frac] : selection.rho[k][u])
        sum += weight(server, selection.users[u]) * m * frac;
    }
  }
  return sum;
}

}  // namespace

double transmission_energy(const Selection& selection, const DemandMatrix& demand,
                           const DistanceTable& dist) {
  return weighted_flow_sum(selection, demand, [&](NodeId i, NodeId u) {
    return dist.per_bit_energy[static_cast<size_t>(i)][static_cast<size_t>(u)];
  });
}

double network_usage(const Selection& selection, const DemandMatrix& demand,
                     const DistanceTable& dist) {
  return weighted_flow_sum(selection, demand, [&](NodeId i, NodeId u) {
    return dist.latency[static_cast<size_t>(i)][static_cast<size_t>(u)];
  });
}

CostBreakdown total_cost(const Placement& placement, const Selection& selection,
                         const ServiceCatalog& catalog, const DemandMatrix& demand,
                         const DistanceTable& dist, const EnergyParams& params) {
  for (size_t k = 0; k < selection.rho.size(); ++k)
    for (size_t u = 0; u < selection.users.size(); ++u)
      for (const auto& [server, frac] : selection.rho[k][u])
        if (frac > 0.0 && !placement.hosts(server, static_cast<int>(k)))
          throw InconsistentDecision("selection uses server " + std::to_string(server) +
                                     " which does not host service " +
                                     catalog.service_id(static_cast<int>(k)));

  CostBreakdown cost;
  cost.caching_j = caching_energy(placement, catalog, params);
  cost.computing_j = computing_energy(placement, catalog, params);
  cost.transmission_j = transmission_energy(selection, demand, dist);
  cost.usage = network_usage(selection, demand, dist);
  cost.total = cost.caching_j + cost.computing_j + cost.transmission_j + params.gamma * cost.usage;
  return cost;
}

AggregateCost aggregate_cost(const CopyAllocation& counts, const ServiceCatalog& catalog,
                             const HopLawFit& fit, const EnergyParams& params) {
  AggregateCost agg;
  for (int k = 0; k < catalog.f1(); ++k) {
    ItemCostParts parts =
        content_cost_parts(catalog.content(k), counts.contents[static_cast<size_t>(k)].clamped,
                           fit, params);
    agg.energy_j += parts.energy_j();
    agg.usage += parts.usage;
  }
  for (int k = catalog.f1(); k < catalog.service_count(); ++k) {
    ItemCostParts parts = computation_cost_parts(
        catalog.computation(k), counts.computations[static_cast<size_t>(k - catalog.f1())].clamped,
        fit, params);
    agg.energy_j += parts.energy_j();
    agg.usage += parts.usage;
  }
  return agg;
}

}  // namespace sdncc
