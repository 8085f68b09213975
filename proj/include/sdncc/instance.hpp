#ifndef SDNCC_INSTANCE_HPP
#define SDNCC_INSTANCE_HPP

#include "sdncc/catalog.hpp"
#include "sdncc/energy_params.hpp"
#include "sdncc/topology.hpp"

namespace sdncc {

// Everything a solver needs, bundled and immutable: solvers share const
// references to one Instance across worker threads.
struct Instance {
  Topology topo;
  DistanceTable dist;
  RoutingMatrix routing;
  ServiceCatalog catalog;
  DemandMatrix demand;
  EnergyParams params;
};

// Fills dist and routing from topo/params and validates the pieces.
Instance make_instance(Topology topo, ServiceCatalog catalog, DemandMatrix demand,
                       const EnergyParams& params);

}  // namespace sdncc

#endif
