#ifndef SDNCC_CAPACITY_ALLOC_HPP
#define SDNCC_CAPACITY_ALLOC_HPP

#include <vector>

#include "sdncc/catalog.hpp"
#include "sdncc/energy_params.hpp"
#include "sdncc/hop_law.hpp"

namespace sdncc {

// Copy count for one service: the unconstrained stationary point, its clamp
// to [1, N], and the integer used for placement.
struct CopyCount {
  double raw = 0.0;
  double clamped = 1.0;
  int rounded = 1;
  bool degenerate = false;  // storage price was zero; clamped forced to N
};

struct CopyAllocation {
  std::vector<CopyCount> contents;
  std::vector<CopyCount> computations;
};

// Cost of hosting `copies` replicas of one service, with the average hop
// distance taken from the fitted power law.
struct ItemCostParts {
  double storage_j = 0.0;       // caching energy, or static VM energy
  double transmission_j = 0.0;
  double active_j = 0.0;        // processing energy; zero for contents
  double usage = 0.0;           // latency-weighted bits

  double energy_j() const { return storage_j + transmission_j + active_j; }
  double combined(double gamma) const { return energy_j() + gamma * usage; }
};

ItemCostParts content_cost_parts(const ContentItem& item, double copies, const HopLawFit& fit,
                                 const EnergyParams& params);
ItemCostParts computation_cost_parts(const ComputationItem& item, double copies,
                                     const HopLawFit& fit, const EnergyParams& params);

// Stationary point of the per-item cost in the copy count, clamped to
// [1, n_nodes]. A zero storage price makes copies free and is reported as
// degenerate with the count pinned at n_nodes.
CopyCount optimal_content_copies(const ContentItem& item, const HopLawFit& fit,
                                 const EnergyParams& params, int n_nodes);
CopyCount optimal_vm_copies(const ComputationItem& item, const HopLawFit& fit,
                            const EnergyParams& params, int n_nodes);

// Grid search over integer copy counts in [1, n_nodes]; ties break toward
// fewer copies. Independent check of the closed forms above.
int oracle_content_copies(const ContentItem& item, const HopLawFit& fit,
                          const EnergyParams& params, int n_nodes);
int oracle_vm_copies(const ComputationItem& item, const HopLawFit& fit,
                     const EnergyParams& params, int n_nodes);

CopyAllocation allocate_copies(const ServiceCatalog& catalog, const HopLawFit& fit,
                               const EnergyParams& params, int n_nodes);

}  // namespace sdncc

#endif
