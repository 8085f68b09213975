#include "sdncc/capacity_alloc.hpp"

#include <algorithm>
#include <cmath>

#include "sdncc/errors.hpp"

namespace sdncc {

namespace {

CopyCount clamp_copies(double raw, int n_nodes) {
  CopyCount cc;
  cc.raw = raw;
  cc.clamped = std::max(1.0, std::min(raw, static_cast<double>(n_nodes)));
  cc.rounded = static_cast<int>(std::lround(cc.clamped));
  cc.rounded = std::max(1, std::min(cc.rounded, n_nodes));
  return cc;
}

double stationary_copies(double popularity_scale, double storage_price, const HopLawFit& fit,
                         const EnergyParams& params, int n_nodes) {
  double transport = params.p_tr_link_j_per_bit + params.p_tr_node_j_per_bit +
                     params.gamma * params.eta;
  double base = fit.scale_hops * popularity_scale * fit.exponent * transport / storage_price;
  return std::pow(base, 1.0 / (fit.exponent + 1.0)) *
         std::pow(static_cast<double>(n_nodes), fit.exponent / (fit.exponent + 1.0));
}

}  // namespace

ItemCostParts content_cost_parts(const ContentItem& item, double copies, const HopLawFit& fit,
                                 const EnergyParams& params) {
  double d = fit.predict(copies);
  ItemCostParts parts;
  parts.storage_j = copies * item.size_bits * params.p_ca_w_per_bit * params.duration_s;
  parts.transmission_j = item.popularity * item.size_bits * params.per_bit_energy(d);
  parts.usage = params.eta * item.popularity * item.size_bits * d;
  return parts;
}

ItemCostParts computation_cost_parts(const ComputationItem& item, double copies,
                                     const HopLawFit& fit, const EnergyParams& params) {
  double d = fit.predict(copies);
  ItemCostParts parts;
  parts.storage_j = copies * params.p_static_w * params.duration_s;
  parts.transmission_j = item.popularity * item.data_volume_bits * params.per_bit_energy(d);
  parts.active_j = item.popularity * item.workload_units * params.p_active_j_per_unit;
  parts.usage = params.eta * item.popularity * item.data_volume_bits * d;
  return parts;
}

CopyCount optimal_content_copies(const ContentItem& item, const HopLawFit& fit,
                                 const EnergyParams& params, int n_nodes) {
  double storage_price = params.p_ca_w_per_bit * params.duration_s;
  if (storage_price == 0.0) {
    CopyCount cc = clamp_copies(static_cast<double>(n_nodes), n_nodes);
    cc.degenerate = true;
    return cc;
  }
  return clamp_copies(stationary_copies(item.popularity, storage_price, fit, params, n_nodes),
                      n_nodes);
}

CopyCount optimal_vm_copies(const ComputationItem& item, const HopLawFit& fit,
                            const EnergyParams& params, int n_nodes) {
  double storage_price = params.p_static_w * params.duration_s;
  if (storage_price == 0.0) {
    CopyCount cc = clamp_copies(static_cast<double>(n_nodes), n_nodes);
    cc.degenerate = true;
    return cc;
  }
  return clamp_copies(
      stationary_copies(item.popularity * item.data_volume_bits, storage_price, fit, params,
                        n_nodes),
      n_nodes);
}

namespace {

template <class CostFn>
int grid_argmin(int n_nodes, CostFn&& cost) {
  int best = 1;
  double best_cost = cost(1);
  for (int n = 2; n <= n_nodes; ++n) {
    double c = cost(n);
    if (c < best_cost) {
      best_cost = c;
      best = n;
    }
  }
  return best;
}

}  // namespace

int oracle_content_copies(const ContentItem& item, const HopLawFit& fit,
                          const EnergyParams& params, int n_nodes) {
  return grid_argmin(n_nodes, [&](int n) {
    return content_cost_parts(item, n, fit, params).combined(params.gamma);
  });
}

int oracle_vm_copies(const ComputationItem& item, const HopLawFit& fit,
                     const EnergyParams& params, int n_nodes) {
  return grid_argmin(n_nodes, [&](int m) {
    return computation_cost_parts(item, m, fit, params).combined(params.gamma);
  });
}

CopyAllocation allocate_copies(const ServiceCatalog& catalog, const HopLawFit& fit,
                               const EnergyParams& params, int n_nodes) {
  CopyAllocation alloc;
  for (const ContentItem& c : catalog.contents)
    alloc.contents.push_back(optimal_content_copies(c, fit, params, n_nodes));
  for (const ComputationItem& c : catalog.computations)
    alloc.computations.push_back(optimal_vm_copies(c, fit, params, n_nodes));
  return alloc;
}

}  // namespace sdncc
