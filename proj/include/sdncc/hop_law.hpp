#ifndef SDNCC_HOP_LAW_HPP
#define SDNCC_HOP_LAW_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sdncc/topology.hpp"

namespace sdncc {

// Power-law model of the average distance from a node to the nearest of n
// servers: d(n) = scale_hops * (N / n)^exponent.
struct HopLawFit {
  double scale_hops = 1.0;  // the fitted A
  double exponent = 0.5;    // the fitted alpha
  double residual = 0.0;    // RMS of the log-space fit
  int n_nodes = 0;
  std::vector<std::pair<int, double>> samples;  // (n, measured d)

  double predict(double n) const;
};

// Mean over sampled n-subsets of `candidates` of the average hop distance
// from every node (servers included, at distance 0) to its nearest chosen
// server. Enumerates all subsets when there are at most
// kExactEnumerationLimit of them; otherwise draws num_samples subsets with
// per-sample seed streams.
inline constexpr int kExactEnumerationLimit = 1000;

double measure_avg_distance(const Topology& topo, int n, int num_samples, uint64_t seed,
                            const std::vector<NodeId>& candidates);
// Candidates default to the caching/computing nodes, or all nodes when no
// node carries a server role.
double measure_avg_distance(const Topology& topo, int n, int num_samples, uint64_t seed);

// Least-squares fit of log d = log A + alpha * log(N/n). Samples with d = 0
// are dropped before the log transform; at least two distinct n values with
// d > 0 are required.
HopLawFit fit_power_law(std::vector<std::pair<int, double>> samples, int n_nodes);

struct HopLawOptions {
  std::vector<int> n_values;        // empty: powers of two up to N/2
  int num_samples = 100;
  uint64_t seed = 0;
  std::vector<NodeId> candidates;   // empty: server-eligible, else all nodes
};

// Measures d(n) over the option's n grid and fits the power law.
HopLawFit fit_hop_law(const Topology& topo, const HopLawOptions& options = {});

}  // namespace sdncc

#endif
