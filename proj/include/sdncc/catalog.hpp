#ifndef SDNCC_CATALOG_HPP
#define SDNCC_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdncc/topology.hpp"

namespace sdncc {

struct ContentItem {
  std::string id;
  double popularity = 0.0;  // requests per duration t
  double size_bits = 0.0;
};

struct ComputationItem {
  std::string id;
  double popularity = 0.0;        // requests per duration t
  double data_volume_bits = 0.0;  // bits moved per request batch
  double workload_units = 0.0;    // processing cost per request batch
};

// Service universe. Services share one dense index space: contents first
// (0..F1-1), then computations (F1..F1+F2-1).
struct ServiceCatalog {
  std::vector<ContentItem> contents;
  std::vector<ComputationItem> computations;

  int f1() const { return static_cast<int>(contents.size()); }
  int f2() const { return static_cast<int>(computations.size()); }
  int service_count() const { return f1() + f2(); }
  bool is_content(int k) const { return k < f1(); }
  const ContentItem& content(int k) const { return contents[static_cast<size_t>(k)]; }
  const ComputationItem& computation(int k) const {
    return computations[static_cast<size_t>(k - f1())];
  }

  double popularity(int k) const;
  // Bits delivered per request batch: content size or computation data volume.
  double traffic_bits(int k) const;
  // Demand volume over duration t: popularity * traffic_bits.
  double demand_volume(int k) const { return popularity(k) * traffic_bits(k); }
  const std::string& service_id(int k) const;

  void validate() const;  // unique ids, positive sizes
};

struct SizeSpec {
  // min == max means a fixed value; otherwise uniform in [min, max].
  double content_bits_min = 1e8;
  double content_bits_max = 1e8;
  double comp_data_bits_min = 1e8;
  double comp_data_bits_max = 1e8;
  double workload_units_min = 1e6;
  double workload_units_max = 1e6;
};

// Popularities follow rank^(-exponent), each service class normalized to
// total_requests; sizes and workloads are drawn from size_spec.
ServiceCatalog zipf_catalog(int f1, int f2, double total_requests, double exponent,
                            const SizeSpec& size_spec, uint64_t seed);

// Per-user demand volumes m[k][u], bits per duration t.
struct DemandMatrix {
  std::vector<NodeId> users;
  std::vector<std::vector<double>> m;  // [service][user index]

  int user_count() const { return static_cast<int>(users.size()); }
  double total() const;
};

// m[k][u] = weight_u * popularity_k * traffic_bits_k. Weights default to
// uniform; a non-uniform vector is normalized to sum 1.
DemandMatrix spread_demand(const ServiceCatalog& catalog, const std::vector<NodeId>& users,
                           std::vector<double> weights = {});

}  // namespace sdncc

#endif
