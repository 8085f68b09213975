#ifndef SDNCC_TOPOLOGY_HPP
#define SDNCC_TOPOLOGY_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sdncc/energy_params.hpp"

namespace sdncc {

using NodeId = int;

enum Role : uint8_t {
  kRouter = 1,
  kUser = 2,
  kCaching = 4,
  kComputing = 8,
};

struct NodeRecord {
  NodeId id = 0;
  uint8_t roles = kRouter;
  double cache_capacity_bits = 0.0;
  double compute_capacity_units = 0.0;

  bool has(Role r) const { return (roles & r) != 0; }
};

struct LinkRecord {
  int id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  double capacity_bits = 0.0;  // bits per duration t
};

constexpr int kUnreachable = std::numeric_limits<int>::max();

// Directed network graph plus one virtual origin server. The origin is not a
// physical node: it hangs off `gateway` over an uncapacitated virtual link
// and is addressed as node index N (one past the physical range). Immutable
// after construction.
class Topology {
 public:
  Topology() = default;
  Topology(std::vector<NodeRecord> nodes, std::vector<LinkRecord> links,
           NodeId gateway, int origin_penalty_hops);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  NodeId origin() const { return node_count(); }
  NodeId gateway() const { return gateway_; }
  int origin_penalty_hops() const { return penalty_hops_; }

  const std::vector<NodeRecord>& nodes() const { return nodes_; }
  const std::vector<LinkRecord>& links() const { return links_; }
  const NodeRecord& node(NodeId v) const { return nodes_[static_cast<size_t>(v)]; }
  const LinkRecord& link(int l) const { return links_[static_cast<size_t>(l)]; }

  // Link ids leaving / entering a node, in link-id order.
  const std::vector<int>& out_links(NodeId v) const { return out_[static_cast<size_t>(v)]; }
  const std::vector<int>& in_links(NodeId v) const { return in_[static_cast<size_t>(v)]; }

  std::vector<NodeId> users() const { return with_role(kUser); }
  std::vector<NodeId> caching_nodes() const { return with_role(kCaching); }
  std::vector<NodeId> computing_nodes() const { return with_role(kComputing); }
  // Caching and computing nodes combined, sorted, deduplicated.
  std::vector<NodeId> server_nodes() const;

  bool operator==(const Topology& other) const;

 private:
  std::vector<NodeId> with_role(Role r) const;

  std::vector<NodeRecord> nodes_;
  std::vector<LinkRecord> links_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  NodeId gateway_ = 0;
  int penalty_hops_ = 3;
};

// Hop distances and the per-hop derived matrices for every (server, node)
// pair. Row index runs over 0..N (row N is the origin), column over 0..N-1.
// latency = eta * hops; per_bit_energy follows EnergyParams::per_bit_energy.
// Unreachable pairs hold kUnreachable / +inf.
struct DistanceTable {
  int n_nodes = 0;
  std::vector<std::vector<int>> hop;
  std::vector<std::vector<double>> latency;
  std::vector<std::vector<double>> per_bit_energy;

  bool reachable(NodeId i, NodeId u) const {
    return hop[static_cast<size_t>(i)][static_cast<size_t>(u)] != kUnreachable;
  }
};

// BFS hop counts from every node (plus the origin row, which is the gateway
// row shifted by the origin penalty). Throws DisconnectedGraph when some
// user cannot be reached from the origin.
DistanceTable all_pairs_hops(const Topology& topo, const EnergyParams& params);

// Hop counts from `src` (respectively, from the nearest of `sources`) to
// every node, following link directions.
std::vector<int> bfs_hops(const Topology& topo, NodeId src);
std::vector<int> bfs_hops_multi(const Topology& topo, const std::vector<NodeId>& sources);

// Single shortest delivery path per (server, user) pair; among equal-hop
// paths the lexicographically smallest node-id sequence is kept. Origin rows
// reuse the gateway's paths (the virtual origin link carries no load).
class RoutingMatrix {
 public:
  RoutingMatrix() = default;
  RoutingMatrix(int n_nodes, std::vector<std::vector<std::vector<int>>> paths)
      : n_nodes_(n_nodes), paths_(std::move(paths)) {}

  // Link ids along the server->user path, in traversal order. Empty when
  // server == user or the pair is unreachable.
  const std::vector<int>& path(NodeId server, NodeId user) const {
    return paths_[static_cast<size_t>(server)][static_cast<size_t>(user)];
  }
  double r(int link, NodeId server, NodeId user) const;
  int n_nodes() const { return n_nodes_; }

 private:
  int n_nodes_ = 0;
  std::vector<std::vector<std::vector<int>>> paths_;  // (N+1) x N
};

RoutingMatrix build_routing(const Topology& topo, const DistanceTable& dist);

// One served flow: `volume` bits of service `service` delivered from
// `server` to `user` over the routing path.
struct Flow {
  int service = 0;
  NodeId server = 0;
  NodeId user = 0;
  double volume = 0.0;
};

struct LinkLoadReport {
  std::vector<double> load;     // by link id, bits per duration t
  std::vector<int> overloaded;  // link ids with load > capacity
  double max_overload_ratio = 0.0;
};

LinkLoadReport link_loads(const Topology& topo, const RoutingMatrix& routing,
                          const std::vector<Flow>& flows);

// Role assignment for generated topologies: an explicit node list, a count
// (prefix of a seed-derived permutation), or everything.
struct RoleAssign {
  std::optional<int> count;    // nullopt and empty nodes => all nodes
  std::vector<NodeId> nodes;
};

struct TopologyGenSpec {
  enum class Kind { ring, grid, waxman };

  Kind kind = Kind::ring;
  int n = 8;          // ring / waxman node count
  int rows = 0;       // grid
  int cols = 0;       // grid
  uint64_t seed = 0;
  double waxman_alpha = 0.4;
  double waxman_beta = 0.4;

  double link_capacity_bits = 1e15;
  double cache_capacity_bits = 1e12;
  double compute_capacity_units = 1e9;
  RoleAssign caching;
  RoleAssign computing;

  NodeId gateway = 0;
  int origin_penalty_hops = 3;
};

// Deterministic in `spec` (including seed). Every node gets router+user
// roles; caching/computing roles follow the RoleAssign rules.
Topology generate_topology(const TopologyGenSpec& spec);

Topology load_topology(const std::string& path);
void save_topology(const Topology& topo, const std::string& path);

}  // namespace sdncc

#endif
