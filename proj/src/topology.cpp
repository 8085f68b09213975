#include "sdncc/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "json.hpp"
#include "sdncc/errors.hpp"
#include "sdncc/util.hpp"

namespace sdncc {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Topology::Topology(std::vector<NodeRecord> nodes, std::vector<LinkRecord> links,
                   NodeId gateway, int origin_penalty_hops)
    : nodes_(std::move(nodes)),
      links_(std::move(links)),
      gateway_(gateway),
      penalty_hops_(origin_penalty_hops) {
  const int n = node_count();
  for (int v = 0; v < n; ++v) {
    if (nodes_[static_cast<size_t>(v)].id != v)
      throw InvalidSpec("node ids must be dense 0..N-1 and in order");
    if (nodes_[static_cast<size_t>(v)].cache_capacity_bits < 0 ||
        nodes_[static_cast<size_t>(v)].compute_capacity_units < 0)
      throw InvalidSpec("node capacities must be non-negative");
  }
  out_.assign(static_cast<size_t>(n), {});
  in_.assign(static_cast<size_t>(n), {});
  for (size_t l = 0; l < links_.size(); ++l) {
    LinkRecord& e = links_[l];
    e.id = static_cast<int>(l);
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw InvalidSpec("link endpoint refers to a missing node");
    if (e.src == e.dst) throw InvalidSpec("self-loop link");
    if (!(e.capacity_bits > 0)) throw InvalidSpec("link capacity must be > 0");
    out_[static_cast<size_t>(e.src)].push_back(e.id);
    in_[static_cast<size_t>(e.dst)].push_back(e.id);
  }
  if (gateway_ < 0 || gateway_ >= n) throw InvalidSpec("origin gateway is not a node");
  if (penalty_hops_ < 0) throw InvalidSpec("origin penalty hops must be >= 0");
}

std::vector<NodeId> Topology::with_role(Role r) const {
  std::vector<NodeId> out;
  for (const NodeRecord& nr : nodes_)
    if (nr.has(r)) out.push_back(nr.id);
  return out;
}

std::vector<NodeId> Topology::server_nodes() const {
  std::vector<NodeId> out;
  for (const NodeRecord& nr : nodes_)
    if (nr.has(kCaching) || nr.has(kComputing)) out.push_back(nr.id);
  return out;
}

bool Topology::operator==(const Topology& other) const {
  if (node_count() != other.node_count() || links_.size() != other.links_.size() ||
      gateway_ != other.gateway_ || penalty_hops_ != other.penalty_hops_)
    return false;
  for (int v = 0; v < node_count(); ++v) {
    const NodeRecord& a = nodes_[static_cast<size_t>(v)];
    const NodeRecord& b = other.nodes_[static_cast<size_t>(v)];
    if (a.roles != b.roles || a.cache_capacity_bits != b.cache_capacity_bits ||
        a.compute_capacity_units != b.compute_capacity_units)
      return false;
  }
  for (size_t l = 0; l < links_.size(); ++l) {
    const LinkRecord& a = links_[l];
    const LinkRecord& b = other.links_[l];
    if (a.src != b.src || a.dst != b.dst || a.capacity_bits != b.capacity_bits) return false;
  }
  return true;
}

std::vector<int> bfs_hops(const Topology& topo, NodeId src) {
  return bfs_hops_multi(topo, {src});
}

std::vector<int> bfs_hops_multi(const Topology& topo, const std::vector<NodeId>& sources) {
  std::vector<int> d(static_cast<size_t>(topo.node_count()), kUnreachable);
  std::deque<NodeId> queue;
  for (NodeId s : sources) {
    if (d[static_cast<size_t>(s)] == kUnreachable) {
      d[static_cast<size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (int l : topo.out_links(v)) {
      NodeId w = topo.link(l).dst;
      if (d[static_cast<size_t>(w)] == kUnreachable) {
        d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

DistanceTable all_pairs_hops(const Topology& topo, const EnergyParams& params) {
  const int n = topo.node_count();
  DistanceTable table;
  table.n_nodes = n;
  table.hop.assign(static_cast<size_t>(n) + 1, {});
  for (int i = 0; i < n; ++i) table.hop[static_cast<size_t>(i)] = bfs_hops(topo, i);

  // Origin row: gateway distance plus the configured penalty.
  std::vector<int>& origin_row = table.hop[static_cast<size_t>(n)];
  origin_row.assign(static_cast<size_t>(n), kUnreachable);
  const std::vector<int>& gw = table.hop[static_cast<size_t>(topo.gateway())];
  for (int u = 0; u < n; ++u)
    if (gw[static_cast<size_t>(u)] != kUnreachable)
      origin_row[static_cast<size_t>(u)] = gw[static_cast<size_t>(u)] + topo.origin_penalty_hops();

  for (NodeId u : topo.users())
    if (origin_row[static_cast<size_t>(u)] == kUnreachable)
      throw DisconnectedGraph("user " + std::to_string(u) + " unreachable from origin");

  const double inf = std::numeric_limits<double>::infinity();
  table.latency.assign(static_cast<size_t>(n) + 1,
                       std::vector<double>(static_cast<size_t>(n), inf));
  table.per_bit_energy = table.latency;
  for (int i = 0; i <= n; ++i) {
    for (int u = 0; u < n; ++u) {
      int h = table.hop[static_cast<size_t>(i)][static_cast<size_t>(u)];
      if (h == kUnreachable) continue;
      table.latency[static_cast<size_t>(i)][static_cast<size_t>(u)] = params.eta * h;
      table.per_bit_energy[static_cast<size_t>(i)][static_cast<size_t>(u)] =
          params.per_bit_energy(static_cast<double>(h));
    }
  }
  return table;
}

double RoutingMatrix::r(int link, NodeId server, NodeId user) const {
  const std::vector<int>& p = path(server, user);
  return std::find(p.begin(), p.end(), link) != p.end() ? 1.0 : 0.0;
}

RoutingMatrix build_routing(const Topology& topo, const DistanceTable& dist) {
  const int n = topo.node_count();
  std::vector<std::vector<std::vector<int>>> paths(
      static_cast<size_t>(n) + 1, std::vector<std::vector<int>>(static_cast<size_t>(n)));

  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < n; ++u) {
      if (i == u) continue;
      int d = dist.hop[static_cast<size_t>(i)][static_cast<size_t>(u)];
      if (d == kUnreachable) continue;
      // Walk greedily toward u, always taking the smallest next node id that
      // still lies on a shortest path; this yields the lexicographically
      // smallest node sequence.
      std::vector<int>& p = paths[static_cast<size_t>(i)][static_cast<size_t>(u)];
      NodeId v = i;
      int remaining = d;
      while (v != u) {
        int best_link = -1;
        NodeId best_next = -1;
        for (int l : topo.out_links(v)) {
          NodeId w = topo.link(l).dst;
          if (dist.hop[static_cast<size_t>(w)][static_cast<size_t>(u)] == remaining - 1 &&
              (best_next == -1 || w < best_next)) {
            best_next = w;
            best_link = l;
          }
        }
        if (best_link < 0) throw DisconnectedGraph("shortest-path walk stalled");
        p.push_back(best_link);
        v = best_next;
        --remaining;
      }
    }
  }
  // The origin delivers through the gateway; only physical links carry load.
  paths[static_cast<size_t>(n)] = paths[static_cast<size_t>(topo.gateway())];
  return RoutingMatrix(n, std::move(paths));
}

LinkLoadReport link_loads(const Topology& topo, const RoutingMatrix& routing,
                          const std::vector<Flow>& flows) {
  LinkLoadReport report;
  report.load.assign(topo.links().size(), 0.0);
  for (const Flow& f : flows) {
    if (f.volume == 0.0) continue;
    for (int l : routing.path(f.server, f.user)) report.load[static_cast<size_t>(l)] += f.volume;
  }
  for (const LinkRecord& e : topo.links()) {
    double x = report.load[static_cast<size_t>(e.id)];
    if (x > e.capacity_bits) {
      report.overloaded.push_back(e.id);
      report.max_overload_ratio = std::max(report.max_overload_ratio, x / e.capacity_bits);
    }
  }
  return report;
}

namespace {

std::vector<NodeId> role_members(const RoleAssign& assign, int n, uint64_t seed) {
  if (!assign.nodes.empty()) {
    for (NodeId v : assign.nodes)
      if (v < 0 || v >= n) throw InvalidSpec("role node id out of range");
    return assign.nodes;
  }
  std::vector<NodeId> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  if (!assign.count.has_value()) return perm;  // all nodes
  int count = *assign.count;
  if (count < 0 || count > n) throw InvalidSpec("role count out of range");
  // Prefix of a seed-derived permutation, so sweeps over the count produce
  // nested node sets.
  std::mt19937_64 rng(mix_seed(seed, 0x726f6c65));
  std::shuffle(perm.begin(), perm.end(), rng);
  perm.resize(static_cast<size_t>(count));
  return perm;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

void add_bidirectional(std::vector<LinkRecord>& links, NodeId a, NodeId b, double cap) {
  links.push_back({0, a, b, cap});
  links.push_back({0, b, a, cap});
}

}  // namespace

Topology generate_topology(const TopologyGenSpec& spec) {
  int n = 0;
  std::vector<LinkRecord> links;

  switch (spec.kind) {
    case TopologyGenSpec::Kind::ring: {
      n = spec.n;
      if (n < 3) throw InvalidSpec("ring needs at least 3 nodes");
      for (int v = 0; v < n; ++v) add_bidirectional(links, v, (v + 1) % n, spec.link_capacity_bits);
      break;
    }
    case TopologyGenSpec::Kind::grid: {
      if (spec.rows < 1 || spec.cols < 1) throw InvalidSpec("grid needs rows, cols >= 1");
      n = spec.rows * spec.cols;
      if (n < 2) throw InvalidSpec("grid needs at least 2 nodes");
      auto at = [&](int r, int c) { return r * spec.cols + c; };
      for (int r = 0; r < spec.rows; ++r) {
        for (int c = 0; c < spec.cols; ++c) {
          if (c + 1 < spec.cols) add_bidirectional(links, at(r, c), at(r, c + 1), spec.link_capacity_bits);
          if (r + 1 < spec.rows) add_bidirectional(links, at(r, c), at(r + 1, c), spec.link_capacity_bits);
        }
      }
      break;
    }
    case TopologyGenSpec::Kind::waxman: {
      n = spec.n;
      if (n < 2) throw InvalidSpec("waxman needs at least 2 nodes");
      if (!(spec.waxman_alpha > 0) || !(spec.waxman_beta > 0))
        throw InvalidSpec("waxman parameters must be > 0");
      std::mt19937_64 rng(mix_seed(spec.seed, 0x7761786d));
      std::vector<double> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) {
        x[static_cast<size_t>(v)] = uniform01(rng);
        y[static_cast<size_t>(v)] = uniform01(rng);
      }
      auto dist2d = [&](int a, int b) {
        return std::hypot(x[static_cast<size_t>(a)] - x[static_cast<size_t>(b)],
                          y[static_cast<size_t>(a)] - y[static_cast<size_t>(b)]);
      };
      const double max_dist = std::sqrt(2.0);
      UnionFind uf(n);
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          double p = spec.waxman_beta * std::exp(-dist2d(a, b) / (spec.waxman_alpha * max_dist));
          if (uniform01(rng) < p) {
            add_bidirectional(links, a, b, spec.link_capacity_bits);
            uf.unite(a, b);
          }
        }
      }
      // Stitch remaining components along the shortest euclidean pairs.
      for (;;) {
        int best_a = -1, best_b = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            if (uf.find(a) != uf.find(b) && dist2d(a, b) < best_d) {
              best_d = dist2d(a, b);
              best_a = a;
              best_b = b;
            }
        if (best_a < 0) break;
        add_bidirectional(links, best_a, best_b, spec.link_capacity_bits);
        uf.unite(best_a, best_b);
      }
      break;
    }
  }

  std::vector<NodeRecord> nodes(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    nodes[static_cast<size_t>(v)].id = v;
    nodes[static_cast<size_t>(v)].roles = kRouter | kUser;
  }
  for (NodeId v : role_members(spec.caching, n, spec.seed)) {
    nodes[static_cast<size_t>(v)].roles |= kCaching;
    nodes[static_cast<size_t>(v)].cache_capacity_bits = spec.cache_capacity_bits;
  }
  for (NodeId v : role_members(spec.computing, n, spec.seed)) {
    nodes[static_cast<size_t>(v)].roles |= kComputing;
    nodes[static_cast<size_t>(v)].compute_capacity_units = spec.compute_capacity_units;
  }
  return Topology(std::move(nodes), std::move(links), spec.gateway, spec.origin_penalty_hops);
}

namespace {

uint8_t roles_from_json(const nlohmann::json& arr) {
  uint8_t roles = 0;
  for (const auto& r : arr) {
    std::string s = r.get<std::string>();
    if (s == "router")
      roles |= kRouter;
    else if (s == "user")
      roles |= kUser;
    else if (s == "caching")
      roles |= kCaching;
    else if (s == "computing")
      roles |= kComputing;
    else
      throw ConfigError("unknown role '" + s + "'");
  }
  return roles;
}

nlohmann::json roles_to_json(uint8_t roles) {
  nlohmann::json arr = nlohmann::json::array();
  if (roles & kRouter) arr.push_back("router");
  if (roles & kUser) arr.push_back("user");
  if (roles & kCaching) arr.push_back("caching");
  if (roles & kComputing) arr.push_back("computing");
  return arr;
}

}  // namespace

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open topology file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("topology json parse error in " + path + ": " + e.what());
  }
  try {
    std::vector<NodeRecord> nodes;
    for (const auto& nj : j.at("nodes")) {
      NodeRecord nr;
      nr.id = nj.at("id").get<int>();
      nr.roles = roles_from_json(nj.at("roles"));
      nr.cache_capacity_bits = nj.value("cache_capacity_bits", 0.0);
      nr.compute_capacity_units = nj.value("compute_capacity_units", 0.0);
      nodes.push_back(nr);
    }
    std::vector<LinkRecord> links;
    for (const auto& lj : j.at("links")) {
      LinkRecord e;
      e.src = lj.at("src").get<int>();
      e.dst = lj.at("dst").get<int>();
      e.capacity_bits = lj.at("capacity_bits").get<double>();
      links.push_back(e);
    }
    const auto& oj = j.at("origin");
    return Topology(std::move(nodes), std::move(links), oj.at("gateway").get<int>(),
                    oj.value("penalty_hops", 3));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("topology schema error in " + path + ": " + e.what());
  }
}

void save_topology(const Topology& topo, const std::string& path) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (const NodeRecord& nr : topo.nodes()) {
    j["nodes"].push_back({{"id", nr.id},
                          {"roles", roles_to_json(nr.roles)},
                          {"cache_capacity_bits", nr.cache_capacity_bits},
                          {"compute_capacity_units", nr.compute_capacity_units}});
  }
  j["links"] = nlohmann::json::array();
  for (const LinkRecord& e : topo.links())
    j["links"].push_back({{"src", e.src}, {"dst", e.dst}, {"capacity_bits", e.capacity_bits}});
  j["origin"] = {{"gateway", topo.gateway()}, {"penalty_hops", topo.origin_penalty_hops()}};
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write topology file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace sdncc
