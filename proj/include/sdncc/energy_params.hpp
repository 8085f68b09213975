#ifndef SDNCC_ENERGY_PARAMS_HPP
#define SDNCC_ENERGY_PARAMS_HPP

namespace sdncc {

// Power/energy densities and the cost weights. Units are carried in the
// field names; demand volumes and link capacities are bits per duration_s.
struct EnergyParams {
  double p_tr_link_j_per_bit = 0.15e-8;  // per-hop link transport energy
  double p_tr_node_j_per_bit = 2e-8;     // per-node forwarding energy
  double p_ca_w_per_bit = 0.25e-8;       // cache power density
  double p_static_w = 50.0;              // idle power of one service VM copy
  double p_active_j_per_unit = 1e-9;     // processing energy per workload unit
  double duration_s = 3600.0;            // accounting window t
  double gamma = 1.0;                    // weight of network usage vs energy
  double eta = 1.0;                      // latency units per hop

  void validate() const;  // throws InvalidSpec

  // Energy to move one bit across d hops: link energy per hop plus node
  // energy at each of the d+1 nodes touched.
  double per_bit_energy(double hops) const {
    return p_tr_link_j_per_bit * hops + p_tr_node_j_per_bit * (hops + 1.0);
  }
};

}  // namespace sdncc

#endif
