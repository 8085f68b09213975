#include "sdncc/catalog.hpp"

#include <cmath>
#include <random>
#include <set>

#include "sdncc/errors.hpp"
#include "sdncc/util.hpp"

namespace sdncc {

double ServiceCatalog::popularity(int k) const {
  return is_content(k) ? content(k).popularity : computation(k).popularity;
}

double ServiceCatalog::traffic_bits(int k) const {
  return is_content(k) ? content(k).size_bits : computation(k).data_volume_bits;
}

const std::string& ServiceCatalog::service_id(int k) const {
  return is_content(k) ? content(k).id : computation(k).id;
}

void ServiceCatalog::validate() const {
  std::set<std::string> ids;
  for (const ContentItem& c : contents) {
    if (c.popularity < 0) throw InvalidSpec("content popularity must be >= 0");
    if (!(c.size_bits > 0)) throw InvalidSpec("content size must be > 0");
    if (!ids.insert(c.id).second) throw InvalidSpec("duplicate service id: " + c.id);
  }
  for (const ComputationItem& c : computations) {
    if (c.popularity < 0) throw InvalidSpec("computation popularity must be >= 0");
    if (!(c.data_volume_bits > 0)) throw InvalidSpec("computation data volume must be > 0");
    if (!(c.workload_units > 0)) throw InvalidSpec("computation workload must be > 0");
    if (!ids.insert(c.id).second) throw InvalidSpec("duplicate service id: " + c.id);
  }
}

namespace {

std::vector<double> zipf_weights(int count, double exponent, double total) {
  std::vector<double> w(static_cast<size_t>(count));
  double sum = 0.0;
  for (int r = 0; r < count; ++r) {
    w[static_cast<size_t>(r)] = std::pow(static_cast<double>(r + 1), -exponent);
    sum += w[static_cast<size_t>(r)];
  }
  for (double& v : w) v *= total / sum;
  return w;
}

double draw(std::mt19937_64& rng, double lo, double hi) {
  if (lo == hi) return lo;
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

}  // namespace

ServiceCatalog zipf_catalog(int f1, int f2, double total_requests, double exponent,
                            const SizeSpec& size_spec, uint64_t seed) {
  if (f1 < 0 || f2 < 0) throw InvalidSpec("catalog sizes must be >= 0");
  if (exponent < 0) throw InvalidSpec("zipf exponent must be >= 0");
  if (total_requests < 0) throw InvalidSpec("total requests must be >= 0");
  if (size_spec.content_bits_min <= 0 || size_spec.comp_data_bits_min <= 0 ||
      size_spec.workload_units_min <= 0 || size_spec.content_bits_max < size_spec.content_bits_min ||
      size_spec.comp_data_bits_max < size_spec.comp_data_bits_min ||
      size_spec.workload_units_max < size_spec.workload_units_min)
    throw InvalidSpec("size spec bounds must be positive and ordered");

  ServiceCatalog catalog;
  std::mt19937_64 rng(mix_seed(seed, 0x636174));
  if (f1 > 0) {
    std::vector<double> lambda = zipf_weights(f1, exponent, total_requests);
    for (int r = 0; r < f1; ++r) {
      ContentItem c;
      c.id = "content-" + std::to_string(r);
      c.popularity = lambda[static_cast<size_t>(r)];
      c.size_bits = draw(rng, size_spec.content_bits_min, size_spec.content_bits_max);
      catalog.contents.push_back(c);
    }
  }
  if (f2 > 0) {
    std::vector<double> lambda = zipf_weights(f2, exponent, total_requests);
    for (int r = 0; r < f2; ++r) {
      ComputationItem c;
      c.id = "compute-" + std::to_string(r);
      c.popularity = lambda[static_cast<size_t>(r)];
      c.data_volume_bits = draw(rng, size_spec.comp_data_bits_min, size_spec.comp_data_bits_max);
      c.workload_units = draw(rng, size_spec.workload_units_min, size_spec.workload_units_max);
      catalog.computations.push_back(c);
    }
  }
  catalog.validate();
  return catalog;
}

double DemandMatrix::total() const {
  double sum = 0.0;
  for (const std::vector<double>& row : m)
    for (double v : row) sum += v;
  return sum;
}

DemandMatrix spread_demand(const ServiceCatalog& catalog, const std::vector<NodeId>& users,
                           std::vector<double> weights) {
  if (users.empty()) throw NoUsers("demand needs at least one user");
  std::set<NodeId> unique(users.begin(), users.end());
  if (unique.size() != users.size()) throw InvalidSpec("duplicate user node in demand spec");

  if (weights.empty()) {
    weights.assign(users.size(), 1.0 / static_cast<double>(users.size()));
  } else {
    if (weights.size() != users.size()) throw InvalidSpec("one weight per user required");
    double sum = 0.0;
    for (double w : weights) {
      if (w < 0) throw InvalidSpec("demand weights must be >= 0");
      sum += w;
    }
    if (!(sum > 0)) throw InvalidSpec("demand weights must not all be zero");
    for (double& w : weights) w /= sum;
  }

  DemandMatrix demand;
  demand.users = users;
  demand.m.assign(static_cast<size_t>(catalog.service_count()),
                  std::vector<double>(users.size(), 0.0));
  for (int k = 0; k < catalog.service_count(); ++k) {
    double volume = catalog.demand_volume(k);
    for (size_t u = 0; u < users.size(); ++u)
      demand.m[static_cast<size_t>(k)][u] = weights[u] * volume;
  }
  return demand;
}

}  // namespace sdncc
