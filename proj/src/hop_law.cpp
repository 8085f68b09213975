#include "sdncc/hop_law.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sdncc/errors.hpp"
#include "sdncc/util.hpp"

namespace sdncc {

double HopLawFit::predict(double n) const {
  return scale_hops * std::pow(static_cast<double>(n_nodes) / n, exponent);
}

namespace {

double subset_mean_distance(const Topology& topo, const std::vector<NodeId>& servers) {
  std::vector<int> d = bfs_hops_multi(topo, servers);
  double sum = 0.0;
  for (int v = 0; v < topo.node_count(); ++v) {
    if (d[static_cast<size_t>(v)] == kUnreachable)
      throw DisconnectedGraph("node " + std::to_string(v) + " unreachable from sampled servers");
    sum += d[static_cast<size_t>(v)];
  }
  return sum / topo.node_count();
}

}  // namespace

double measure_avg_distance(const Topology& topo, int n, int num_samples, uint64_t seed,
                            const std::vector<NodeId>& candidates) {
  const int c = static_cast<int>(candidates.size());
  if (n < 1 || n > c) throw InvalidSpec("server count out of range 1..candidates");
  if (num_samples < 1) throw InvalidSpec("num_samples must be >= 1");

  BigInt subsets = binomial(c, n);
  double sum = 0.0;
  if (subsets <= kExactEnumerationLimit) {
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    long count = 0;
    do {
      std::vector<NodeId> servers;
      servers.reserve(static_cast<size_t>(n));
      for (int i : idx) servers.push_back(candidates[static_cast<size_t>(i)]);
      sum += subset_mean_distance(topo, servers);
      ++count;
    } while (next_combination(idx, c));
    return sum / static_cast<double>(count);
  }

  for (int s = 0; s < num_samples; ++s) {
    // One RNG stream per sample index, so the result does not depend on how
    // samples are scheduled.
    std::mt19937_64 rng(mix_seed(seed, static_cast<uint64_t>(s)));
    std::vector<NodeId> pool = candidates;
    for (int i = 0; i < n; ++i) {
      size_t j = static_cast<size_t>(i) + rng() % (pool.size() - static_cast<size_t>(i));
      std::swap(pool[static_cast<size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<size_t>(n));
    sum += subset_mean_distance(topo, pool);
  }
  return sum / num_samples;
}

double measure_avg_distance(const Topology& topo, int n, int num_samples, uint64_t seed) {
  std::vector<NodeId> candidates = topo.server_nodes();
  if (candidates.empty()) {
    candidates.resize(static_cast<size_t>(topo.node_count()));
    std::iota(candidates.begin(), candidates.end(), 0);
  }
  return measure_avg_distance(topo, n, num_samples, seed, candidates);
}

HopLawFit fit_power_law(std::vector<std::pair<int, double>> samples, int n_nodes) {
  if (n_nodes < 1) throw InvalidSpec("fit needs the node count");
  // Sort by n so the fit does not depend on sample ordering.
  std::sort(samples.begin(), samples.end());

  std::vector<double> xs, ys;
  for (const auto& [n, d] : samples) {
    if (n < 1) throw InvalidSpec("sample n must be >= 1");
    if (d <= 0.0) continue;  // excluded before the log transform
    xs.push_back(std::log(static_cast<double>(n_nodes) / n));
    ys.push_back(std::log(d));
  }
  if (xs.size() < 2 || std::equal(xs.begin() + 1, xs.end(), xs.begin()))
    throw InsufficientSamples("power-law fit needs >= 2 samples with distinct n and d > 0");

  const double count = static_cast<double>(xs.size());
  double x_mean = std::accumulate(xs.begin(), xs.end(), 0.0) / count;
  double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / count;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
  }
  HopLawFit fit;
  fit.exponent = sxy / sxx;
  fit.scale_hops = std::exp(y_mean - fit.exponent * x_mean);
  fit.n_nodes = n_nodes;
  fit.samples = std::move(samples);

  double ss = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double r = ys[i] - (std::log(fit.scale_hops) + fit.exponent * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / count);

  if (!(fit.exponent > 0.0))
    throw InvalidSpec("measured distances do not decrease with n; power-law fit rejected");
  return fit;
}

HopLawFit fit_hop_law(const Topology& topo, const HopLawOptions& options) {
  std::vector<NodeId> candidates = options.candidates;
  if (candidates.empty()) {
    candidates = topo.server_nodes();
    if (candidates.empty()) {
      candidates.resize(static_cast<size_t>(topo.node_count()));
      std::iota(candidates.begin(), candidates.end(), 0);
    }
  }
  std::vector<int> grid = options.n_values;
  if (grid.empty()) {
    // Fit on n <= N/2; the model keeps d(N) = A > 0 while full coverage
    // measures 0, so the high-n regime is excluded.
    const int cap = static_cast<int>(candidates.size());
    for (int n = 1; n <= std::max(2, topo.node_count() / 2) && n <= cap; n *= 2)
      grid.push_back(n);
  }
  std::vector<std::pair<int, double>> samples;
  for (int n : grid)
    samples.emplace_back(
        n, measure_avg_distance(topo, n, options.num_samples, options.seed, candidates));
  return fit_power_law(std::move(samples), topo.node_count());
}

}  // namespace sdncc
