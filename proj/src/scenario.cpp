#include "sdncc/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <numeric>
#include <set>

#include "json.hpp"
#include "sdncc/errors.hpp"
#include "sdncc/hop_law.hpp"
#include "sdncc/server_select.hpp"

namespace sdncc {

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& context) {
  if (!j.is_object()) throw ConfigError(context + " must be a json object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + context);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw ConfigError("json parse error in " + path + ": " + e.what());
  }
}

std::string resolve(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

RoleAssign parse_role(const json& spec, const std::string& context) {
  RoleAssign out;
  if (spec.is_string()) {
    if (spec.get<std::string>() != "all")
      throw ConfigError(context + " must be \"all\", a count, or a node list");
    return out;
  }
  if (spec.is_number()) {
    out.count = spec.get<int>();
    return out;
  }
  if (spec.is_array()) {
    for (const auto& v : spec) out.nodes.push_back(v.get<int>());
    if (out.nodes.empty()) throw ConfigError(context + " node list must not be empty");
    return out;
  }
  throw ConfigError(context + " must be \"all\", a count, or a node list");
}

TopologyGenSpec parse_generator(const json& j, uint64_t seed) {
  check_keys(j,
             {"kind", "n", "rows", "cols", "waxman_alpha", "waxman_beta", "link_capacity_bits",
              "cache_capacity_bits", "compute_capacity_units", "caching", "computing", "origin"},
             "topology.generator");
  TopologyGenSpec spec;
  spec.seed = seed;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "ring")
    spec.kind = TopologyGenSpec::Kind::ring;
  else if (kind == "grid")
    spec.kind = TopologyGenSpec::Kind::grid;
  else if (kind == "waxman")
    spec.kind = TopologyGenSpec::Kind::waxman;
  else
    throw ConfigError("unknown topology generator kind '" + kind + "'");

  if (spec.kind == TopologyGenSpec::Kind::grid) {
    spec.rows = j.at("rows").get<int>();
    spec.cols = j.at("cols").get<int>();
  } else {
    spec.n = j.at("n").get<int>();
  }
  if (j.contains("waxman_alpha")) spec.waxman_alpha = j.at("waxman_alpha").get<double>();
  if (j.contains("waxman_beta")) spec.waxman_beta = j.at("waxman_beta").get<double>();
  if (j.contains("link_capacity_bits")) spec.link_capacity_bits = j.at("link_capacity_bits").get<double>();
  if (j.contains("cache_capacity_bits")) spec.cache_capacity_bits = j.at("cache_capacity_bits").get<double>();
  if (j.contains("compute_capacity_units"))
    spec.compute_capacity_units = j.at("compute_capacity_units").get<double>();
  if (j.contains("caching")) spec.caching = parse_role(j.at("caching"), "topology.generator.caching");
  if (j.contains("computing"))
    spec.computing = parse_role(j.at("computing"), "topology.generator.computing");
  if (j.contains("origin")) {
    check_keys(j.at("origin"), {"gateway", "penalty_hops"}, "topology.generator.origin");
    spec.gateway = j.at("origin").value("gateway", 0);
    spec.origin_penalty_hops = j.at("origin").value("penalty_hops", 3);
  }
  return spec;
}

void parse_size_field(const json& j, const char* key, double& lo, double& hi) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if (v.is_array()) {
    if (v.size() != 2) throw ConfigError(std::string(key) + " range must be [min, max]");
    lo = v[0].get<double>();
    hi = v[1].get<double>();
  } else {
    lo = hi = v.get<double>();
  }
}

CatalogGenSpec parse_catalog_gen(const json& j) {
  check_keys(j,
             {"contents", "computations", "total_requests", "zipf_exponent", "content_size_bits",
              "comp_data_bits", "comp_workload_units"},
             "catalog.catalog_gen");
  CatalogGenSpec spec;
  spec.contents = j.at("contents").get<int>();
  spec.computations = j.at("computations").get<int>();
  spec.total_requests = j.at("total_requests").get<double>();
  spec.zipf_exponent = j.value("zipf_exponent", 0.0);
  parse_size_field(j, "content_size_bits", spec.sizes.content_bits_min, spec.sizes.content_bits_max);
  parse_size_field(j, "comp_data_bits", spec.sizes.comp_data_bits_min, spec.sizes.comp_data_bits_max);
  parse_size_field(j, "comp_workload_units", spec.sizes.workload_units_min,
                   spec.sizes.workload_units_max);
  return spec;
}

ServiceCatalog parse_catalog_inline(const json& j) {
  ServiceCatalog catalog;
  if (j.contains("contents")) {
    for (const auto& cj : j.at("contents")) {
      check_keys(cj, {"id", "popularity", "size_bits"}, "catalog content item");
      catalog.contents.push_back(
          {cj.at("id").get<std::string>(), cj.at("popularity").get<double>(),
           cj.at("size_bits").get<double>()});
    }
  }
  if (j.contains("computations")) {
    for (const auto& cj : j.at("computations")) {
      check_keys(cj, {"id", "popularity", "data_volume_bits", "workload_units"},
                 "catalog computation item");
      catalog.computations.push_back(
          {cj.at("id").get<std::string>(), cj.at("popularity").get<double>(),
           cj.at("data_volume_bits").get<double>(), cj.at("workload_units").get<double>()});
    }
  }
  catalog.validate();
  return catalog;
}

EnergyParams parse_energy(const json& j, const std::string& base_dir) {
  static const std::set<std::string> keys = {
      "file",        "p_tr_link_j_per_bit", "p_tr_node_j_per_bit", "p_ca_w_per_bit",
      "p_static_w",  "p_active_j_per_unit", "t_s",                 "gamma",
      "eta"};
  check_keys(j, keys, "energy");
  EnergyParams params;
  json merged = json::object();
  if (j.contains("file")) {
    json pack = load_json(resolve(base_dir, j.at("file").get<std::string>()));
    check_keys(pack, keys, "energy pack file");
    merged.update(pack);
  }
  merged.update(j);
  merged.erase("file");
  if (merged.contains("p_tr_link_j_per_bit")) params.p_tr_link_j_per_bit = merged["p_tr_link_j_per_bit"];
  if (merged.contains("p_tr_node_j_per_bit")) params.p_tr_node_j_per_bit = merged["p_tr_node_j_per_bit"];
  if (merged.contains("p_ca_w_per_bit")) params.p_ca_w_per_bit = merged["p_ca_w_per_bit"];
  if (merged.contains("p_static_w")) params.p_static_w = merged["p_static_w"];
  if (merged.contains("p_active_j_per_unit")) params.p_active_j_per_unit = merged["p_active_j_per_unit"];
  if (merged.contains("t_s")) params.duration_s = merged["t_s"];
  if (merged.contains("gamma")) params.gamma = merged["gamma"];
  if (merged.contains("eta")) params.eta = merged["eta"];
  params.validate();
  return params;
}

}  // namespace

namespace {
Scenario parse_scenario(const json& j, const std::string& path);
}

Scenario load_scenario(const std::string& path) {
  json j = load_json(path);
  try {
    return parse_scenario(j, path);
  } catch (const json::exception& e) {
    throw ConfigError("scenario schema error in " + path + ": " + e.what());
  }
}

namespace {

Scenario parse_scenario(const json& j, const std::string& path) {
  check_keys(j, {"schema", "id", "seed", "topology", "catalog", "demand", "energy", "solver", "sweep"},
             "scenario");
  if (!j.contains("schema") || j.at("schema").get<int>() != 1)
    throw ConfigError("scenario requires \"schema\": 1");
  if (!j.contains("seed")) throw ConfigError("scenario requires a seed");

  Scenario scenario;
  std::string base_dir = std::filesystem::path(path).parent_path().string();
  scenario.id = j.value("id", std::filesystem::path(path).stem().string());
  scenario.seed = j.at("seed").get<uint64_t>();

  const json& tj = j.at("topology");
  check_keys(tj, {"file", "generator"}, "topology");
  if (tj.contains("generator") == tj.contains("file"))
    throw ConfigError("topology needs exactly one of 'file' or 'generator'");
  if (tj.contains("generator"))
    scenario.topo_gen = parse_generator(tj.at("generator"), scenario.seed);
  else
    scenario.topo_file = resolve(base_dir, tj.at("file").get<std::string>());

  const json& cj = j.at("catalog");
  check_keys(cj, {"catalog_gen", "contents", "computations"}, "catalog");
  if (cj.contains("catalog_gen")) {
    if (cj.contains("contents") || cj.contains("computations"))
      throw ConfigError("catalog is either generated or inline, not both");
    scenario.catalog_gen = parse_catalog_gen(cj.at("catalog_gen"));
  } else {
    scenario.catalog_inline = parse_catalog_inline(cj);
  }

  if (j.contains("demand")) {
    const json& dj = j.at("demand");
    check_keys(dj, {"users", "weights", "per_service_gbps"}, "demand");
    if (dj.contains("users") && dj.at("users").is_array())
      for (const auto& v : dj.at("users")) scenario.demand.users.push_back(v.get<int>());
    else if (dj.contains("users") && dj.at("users").get<std::string>() != "all")
      throw ConfigError("demand.users must be \"all\" or a node list");
    if (dj.contains("weights") && dj.at("weights").is_array())
      for (const auto& v : dj.at("weights")) scenario.demand.weights.push_back(v.get<double>());
    else if (dj.contains("weights") && dj.at("weights").get<std::string>() != "uniform")
      throw ConfigError("demand.weights must be \"uniform\" or a weight list");
    if (dj.contains("per_service_gbps"))
      scenario.demand.per_service_gbps = dj.at("per_service_gbps").get<double>();
  }

  scenario.energy = parse_energy(j.at("energy"), base_dir);

  if (j.contains("solver")) {
    const json& sj = j.at("solver");
    check_keys(sj, {"method", "mode", "budget"}, "solver");
    scenario.solver.method = sj.value("method", "greedy");
    if (scenario.solver.method != "exhaustive" && scenario.solver.method != "greedy" &&
        scenario.solver.method != "baseline")
      throw ConfigError("solver.method must be exhaustive, greedy, or baseline");
    std::string mode = sj.value("mode", "lp");
    if (mode == "lp")
      scenario.solver.mode = SelectMode::lp;
    else if (mode == "uncapacitated")
      scenario.solver.mode = SelectMode::uncapacitated;
    else
      throw ConfigError("solver.mode must be lp or uncapacitated");
    if (sj.contains("budget")) scenario.solver.budget = BigInt(sj.at("budget").get<long>());
  }

  if (j.contains("sweep")) {
    const json& wj = j.at("sweep");
    check_keys(wj, {"parameter", "values"}, "sweep");
    scenario.sweep.parameter = wj.at("parameter").get<std::string>();
    if (scenario.sweep.parameter != "server_count" && scenario.sweep.parameter != "gamma" &&
        scenario.sweep.parameter != "popularity")
      throw ConfigError("sweep.parameter must be server_count, gamma, or popularity");
    for (const auto& v : wj.at("values")) scenario.sweep.values.push_back(v.get<double>());
    if (scenario.sweep.values.empty()) throw ConfigError("sweep.values must not be empty");
  }
  return scenario;
}

}  // namespace

Topology build_topology(const Scenario& scenario, const BuildOverrides& overrides) {
  if (scenario.topo_gen.has_value()) {
    TopologyGenSpec spec = *scenario.topo_gen;
    if (overrides.server_count.has_value()) {
      spec.caching = RoleAssign{*overrides.server_count, {}};
      spec.computing = RoleAssign{*overrides.server_count, {}};
    }
    return generate_topology(spec);
  }
  if (overrides.server_count.has_value())
    throw ConfigError("server_count sweeps require a generated topology");
  return load_topology(scenario.topo_file);
}

ServiceCatalog build_catalog(const Scenario& scenario) {
  ServiceCatalog catalog;
  if (scenario.catalog_gen.has_value()) {
    const CatalogGenSpec& g = *scenario.catalog_gen;
    catalog = zipf_catalog(g.contents, g.computations, g.total_requests, g.zipf_exponent,
                           g.sizes, scenario.seed);
  } else {
    catalog = *scenario.catalog_inline;
  }
  if (scenario.demand.per_service_gbps.has_value()) {
    // Every service moves the same volume per window; sizes absorb the
    // popularity differences.
    double volume = *scenario.demand.per_service_gbps * 1e9 * scenario.energy.duration_s;
    for (ContentItem& c : catalog.contents) {
      if (!(c.popularity > 0))
        throw ConfigError("per_service_gbps requires positive popularity for " + c.id);
      c.size_bits = volume / c.popularity;
    }
    for (ComputationItem& c : catalog.computations) {
      if (!(c.popularity > 0))
        throw ConfigError("per_service_gbps requires positive popularity for " + c.id);
      c.data_volume_bits = volume / c.popularity;
    }
  }
  return catalog;
}

Instance build_instance(const Scenario& scenario, const BuildOverrides& overrides) {
  Topology topo = build_topology(scenario, overrides);
  ServiceCatalog catalog = build_catalog(scenario);

  std::vector<NodeId> users = scenario.demand.users;
  if (users.empty()) users = topo.users();
  for (NodeId u : users)
    if (u < 0 || u >= topo.node_count())
      throw ConfigError("demand user " + std::to_string(u) + " is not a node");
  DemandMatrix demand = spread_demand(catalog, users, scenario.demand.weights);

  EnergyParams params = scenario.energy;
  if (overrides.gamma.has_value()) params.gamma = *overrides.gamma;
  return make_instance(std::move(topo), std::move(catalog), std::move(demand), params);
}

HopLawFit fit_instance_hop_law(const Topology& topo, uint64_t seed) {
  HopLawOptions options;
  options.seed = seed;
  options.candidates.resize(static_cast<size_t>(topo.node_count()));
  std::iota(options.candidates.begin(), options.candidates.end(), 0);
  return fit_hop_law(topo, options);
}

namespace {

ResultRow make_row(const Scenario& scenario, const std::string& method, double sweep_value,
                   const Instance& instance, const SearchResult& result, long runtime_ms) {
  ResultRow row;
  row.scenario_id = scenario.id;
  row.sweep_parameter = scenario.sweep.parameter.empty() ? "none" : scenario.sweep.parameter;
  row.sweep_value = sweep_value;
  row.method = method;
  row.n_servers = static_cast<int>(instance.topo.server_nodes().size());
  row.traffic_per_s = result.cost.usage / instance.params.duration_s;
  row.caching_j = result.cost.caching_j;
  row.computing_j = result.cost.computing_j;
  row.transmission_j = result.cost.transmission_j;
  row.total_cost = result.cost.total;
  row.runtime_ms = runtime_ms;
  row.q = result.q.str();
  row.evaluated = result.evaluated;
  row.infeasible = result.capacity_infeasible + result.link_infeasible;
  return row;
}

SearchResult run_method(const Scenario& scenario, const Instance& instance,
                        const std::string& method) {
  if (method == "baseline") return baseline_origin(instance);

  HopLawFit fit = fit_instance_hop_law(instance.topo, scenario.seed);
  CopyAllocation counts =
      allocate_copies(instance.catalog, fit, instance.params, instance.topo.node_count());
  SearchOptions options;
  options.mode = scenario.solver.mode;
  options.budget = scenario.solver.budget;
  if (method == "greedy") return greedy_placement(counts, instance, options);
  SearchSpace space = enumerate_space(counts, instance.topo, instance.catalog, options);
  return exhaustive_search(space, instance, options);
}

// The baseline is a forced assignment: its link overloads are reported by
// link_loads, not enforced, so only coverage and box residuals gate it.
void ensure_verified(const Instance& instance, const SearchResult& result, bool enforce_capacity) {
  SelectionProblem problem{&instance, &result.placement};
  VerifyReport report = verify_solution(problem, result.selection);
  bool ok = enforce_capacity ? report.clean()
                             : report.max_coverage_violation <= 1e-9 &&
                                   report.max_box_violation <= 1e-9;
  if (!ok) throw std::runtime_error("solver output failed verification: " + report.summary());
}

}  // namespace

std::vector<ResultRow> run_scenario(const Scenario& scenario) {
  if (scenario.sweep.parameter == "popularity")
    throw ConfigError("popularity sweeps use the fig3 command");

  std::vector<double> values = scenario.sweep.values;
  if (values.empty()) values.push_back(0.0);

  auto run_point = [&scenario](double value) {
    BuildOverrides overrides;
    if (scenario.sweep.parameter == "server_count") overrides.server_count = static_cast<int>(value);
    if (scenario.sweep.parameter == "gamma") overrides.gamma = value;
    Instance instance = build_instance(scenario, overrides);

    std::vector<ResultRow> point_rows;
    auto start = std::chrono::steady_clock::now();
    SearchResult result = run_method(scenario, instance, scenario.solver.method);
    long elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    ensure_verified(instance, result, scenario.solver.method != "baseline");
    point_rows.push_back(make_row(scenario, scenario.solver.method, value, instance, result, elapsed));

    if (scenario.solver.method != "baseline") {
      auto base_start = std::chrono::steady_clock::now();
      SearchResult base = baseline_origin(instance);
      long base_elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - base_start)
                              .count();
      ensure_verified(instance, base, false);
      point_rows.push_back(make_row(scenario, "baseline", value, instance, base, base_elapsed));
    }
    return point_rows;
  };

  // Sweep points run concurrently; rows are emitted in sweep order.
  std::vector<std::future<std::vector<ResultRow>>> futures;
  futures.reserve(values.size());
  for (double value : values)
    futures.push_back(std::async(std::launch::async, run_point, value));
  std::vector<ResultRow> rows;
  for (auto& f : futures)
    for (ResultRow& row : f.get()) rows.push_back(std::move(row));
  return rows;
}

std::vector<ResultRow> experiment_fig2(Scenario scenario) {
  scenario.solver.method = "greedy";
  if (scenario.sweep.parameter.empty()) {
    scenario.sweep.parameter = "server_count";
    scenario.sweep.values = {2, 4, 8, 16, 32, 64};
  }
  if (scenario.sweep.parameter != "server_count")
    throw ConfigError("fig2 expects a server_count sweep");
  return run_scenario(scenario);
}

std::vector<PopularitySweepRow> experiment_fig3(const Scenario& scenario) {
  if (scenario.sweep.parameter != "popularity")
    throw ConfigError("fig3 expects a popularity sweep");

  Topology topo = build_topology(scenario, {});
  ServiceCatalog catalog = build_catalog(scenario);
  if (catalog.f1() < 1 || catalog.f2() < 1)
    throw ConfigError("fig3 needs at least one content and one computation");
  HopLawFit fit = fit_instance_hop_law(topo, scenario.seed);
  const int n = topo.node_count();

  std::vector<PopularitySweepRow> rows;
  for (double lambda : scenario.sweep.values) {
    ContentItem content = catalog.contents.front();
    content.popularity = lambda;
    ComputationItem computation = catalog.computations.front();
    computation.popularity = lambda;

    PopularitySweepRow row;
    row.lambda = lambda;
    CopyCount cc = optimal_content_copies(content, fit, scenario.energy, n);
    row.content_raw = cc.raw;
    row.content_star = cc.clamped;
    row.content_oracle = oracle_content_copies(content, fit, scenario.energy, n);
    CopyCount mm = optimal_vm_copies(computation, fit, scenario.energy, n);
    row.vm_raw = mm.raw;
    row.vm_star = mm.clamped;
    row.vm_oracle = oracle_vm_copies(computation, fit, scenario.energy, n);
    rows.push_back(row);
  }
  return rows;
}

std::vector<AllocRow> allocation_table(const Scenario& scenario) {
  Topology topo = build_topology(scenario, {});
  ServiceCatalog catalog = build_catalog(scenario);
  HopLawFit fit = fit_instance_hop_law(topo, scenario.seed);
  const int n = topo.node_count();

  std::vector<AllocRow> rows;
  for (const ContentItem& item : catalog.contents) {
    CopyCount cc = optimal_content_copies(item, fit, scenario.energy, n);
    rows.push_back({item.id, "content", item.popularity, cc.raw, cc.clamped, cc.rounded,
                    oracle_content_copies(item, fit, scenario.energy, n), cc.degenerate});
  }
  for (const ComputationItem& item : catalog.computations) {
    CopyCount cc = optimal_vm_copies(item, fit, scenario.energy, n);
    rows.push_back({item.id, "computation", item.popularity, cc.raw, cc.clamped, cc.rounded,
                    oracle_vm_copies(item, fit, scenario.energy, n), cc.degenerate});
  }
  return rows;
}

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_scenario_header(std::ofstream& out, const Scenario& scenario) {
  const EnergyParams& p = scenario.energy;
  out << "# sdncc results v1\n";
  out << "# scenario = " << scenario.id << "\n";
  out << "# seed = " << scenario.seed << "\n";
  out << "# method = " << scenario.solver.method << "\n";
  out << "# p_tr_link_j_per_bit = " << format_number(p.p_tr_link_j_per_bit) << "\n";
  out << "# p_tr_node_j_per_bit = " << format_number(p.p_tr_node_j_per_bit) << "\n";
  out << "# p_ca_w_per_bit = " << format_number(p.p_ca_w_per_bit) << "\n";
  out << "# p_static_w = " << format_number(p.p_static_w) << "\n";
  out << "# p_active_j_per_unit = " << format_number(p.p_active_j_per_unit) << "\n";
  out << "# t_s = " << format_number(p.duration_s) << "\n";
  out << "# gamma = " << format_number(p.gamma) << "\n";
  out << "# eta = " << format_number(p.eta) << "\n";
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // fixed newlines across platforms
  if (!out) throw ConfigError("cannot write output file: " + path);
  return out;
}

}  // namespace

void write_result_csv(const std::string& path, const Scenario& scenario,
                      const std::vector<ResultRow>& rows, bool include_timings) {
  std::ofstream out = open_csv(path);
  write_scenario_header(out, scenario);
  out << "# traffic_per_s is latency-weighted bits per second; energies in joules\n";
  out << "scenario,sweep_parameter,sweep_value,method,n_servers,traffic_per_s,"
         "caching_j,computing_j,transmission_j,total_cost,runtime_ms,q,evaluated,infeasible\n";
  for (const ResultRow& r : rows) {
    out << r.scenario_id << ',' << r.sweep_parameter << ',' << format_number(r.sweep_value) << ','
        << r.method << ',' << r.n_servers << ',' << format_number(r.traffic_per_s) << ','
        << format_number(r.caching_j) << ',' << format_number(r.computing_j) << ','
        << format_number(r.transmission_j) << ',' << format_number(r.total_cost) << ','
        << (include_timings ? r.runtime_ms : 0) << ',' << r.q << ',' << r.evaluated << ','
        << r.infeasible << "\n";
  }
}

void write_popularity_csv(const std::string& path, const Scenario& scenario,
                          const std::vector<PopularitySweepRow>& rows) {
  std::ofstream out = open_csv(path);
  write_scenario_header(out, scenario);
  out << "# copy counts: raw stationary point, star = clamped to [1,N], oracle = grid argmin\n";
  out << "lambda,content_n_raw,content_n_star,content_n_oracle,vm_m_raw,vm_m_star,vm_m_oracle\n";
  for (const PopularitySweepRow& r : rows) {
    out << format_number(r.lambda) << ',' << format_number(r.content_raw) << ','
        << format_number(r.content_star) << ',' << r.content_oracle << ','
        << format_number(r.vm_raw) << ',' << format_number(r.vm_star) << ',' << r.vm_oracle
        << "\n";
  }
}

void write_alloc_csv(const std::string& path, const Scenario& scenario,
                     const std::vector<AllocRow>& rows) {
  std::ofstream out = open_csv(path);
  write_scenario_header(out, scenario);
  out << "service,kind,lambda,copies_raw,copies_star,copies_rounded,copies_oracle,degenerate\n";
  for (const AllocRow& r : rows) {
    out << r.service << ',' << r.kind << ',' << format_number(r.lambda) << ','
        << format_number(r.raw) << ',' << format_number(r.clamped) << ',' << r.rounded << ','
        << r.oracle << ',' << (r.degenerate ? 1 : 0) << "\n";
  }
}

void write_hoplaw_csv(const std::string& path, const HopLawFit& fit) {
  std::ofstream out = open_csv(path);
  out << "# A = " << format_number(fit.scale_hops) << "\n";
  out << "# alpha = " << format_number(fit.exponent) << "\n";
  out << "# residual = " << format_number(fit.residual) << "\n";
  out << "# n_nodes = " << fit.n_nodes << "\n";
  out << "n,d_measured,d_fitted\n";
  for (const auto& [n, d] : fit.samples)
    out << n << ',' << format_number(d) << ',' << format_number(fit.predict(n)) << "\n";
}

}  // namespace sdncc
