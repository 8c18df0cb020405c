#include "rqte/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "rqte/dirac.hpp"
#include "rqte/flow.hpp"
#include "rqte/quantization.hpp"
#include "rqte/version.hpp"
#include "rqte/wavepacket.hpp"

namespace rqte::scenarios {

namespace {

using nlohmann::json;

struct ScenarioDef {
  Scenario id;
  const char* name;
};

constexpr ScenarioDef kScenarios[] = {
    {Scenario::Packet, "packet"},     {Scenario::Dirac, "dirac"},
    {Scenario::Dispersion, "dispersion"}, {Scenario::Harmonic, "harmonic"},
    {Scenario::Box, "box"},           {Scenario::String, "string"},
    {Scenario::Flowtest, "flowtest"},
};

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double num(const json& params, const char* key) { return params.at(key).get<double>(); }
int inum(const json& params, const char* key) { return params.at(key).get<int>(); }

struct ScenarioRun {
  Table table;
  std::string summary;
};

ScenarioRun run_harmonic(const json& p) {
  const PhysicalConstants kc = natural_units();
  const QuantizationResult r = harmonic_levels(num(p, "m"), num(p, "omega"), num(p, "x0"),
                                               inum(p, "n_max"), kc, num(p, "dt"));
  ScenarioRun out;
  out.table.columns = {"n", "lambda"};
  for (const Level& level : r.levels) {
    out.table.add_row({static_cast<std::int64_t>(level.n), level.lambda});
  }
  std::ostringstream s;
  s << "harmonic: " << r.levels.size() << " levels, period=" << r.period
    << ", orbit action residual=" << r.action_residual;
  out.summary = s.str();
  return out;
}

ScenarioRun run_box(const json& p) {
  const PhysicalConstants kc = natural_units();
  const QuantizationResult r = box_levels(num(p, "l"), num(p, "m"), inum(p, "n_max"), kc);
  ScenarioRun out;
  out.table.columns = {"n", "lambda"};
  for (const Level& level : r.levels) {
    out.table.add_row({static_cast<std::int64_t>(level.n), level.lambda});
  }
  out.summary = "box: " + std::to_string(r.levels.size()) + " levels";
  return out;
}

ScenarioRun run_dirac(const json& p) {
  const PhysicalConstants kc = natural_units();
  const std::array<double, 3> v{num(p, "vx"), num(p, "vy"), num(p, "vz")};
  const SpinorSet spinors = build_spinors(v, num(p, "m"), kc);
  const RelationReport report = verify_relation_table(spinors, kc);

  ScenarioRun out;
  out.table.columns = {"idx", "relation", "expected", "value_re", "value_im", "residual"};
  std::int64_t idx = 0;
  for (const RelationRow& row : report.rows) {
    out.table.add_row({idx++, row.name, row.expected, row.value.real(), row.value.imag(),
                       row.residual});
  }
  std::ostringstream s;
  s << "dirac: gamma=" << spinors.gamma << ", max residual=" << report.max_residual;
  out.summary = s.str();
  return out;
}

ScenarioRun run_dispersion(const json& p) {
  const PhysicalConstants kc = natural_units();
  const double m = num(p, "m");
  const double k_max = num(p, "k_max");
  const int count = inum(p, "count");
  if (count < 1) throw ValidationError("dispersion: count must be >= 1");
  if (!(k_max > 0.0)) throw ValidationError("dispersion: k_max must be positive");

  std::mt19937_64 rng(p.at("seed").get<std::uint64_t>());
  std::uniform_real_distribution<double> draw(-k_max, k_max);
  std::vector<double> ks(static_cast<std::size_t>(count));
  for (double& k : ks) k = draw(rng);
  std::sort(ks.begin(), ks.end());

  ScenarioRun out;
  out.table.columns = {"k", "u", "gamma", "omega", "energy", "residual_dispersion",
                       "residual_momentum"};
  double max_res = 0.0;
  for (double k : ks) {
    const DeBroglieResult r = debroglie_check(k, m, kc);
    out.table.add_row({k, r.wave.u, r.wave.gamma, r.wave.omega, r.energy,
                       r.residual_dispersion, r.residual_momentum});
    max_res = std::max(max_res, std::max(std::abs(r.residual_dispersion),
                                         std::abs(r.residual_momentum)));
  }
  std::ostringstream s;
  s << "dispersion: " << count << " samples, max |residual|=" << max_res;
  out.summary = s.str();
  return out;
}

ScenarioRun run_packet(const json& p) {
  const PhysicalConstants kc = natural_units();
  const double sigma = num(p, "sigma");
  const double m = num(p, "m");
  const double gamma_c = num(p, "gamma");
  const double t_max = num(p, "t_max");
  const int steps = inum(p, "steps");
  const int nodes = inum(p, "nodes");
  if (!(gamma_c >= 1.0)) throw ValidationError("packet: gamma must be >= 1");
  if (steps < 1) throw ValidationError("packet: steps must be >= 1");
  if (!(t_max >= 0.0)) throw ValidationError("packet: t_max must be >= 0");

  // gamma(k_center) = gamma_c fixes the spectral center.
  const double k_center = m * kc.c * std::sqrt(gamma_c * gamma_c - 1.0) / kc.hbar;

  WavepacketParams boosted;
  boosted.sigma = sigma;
  boosted.m = m;
  boosted.k_center = k_center;
  boosted.nodes = nodes;
  WavepacketParams at_rest = boosted;
  at_rest.k_center = 0.0;

  const PacketQuadrature q_boosted(boosted, kc);
  const PacketQuadrature q_rest(at_rest, kc);

  ScenarioRun out;
  out.table.columns = {"t", "width", "width_gamma1"};
  for (int i = 0; i <= steps; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(steps);
    out.table.add_row({t, packet_width_scan(q_boosted, t), packet_width_scan(q_rest, t)});
  }
  std::ostringstream s;
  s << "packet: gamma=" << gamma_c << ", center velocity=" << q_boosted.center_velocity()
    << ", min mode energy=" << q_boosted.min_node_energy();
  out.summary = s.str();
  return out;
}

ScenarioRun run_string(const json& p) {
  const PhysicalConstants kc = natural_units();
  std::vector<double> lengths;
  for (const auto& v : p.at("ls")) lengths.push_back(v.get<double>());
  if (lengths.empty()) throw ValidationError("string: ls must contain at least one length");

  ScenarioRun out;
  out.table.columns = {"ls",      "rho",     "m",
                       "mu0",     "T0",      "sigma1",
                       "omega_s", "Omega",   "closure_residual",
                       "resonance_unit",     "resonance_factor2"};
  for (double l : lengths) {
    const StringParameters s = string_identities(l, kc);
    out.table.add_row({s.l_s, s.rho, s.m, s.mu0, s.T0, s.sigma1, s.omega_s, s.Omega,
                       s.closure_residual, s.resonance_unit, s.resonance_factor});
  }
  out.summary =
      "string: resonance_unit uses omega_s = rho*c, resonance_factor2 uses "
      "omega_s = 2*rho*c; the conventions differ by the reported factor 2";
  return out;
}

ScenarioRun run_flowtest(const json& p) {
  const double omega = num(p, "omega");
  const double x0 = num(p, "x0");
  if (!(omega > 0.0)) throw ValidationError("flowtest: omega must be positive");

  VelocityFieldSpec orbit;
  orbit.dim = 2;
  orbit.velocity = [omega](const SpacetimePoint& q) {
    FlowVelocity v;
    v.dt = 1.0;
    v.dx = {q.x[1], -omega * omega * q.x[0], 0.0};
    return v;
  };
  orbit.divergence = [](const SpacetimePoint&) { return 0.0; };

  const double T = 2.0 * std::numbers::pi / omega;
  const SpacetimePoint start{0.0, {x0, 0.0, 0.0}};

  ScenarioRun out;
  out.table.columns = {"dt", "period_return_error"};
  for (const auto& v : p.at("dts")) {
    const double dt = v.get<double>();
    if (!(dt > 0.0)) throw ValidationError("flowtest: dt values must be positive");
    const Trajectory traj = integrate_flow(orbit, start, T, dt, /*with_divergence=*/false);
    const SpacetimePoint& end = traj.final_point();
    const double err = std::hypot(end.x[0] - x0, end.x[1]);
    out.table.add_row({dt, err});
  }
  out.summary = "flowtest: period-return error of the closed orbit per step size";
  return out;
}

ScenarioRun dispatch(Scenario s, const json& params) {
  switch (s) {
    case Scenario::Harmonic: return run_harmonic(params);
    case Scenario::Box: return run_box(params);
    case Scenario::Dirac: return run_dirac(params);
    case Scenario::Dispersion: return run_dispersion(params);
    case Scenario::Packet: return run_packet(params);
    case Scenario::String: return run_string(params);
    case Scenario::Flowtest: return run_flowtest(params);
  }
  throw ValidationError("unknown scenario");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file: " + path.string());
  out << content;
  if (!out) throw NumericError("failed writing output file: " + path.string());
}

ScenarioOutput run_resolved(Scenario s, const json& params, const std::filesystem::path& out_dir,
                            OutputFormat format, const std::string& stem) {
  const auto start = std::chrono::steady_clock::now();
  ScenarioRun run = dispatch(s, params);
  const double duration =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  ScenarioOutput out;
  out.table = std::move(run.table);
  out.summary = std::move(run.summary);
  out.manifest = json{{"scenario", scenario_name(s)},
                      {"params", params},
                      {"version", kVersion},
                      {"timestamp", iso_timestamp()},
                      {"duration_s", duration}};

  std::filesystem::create_directories(out_dir);
  const char* ext = format == OutputFormat::Csv ? ".csv" : ".json";
  out.results_path = out_dir / (stem + ext);
  out.manifest_path = out_dir / (stem + "_manifest.json");

  if (format == OutputFormat::Csv) {
    write_file(out.results_path, to_csv(out.table));
  } else {
    write_file(out.results_path, to_json(out.table).dump(2) + "\n");
  }
  write_file(out.manifest_path, out.manifest.dump(2) + "\n");
  return out;
}

}  // namespace

Scenario scenario_from_name(std::string_view name) {
  for (const ScenarioDef& def : kScenarios) {
    if (name == def.name) return def.id;
  }
  throw ValidationError("unknown scenario: " + std::string(name));
}

const char* scenario_name(Scenario s) {
  for (const ScenarioDef& def : kScenarios) {
    if (def.id == s) return def.name;
  }
  return "unknown";
}

json default_params(Scenario s) {
  switch (s) {
    case Scenario::Harmonic:
      return json{{"omega", 1.0}, {"m", 1.0}, {"x0", 1.0}, {"n_max", 10}, {"dt", 1e-3}};
    case Scenario::Box:
      return json{{"l", 1.0}, {"m", 1.0}, {"n_max", 10}};
    case Scenario::Dirac:
      return json{{"vx", 0.0}, {"vy", 0.0}, {"vz", 0.6}, {"m", 1.0}};
    case Scenario::Dispersion:
      return json{{"m", 1.0}, {"count", 100}, {"k_max", 10.0}, {"seed", 12345}};
    case Scenario::Packet:
      return json{{"sigma", 1.0}, {"gamma", 1.0}, {"m", 1.0},
                  {"t_max", 5.0}, {"steps", 25},  {"nodes", 2048}};
    case Scenario::String:
      return json{{"ls", json::array({1.0})}};
    case Scenario::Flowtest:
      return json{{"omega", 2.0}, {"x0", 1.0}, {"dts", json::array({1e-2, 1e-3, 1e-4})}};
  }
  throw ValidationError("unknown scenario");
}

json resolve_params(Scenario s, const json& overrides) {
  json params = default_params(s);
  if (overrides.is_null()) return params;
  if (!overrides.is_object()) {
    throw ValidationError("scenario parameters must be a JSON object");
  }
  for (const auto& [key, value] : overrides.items()) {
    if (!params.contains(key)) {
      throw ValidationError("unknown parameter '" + key + "' for scenario " +
                            scenario_name(s));
    }
    if (params[key].is_number() && !value.is_number()) {
      throw ValidationError("parameter '" + key + "' must be numeric");
    }
    if (params[key].is_array() && !value.is_array()) {
      throw ValidationError("parameter '" + key + "' must be an array");
    }
    params[key] = value;
  }
  return params;
}

json load_config_file(const std::filesystem::path& path, Scenario expected) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ValidationError("config file must hold a JSON object");

  if (doc.contains("scenario") && doc.contains("params")) {
    const std::string name = doc.at("scenario").get<std::string>();
    if (name != scenario_name(expected)) {
      throw ValidationError("config file is for scenario '" + name + "', expected '" +
                            std::string(scenario_name(expected)) + "'");
    }
    return doc.at("params");
  }
  return doc;
}

ScenarioOutput run_scenario(const ScenarioConfig& cfg) {
  const json params = resolve_params(cfg.scenario, cfg.params);
  return run_resolved(cfg.scenario, params, cfg.out_dir, cfg.format, scenario_name(cfg.scenario));
}

ScenarioOutput emit_golden(Scenario s, const std::filesystem::path& out_dir, OutputFormat format) {
  json params = default_params(s);
  switch (s) {
    case Scenario::String:
      params["ls"] = json::array({0.5, 1.0, 2.0});
      break;
    case Scenario::Packet:
      params["gamma"] = 5.0;
      params["t_max"] = 10.0;
      params["steps"] = 50;
      break;
    default:
      break;
  }
  return run_resolved(s, params, out_dir, format, std::string(scenario_name(s)) + "_golden");
}

}  // namespace rqte::scenarios
