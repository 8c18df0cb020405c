#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rqte/errors.hpp"
#include "rqte/scenarios.hpp"
#include "rqte/version.hpp"

namespace {

namespace sc = rqte::scenarios;
using nlohmann::json;

struct SubState {
  sc::Scenario scenario;
  CLI::App* sub = nullptr;
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "csv";
  bool golden = false;

  std::map<std::string, double> doubles;
  std::map<std::string, std::int64_t> ints;
  std::map<std::string, std::vector<double>> vectors;
  std::map<std::string, CLI::Option*> options;
};

std::string flag_name(const std::string& key) {
  std::string flag = "--" + key;
  for (char& c : flag) {
    if (c == '_') c = '-';
  }
  return flag;
}

const char* scenario_help(sc::Scenario s) {
  switch (s) {
    case sc::Scenario::Packet: return "Wavepacket width vs time, boosted and at-rest columns";
    case sc::Scenario::Dirac: return "Spinor bilinear relation table and residuals";
    case sc::Scenario::Dispersion: return "Dispersion / de Broglie closure over random wavenumbers";
    case sc::Scenario::Harmonic: return "Harmonic-oscillator spectrum by orbit phase closure";
    case sc::Scenario::Box: return "Particle-in-a-box spectrum (closed form)";
    case sc::Scenario::String: return "Open-string constants and resonance diagnostics";
    case sc::Scenario::Flowtest: return "Integrator period-return error per step size";
  }
  return "";
}

void add_param_options(SubState& st) {
  const json defaults = sc::default_params(st.scenario);
  for (const auto& [key, value] : defaults.items()) {
    const std::string flag = flag_name(key);
    if (value.is_number_integer()) {
      st.ints[key] = value.get<std::int64_t>();
      st.options[key] = st.sub->add_option(flag, st.ints[key]);
    } else if (value.is_number()) {
      st.doubles[key] = value.get<double>();
      st.options[key] = st.sub->add_option(flag, st.doubles[key]);
    } else if (value.is_array()) {
      st.vectors[key] = value.get<std::vector<double>>();
      st.options[key] = st.sub->add_option(flag, st.vectors[key]);
    }
  }
}

int run(const SubState& st) {
  sc::ScenarioConfig cfg;
  cfg.scenario = st.scenario;
  cfg.out_dir = st.out_dir;
  cfg.format = st.format == "json" ? sc::OutputFormat::Json : sc::OutputFormat::Csv;

  json overrides = json::object();
  if (!st.config_path.empty()) {
    overrides = sc::load_config_file(st.config_path, st.scenario);
  }
  for (const auto& [key, opt] : st.options) {
    if (opt->count() == 0) continue;
    if (st.ints.count(key)) {
      overrides[key] = st.ints.at(key);
    } else if (st.doubles.count(key)) {
      overrides[key] = st.doubles.at(key);
    } else {
      overrides[key] = st.vectors.at(key);
    }
  }
  cfg.params = overrides;

  sc::ScenarioOutput out;
  if (st.golden) {
    if (!overrides.empty()) {
      std::cerr << "rqte: note: --golden uses canonical parameters; overrides ignored\n";
    }
    out = sc::emit_golden(st.scenario, cfg.out_dir, cfg.format);
  } else {
    out = sc::run_scenario(cfg);
  }

  std::cout << out.summary << '\n';
  std::cout << "results:  " << out.results_path.string() << '\n';
  std::cout << "manifest: " << out.manifest_path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rqte: numerical laboratory for proper-time wavefunction transport"};
  app.set_version_flag("--version", std::string(rqte::kVersion));
  app.require_subcommand(1);

  std::vector<std::unique_ptr<SubState>> states;
  for (sc::Scenario s : {sc::Scenario::Packet, sc::Scenario::Dirac, sc::Scenario::Dispersion,
                         sc::Scenario::Harmonic, sc::Scenario::Box, sc::Scenario::String,
                         sc::Scenario::Flowtest}) {
    auto st = std::make_unique<SubState>();
    st->scenario = s;
    st->sub = app.add_subcommand(sc::scenario_name(s), scenario_help(s));
    st->sub->add_option("--config", st->config_path,
                        "JSON parameter file; a previously written manifest is accepted");
    st->sub->add_option("--out", st->out_dir, "output directory")->capture_default_str();
    st->sub->add_option("--format", st->format, "results format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    st->sub->add_flag("--golden", st->golden, "write the canonical golden table");
    add_param_options(*st);
    states.push_back(std::move(st));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << "rqte: error: validation: " << e.what() << '\n';
    return 2;
  }

  try {
    for (const auto& st : states) {
      if (st->sub->parsed()) return run(*st);
    }
    std::cerr << "rqte: error: validation: no scenario selected\n";
    return 2;
  } catch (const rqte::ValidationError& e) {
    std::cerr << "rqte: error: validation: " << e.what() << '\n';
    return 2;
  } catch (const rqte::NumericError& e) {
    std::cerr << "rqte: error: numeric: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "rqte: error: internal: " << e.what() << '\n';
    return 3;
  }
}
