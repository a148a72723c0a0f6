#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "smode/commands.hpp"
#include "smode/errors.hpp"

namespace {

using smode::cli::AnalysisConfig;

struct Overrides {
  std::optional<double> intensity;
  std::optional<double> wavelength;
  std::optional<double> duration;
  std::optional<double> spot;
  std::optional<double> v_perp;
  std::optional<double> v_z;
  std::optional<double> gamma;
  std::optional<std::string> width_rule;
  std::optional<int> threads;
  std::string config_path;
  std::vector<std::string> axes;
  bool json = false;
  std::string out_path;
};

void add_pulse_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--intensity", o.intensity, "peak intensity, W/cm^2");
  cmd->add_option("--wavelength", o.wavelength, "wavelength, nm");
  cmd->add_option("--duration", o.duration, "pulse duration, fs");
  cmd->add_option("--spot", o.spot, "spot area, cm^2");
  cmd->add_option("--vperp", o.v_perp, "electron velocity perpendicular to k0 (units of c)");
  cmd->add_option("--vz", o.v_z, "electron velocity along k0 (units of c)");
  cmd->add_option("--gamma", o.gamma, "electron Lorentz factor (alternative to --vperp/--vz)");
  cmd->add_option("--width-rule", o.width_rule, "lambda_scaling or piecewise");
  cmd->add_option("--config", o.config_path, "JSON config file");
}

void add_output_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_flag("--json", o.json, "machine-readable output");
  cmd->add_option("--out", o.out_path, "write output to this file");
}

// Flags override the config file, which overrides the defaults.
AnalysisConfig resolve(const Overrides& o) {
  AnalysisConfig c = o.config_path.empty() ? AnalysisConfig{}
                                           : smode::cli::load_config_file(o.config_path);
  if (o.intensity) c.intensity = *o.intensity;
  if (o.wavelength) c.wavelength = *o.wavelength;
  if (o.duration) c.duration = *o.duration;
  if (o.spot) c.spot = *o.spot;
  if (o.gamma && (o.v_perp || o.v_z)) {
    throw smode::ConfigError("give either --gamma or --vperp/--vz, not both");
  }
  if (o.gamma) {
    c.gamma = o.gamma;
    c.v_perp.reset();
    c.v_z.reset();
  }
  if (o.v_perp || o.v_z) {
    c.gamma.reset();
    if (o.v_perp) c.v_perp = o.v_perp;
    if (o.v_z) c.v_z = o.v_z;
    if (!c.v_perp) c.v_perp = smode::cli::kDefaultVPerp;
    if (!c.v_z) c.v_z = smode::cli::kDefaultVz;
  }
  if (o.width_rule) c.thresholds.width_rule = smode::corrections::width_rule_from_string(*o.width_rule);
  if (o.threads) c.threads = *o.threads;
  if (!o.axes.empty()) {
    c.axes.clear();
    for (const auto& spec : o.axes) {
      c.axes.push_back(smode::cli::parse_axis(spec));
    }
  }
  if (o.json) c.format = smode::cli::OutputFormat::json;
  return c;
}

// Runs `body` against stdout or the --out file.
template <class F>
int with_output(const std::string& path, F&& body) {
  if (path.empty()) {
    return body(std::cout);
  }
  std::ostringstream buffer;
  const int code = body(buffer);
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << buffer.str())) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return smode::cli::kExitUsage;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validity analysis of the single-mode approximation for electron-laser interaction"};
  app.require_subcommand(1);

  Overrides analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "validity report for one pulse/electron setting");
  add_pulse_flags(analyze, analyze_opts);
  add_output_flags(analyze, analyze_opts);

  Overrides delta_opts;
  auto* delta = app.add_subcommand("delta", "solve for the optimal box parameter delta");
  add_output_flags(delta, delta_opts);

  Overrides sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "CSV of the validity parameters over 1 or 2 axes");
  add_pulse_flags(sweep, sweep_opts);
  sweep->add_option("--axis", sweep_opts.axes, "name:min:max:steps[:log|:linear]");
  sweep->add_option("--threads", sweep_opts.threads, "worker threads (default 4)");
  sweep->add_option("--out", sweep_opts.out_path, "write CSV to this file");

  Overrides verify_opts;
  smode::cli::VerifyOptions verify_config;
  auto* verify = app.add_subcommand("verify", "run the oracle and Fock-space checks");
  add_output_flags(verify, verify_opts);
  verify->add_option("--seed", verify_config.seed, "seed for the randomized parameter sets");
  verify->add_option("--sets", verify_config.random_sets, "number of randomized parameter sets");
  verify->add_option("--pv-tolerance", verify_config.pv_tolerance, "relative tolerance, resonant integral");
  verify->add_option("--fluctuation-tolerance", verify_config.fluctuation_tolerance,
                     "relative tolerance, fluctuation integral");
  verify->add_option("--fock-tolerance", verify_config.fock_tolerance, "absolute tolerance, Fock checks");
  verify->add_flag("--mutate-closed-form-sign", verify_config.mutate_resonant_sign,
                   "test mode: flip the sign of the resonant closed form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? smode::cli::kExitOk : smode::cli::kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return smode::cli::kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const auto config = resolve(analyze_opts);
      return with_output(analyze_opts.out_path,
                         [&](std::ostream& out) { return smode::cli::cmd_analyze(config, out); });
    }
    if (delta->parsed()) {
      return with_output(delta_opts.out_path, [&](std::ostream& out) {
        return smode::cli::cmd_delta(delta_opts.json, out);
      });
    }
    if (sweep->parsed()) {
      const auto config = resolve(sweep_opts);
      return with_output(sweep_opts.out_path,
                         [&](std::ostream& out) { return smode::cli::cmd_sweep(config, out); });
    }
    if (verify->parsed()) {
      return with_output(verify_opts.out_path, [&](std::ostream& out) {
        return smode::cli::cmd_verify(verify_config, verify_opts.json, out);
      });
    }
  } catch (const smode::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return smode::cli::kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return smode::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return smode::cli::kExitUsage;
  }
  return smode::cli::kExitUsage;
}
