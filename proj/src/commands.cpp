#include "smode/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>
#include <vector>

#include "smode/errors.hpp"
#include "smode/pulse.hpp"

namespace smode::cli {
namespace {

const char* bool_field(bool b) { return b ? "true" : "false"; }

}  // namespace

Analysis run_analysis(const AnalysisConfig& config) {
  validate(config);
  Analysis a;
  a.pulse = units::to_natural(config.intensity, config.wavelength, config.duration, config.spot);
  a.spreads = pulse::spread_params_for(a.pulse);
  if (config.gamma) {
    a.kinematics = corrections::ElectronKinematics::from_gamma(*config.gamma, a.spreads.sigma1);
  } else {
    a.kinematics = corrections::ElectronKinematics::from_components(
        config.v_perp.value_or(kDefaultVPerp), config.v_z.value_or(kDefaultVz));
  }
  a.report = corrections::build_report(a.pulse, a.spreads, a.kinematics, config.thresholds);
  return a;
}

int cmd_analyze(const AnalysisConfig& config, std::ostream& out) {
  const Analysis a = run_analysis(config);
  if (config.format == OutputFormat::json) {
    out << render_json(a).dump(2) << '\n';
  } else {
    out << render_text(a);
  }
  return a.report.verdict.all() ? kExitOk : kExitFailure;
}

std::string delta_output(bool json) {
  const auto r = pulse::solve_delta_detailed();
  if (json) {
    const nlohmann::json j{{"root", json_number(r.root)},
                           {"residual", json_number(r.residual)},
                           {"iterations", r.iterations}};
    return j.dump(2) + "\n";
  }
  char root[40];
  std::snprintf(root, sizeof root, "%.10g", r.root);
  std::ostringstream out;
  out << "delta      " << root << '\n'
      << "residual   " << format_number(r.residual) << '\n'
      << "iterations " << r.iterations << '\n';
  return out.str();
}

int cmd_delta(bool json, std::ostream& out) {
  out << delta_output(json);
  return kExitOk;
}

std::string sweep_csv(const AnalysisConfig& config) {
  validate(config);
  if (config.axes.empty()) {
    throw ConfigError("sweep needs at least one axis");
  }
  const SweepAxis& first = config.axes[0];
  const int inner_steps = config.axes.size() > 1 ? config.axes[1].steps : 1;
  const std::size_t rows = static_cast<std::size_t>(first.steps) * inner_steps;

  std::vector<std::string> lines(rows);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows || failed.load()) {
        return;
      }
      try {
        AnalysisConfig point = config;
        point.axes.clear();
        std::ostringstream line;
        const int i0 = static_cast<int>(i) / inner_steps;
        const int i1 = static_cast<int>(i) % inner_steps;
        const double x0 = first.value(i0);
        set_parameter(point, first.name, x0);
        line << format_number(x0);
        if (config.axes.size() > 1) {
          const double x1 = config.axes[1].value(i1);
          set_parameter(point, config.axes[1].name, x1);
          line << ',' << format_number(x1);
        }
        const auto r = run_analysis(point).report;
        line << ',' << format_number(r.lambda) << ',' << format_number(r.freq_shift_rel) << ','
             << format_number(r.width_rel) << ',' << format_number(r.width_rel_lambda_branch)
             << ',' << format_number(r.width_rel_piecewise) << ',' << format_number(r.mu)
             << ',' << bool_field(r.verdict.shift_ok) << ',' << bool_field(r.verdict.width_ok)
             << ',' << bool_field(r.verdict.mu_ok) << ',' << bool_field(r.verdict.all());
        lines[i] = line.str();
      } catch (...) {
        if (!failed.exchange(true)) {
          error = std::current_exception();
        }
        return;
      }
    }
  };

  const int workers = std::max(1, std::min<int>(config.threads, static_cast<int>(rows)));
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back(worker);
  }
  for (auto& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }

  std::ostringstream out;
  for (const auto& axis : config.axes) {
    out << csv_field(axis.name) << ',';
  }
  out << "lambda,freq_shift_rel,width_rel,width_rel_lambda_branch,width_rel_piecewise,mu,"
         "shift_ok,width_ok,mu_ok,valid\r\n";
  for (const auto& line : lines) {
    out << line << "\r\n";
  }
  return out.str();
}

int cmd_sweep(const AnalysisConfig& config, std::ostream& out) {
  out << sweep_csv(config);
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, bool json, std::ostream& out) {
  const auto checks = run_verify(options);
  if (json) {
    out << render_checks_json(checks).dump(2) << '\n';
  } else {
    out << render_checks_text(checks);
  }
  return all_passed(checks) ? kExitOk : kExitFailure;
}

}  // namespace smode::cli
