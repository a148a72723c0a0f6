#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

// Oracle suite: lattice sums, quadrature of the resonant and fluctuation
// integrals against their closed forms, Fock-space identities, and the
// fluctuation-mode commutator.

namespace smode::cli {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;

  bool passed() const { return status != CheckStatus::fail; }
};

struct VerifyOptions {
  std::size_t random_sets = 5;
  std::uint64_t seed = 20240611;
  double pv_tolerance = 0.01;           // relative
  double fluctuation_tolerance = 0.005;  // relative
  double fock_tolerance = 1e-8;
  int fock_dimension = 128;
  std::size_t lattice_base = 32;
  // Relative distance from the Heaviside crossover within which the
  // imaginary-part comparison is skipped.
  double crossover_margin = 0.05;
  // Test mode: flips the sign of the resonant closed form before comparing.
  bool mutate_resonant_sign = false;
};

std::vector<CheckResult> lattice_checks(const VerifyOptions& options);
std::vector<CheckResult> resonant_checks(const VerifyOptions& options);
std::vector<CheckResult> fluctuation_checks(const VerifyOptions& options);
std::vector<CheckResult> fock_checks(const VerifyOptions& options);
std::vector<CheckResult> commutator_checks();

/// All groups in the order above.
std::vector<CheckResult> run_verify(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& checks);
std::string render_checks_text(const std::vector<CheckResult>& checks);
nlohmann::json render_checks_json(const std::vector<CheckResult>& checks);

}  // namespace smode::cli
