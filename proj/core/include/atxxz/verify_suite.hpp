#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "atxxz/map_verify.hpp"

namespace atxxz {

/// Suites: link-algebra, constraints, energy, pair-density, spectral-inclusion,
/// or "all".
std::vector<std::string> verify_suite_names();

struct VerifySpec {
  int m_sites = 3;
  double delta = 1.0;
  double beta = 1.0;
  LanczosOptions solver;
};

/// Throws ArgumentError for unknown suite names. Sizes above a check's
/// limit are clamped to that limit.
std::vector<VerificationReport> run_verify(const std::vector<std::string>& suites, const VerifySpec& spec);

bool all_passed(const std::vector<VerificationReport>& reports);

std::string reports_to_text(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace atxxz
