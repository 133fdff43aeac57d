#include "atxxz/verify_suite.hpp"

#include <algorithm>
#include <sstream>

#include "atxxz/errors.hpp"

namespace atxxz {

std::vector<std::string> verify_suite_names() {
  return {"link-algebra", "constraints", "energy", "pair-density", "spectral-inclusion"};
}

std::vector<VerificationReport> run_verify(const std::vector<std::string>& suites, const VerifySpec& spec) {
  const auto known = verify_suite_names();
  std::vector<std::string> selected;
  for (const auto& s : suites) {
    if (s == "all") {
      selected = known;
      break;
    }
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw ArgumentError("unknown verification suite '" + s + "'");
    }
    selected.push_back(s);
  }
  if (selected.empty()) throw ArgumentError("no verification suite selected");
  if (spec.m_sites < 2) throw ArgumentError("verification needs m_sites >= 2");

  std::vector<VerificationReport> out;
  for (const auto& s : selected) {
    if (s == "link-algebra") {
      const int m = std::min(spec.m_sites, 4);
      out.push_back(check_link_algebra(Model::AshkinTeller, m));
      out.push_back(check_link_algebra(Model::StaggeredXXZ, m));
    } else if (s == "constraints") {
      const int m = std::min(spec.m_sites, 6);
      for (Model model : {Model::AshkinTeller, Model::StaggeredXXZ}) {
        out.push_back(check_constraints_on_ground_state(ModelParams{model, m, 1.0, spec.delta, spec.beta}, spec.solver));
      }
    } else if (s == "energy") {
      out.push_back(check_energy_equivalence(spec.delta, spec.beta, std::min(spec.m_sites, 7), spec.solver));
    } else if (s == "pair-density") {
      out.push_back(check_pair_density_equality(spec.delta, spec.beta, std::min(spec.m_sites, 6), 1, spec.solver));
    } else if (s == "spectral-inclusion") {
      out.push_back(check_spectral_inclusion(spec.delta, spec.beta, std::min(spec.m_sites, 3)));
    }
  }
  return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass || r.inconclusive; });
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) os << r.summary() << '\n';
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const VerificationReport& r) { return !r.pass && !r.inconclusive; });
  os << reports.size() << " checks, " << failed << " failed\n";
  return os.str();
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os.precision(12);
  os << "check,chain_spins,parameters,max_deviation,tolerance,status\n";
  for (const auto& r : reports) {
    os << r.check << ',' << r.chain_spins << ",\"" << r.parameters << "\"," << r.max_deviation << ','
       << r.tolerance << ',' << (r.inconclusive ? "inconclusive" : (r.pass ? "pass" : "fail")) << '\n';
  }
  return os.str();
}

}  // namespace atxxz
