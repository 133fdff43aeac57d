// atxxz: sweeps, figure presets, spectra and map verification from the
// command line. Exit codes: 0 ok, 1 argument error, 2 solver failure,
// 3 verification failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "atxxz/csv.hpp"
#include "atxxz/eigensolve.hpp"
#include "atxxz/errors.hpp"
#include "atxxz/models.hpp"
#include "atxxz/presets.hpp"
#include "atxxz/sweep.hpp"
#include "atxxz/verify_suite.hpp"

#ifndef ATXXZ_VERSION
#define ATXXZ_VERSION "dev"
#endif

namespace {

enum Exit { kOk = 0, kArgument = 1, kSolver = 2, kVerification = 3 };

struct Options {
  std::string model = "at";
  int m_sites = 4;
  double j_coupling = 1.0;
  double delta = 1.0;
  double beta = 1.0;
  std::string sweep = "delta";
  std::string range = "0.5:1.525:0.025";
  std::string block = "frontal-pair";
  std::vector<std::string> quantities;
  std::string out;
  int threads = 0;
  std::uint64_t seed = atxxz::LanczosOptions{}.seed;
  double tol = atxxz::LanczosOptions{}.tol;
  int max_iter = atxxz::LanczosOptions{}.max_iter;
  bool full = false;
  bool reduced = false;

  std::string figure;
  std::vector<std::string> suites;
  std::string sector = "ground";
  int levels = 1;
};

atxxz::ModelParams model_params(const Options& o) {
  atxxz::ModelParams p;
  p.model = atxxz::parse_model(o.model);
  p.m_sites = o.m_sites;
  p.j_coupling = o.j_coupling;
  p.delta = o.delta;
  p.beta = o.beta;
  p.validate();
  return p;
}

atxxz::LanczosOptions solver_options(const Options& o) {
  atxxz::LanczosOptions s;
  s.seed = o.seed;
  s.tol = o.tol;
  s.max_iter = o.max_iter;
  return s;
}

int thread_count(const Options& o) {
  if (o.threads > 0) return o.threads;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void parse_range(const std::string& text, double& start, double& stop, double& step) {
  std::vector<double> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(':', pos);
    const auto piece = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw atxxz::ArgumentError("bad --range '" + text + "', expected start:stop:step");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() != 3) throw atxxz::ArgumentError("bad --range '" + text + "', expected start:stop:step");
  start = parts[0];
  stop = parts[1];
  step = parts[2];
}

void emit_csv(const atxxz::SweepResult& result, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << atxxz::to_csv(result);
  } else {
    atxxz::write_csv(result, out);
  }
}

int finish_sweep(const atxxz::SweepResult& result) {
  const auto failed = result.failed_rows();
  if (failed > 0) {
    std::cerr << "atxxz: " << failed << " of " << result.rows.size() << " rows flagged (solver failure)\n";
    return kSolver;
  }
  return kOk;
}

int cmd_sweep(const Options& o) {
  atxxz::SweepSpec spec;
  spec.params = model_params(o);
  spec.axis = atxxz::parse_axis(o.sweep);
  parse_range(o.range, spec.start, spec.stop, spec.step);
  if (!o.quantities.empty()) spec.quantities = o.quantities;
  spec.block = o.block;
  spec.solver = solver_options(o);
  spec.validate();
  const auto result = atxxz::run_sweep(spec, thread_count(o));
  emit_csv(result, o.out);
  return finish_sweep(result);
}

int cmd_figure(const Options& o) {
  auto preset = atxxz::figure_preset(o.figure, o.full);
  if (o.reduced) preset = atxxz::reduced_preset(preset);
  for (auto& s : preset.specs) s.solver = solver_options(o);
  std::cerr << "atxxz: " << preset.name << ": " << preset.description << '\n';
  const auto result = atxxz::run_figure(preset, thread_count(o));
  emit_csv(result, o.out);
  return finish_sweep(result);
}

atxxz::Sector parse_sector(const std::string& name, const atxxz::ModelParams& p) {
  if (name == "ground") return atxxz::ground_sector(p);
  if (name == "full") return atxxz::FullSector{};
  if (p.model == atxxz::Model::AshkinTeller && name.size() == 2 && name[0] == 'q' && name[1] >= '0' &&
      name[1] <= '3') {
    return atxxz::parity_sector(name[1] - '0');
  }
  if (p.model == atxxz::Model::StaggeredXXZ && name.rfind("n=", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(2));
    } catch (const std::exception&) {
      throw atxxz::ArgumentError("bad sector '" + name + "'");
    }
    const int up = p.m_sites - n;
    if (up < 0 || up > p.n_spins()) throw atxxz::ArgumentError("sector '" + name + "' is empty");
    return atxxz::SzSector{up};
  }
  throw atxxz::ArgumentError("unknown sector '" + name + "' (ground, full, q0..q3 for at, n=<k> for xxz)");
}

int cmd_spectrum(const Options& o) {
  const auto p = model_params(o);
  const auto sector = parse_sector(o.sector, p);
  if (o.levels < 1) throw atxxz::ArgumentError("--levels must be positive");
  const auto h = atxxz::build_hamiltonian(p, sector, thread_count(o));
  const auto dim = h.matrix.dim;
  atxxz::EigenResult r;
  std::string method;
  if (o.levels > 2 || (dim <= 64 && static_cast<std::size_t>(o.levels) <= dim)) {
    r = atxxz::dense_spectrum(h);
    method = "dense";
  } else {
    auto s = solver_options(o);
    s.k = o.levels;
    r = atxxz::lanczos_ground(h, s);
    method = "lanczos";
  }
  std::printf("model      %s\n", atxxz::model_name(p.model).c_str());
  std::printf("spins      %d\n", p.n_spins());
  std::printf("delta      %.12g\nbeta       %.12g\n", p.delta, p.beta);
  std::printf("sector     %s\n", atxxz::to_string(sector).c_str());
  std::printf("dimension  %zu\n", dim);
  std::printf("method     %s\n", method.c_str());
  const auto shown = std::min<std::size_t>(static_cast<std::size_t>(o.levels), r.energies.size());
  for (std::size_t i = 0; i < shown; ++i) {
    std::printf("E%-9zu %.12g", i, r.energies[i]);
    if (i < r.residuals.size()) std::printf("  residual %.3g", r.residuals[i]);
    std::printf("\n");
  }
  if (r.gap) std::printf("gap        %.12g%s\n", *r.gap, r.degenerate ? "  (degenerate)" : "");
  return kOk;
}

int cmd_verify(const Options& o) {
  atxxz::VerifySpec spec;
  spec.m_sites = o.m_sites;
  spec.delta = o.delta;
  spec.beta = o.beta;
  spec.solver = solver_options(o);
  const auto suites = o.suites.empty() ? std::vector<std::string>{"all"} : o.suites;
  const auto reports = atxxz::run_verify(suites, spec);
  std::cout << atxxz::reports_to_text(reports);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw atxxz::ArgumentError("cannot write '" + o.out + "'");
    f << atxxz::reports_to_csv(reports);
  }
  return atxxz::all_passed(reports) ? kOk : kVerification;
}

int cmd_info(const Options& o) {
  std::printf("atxxz %s\n", ATXXZ_VERSION);
  std::printf("threads    %d\n", thread_count(o));
  const auto p = model_params(o);
  const atxxz::SpinBasis basis(p.n_spins(), atxxz::ground_sector(p));
  std::printf("model      %s, %d spins, ground sector %s, dimension %zu\n", atxxz::model_name(p.model).c_str(),
              p.n_spins(), atxxz::to_string(basis.sector()).c_str(), basis.size());
  std::printf("memory     ~%.1f MiB per solve\n",
              static_cast<double>(atxxz::estimate_memory_bytes(p, solver_options(o))) / (1024.0 * 1024.0));
  std::printf("block      %s ->", o.block.c_str());
  try {
    for (int b : atxxz::resolve_block(o.block, p)) std::printf(" %d", b);
    std::printf("\n");
  } catch (const atxxz::ArgumentError& e) {
    std::printf(" invalid (%s)\n", e.what());
  }
  std::printf("figures   ");
  for (const auto& f : atxxz::figure_names()) std::printf(" %s", f.c_str());
  std::printf("\nsuites    ");
  for (const auto& s : atxxz::verify_suite_names()) std::printf(" %s", s.c_str());
  std::printf(" all\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Ashkin-Teller / staggered XXZ exact diagonalization and entanglement sweeps", "atxxz"};
  app.set_config("--config", "", "Flat key=value file mirroring the long flags");
  app.set_version_flag("--version", std::string(ATXXZ_VERSION));
  app.require_subcommand(1);

  app.add_option("--model", o.model, "at | xxz")->check(CLI::IsMember({"at", "xxz"}))->capture_default_str();
  app.add_option("--m-sites,--m", o.m_sites, "AT sites (the XXZ chain has twice as many spins)")
      ->capture_default_str();
  app.add_option("--j", o.j_coupling, "Coupling J")->capture_default_str();
  app.add_option("--delta", o.delta)->capture_default_str();
  app.add_option("--beta", o.beta)->capture_default_str();
  app.add_option("--sweep", o.sweep, "Swept parameter")->check(CLI::IsMember({"delta", "beta"}))->capture_default_str();
  app.add_option("--range", o.range, "Half-open grid start:stop:step")->capture_default_str();
  app.add_option("--block", o.block, "Comma-separated 0-based bits or a preset name")->capture_default_str();
  app.add_option("--quantity", o.quantities, "Repeatable; default entropy");
  app.add_option("--out", o.out, "Output path (stdout when omitted)");
  app.add_option("--threads", o.threads, "Worker threads (default: available parallelism)");
  app.add_option("--seed", o.seed, "Lanczos start-vector seed")->capture_default_str();
  app.add_option("--tol", o.tol, "Residual tolerance")->capture_default_str();
  app.add_option("--max-iter", o.max_iter, "Matrix-vector product budget")->capture_default_str();
  app.add_flag("--full", o.full, "Figure presets at 20 spins");
  app.add_flag("--reduced", o.reduced, "Figure presets on a 3-point grid")->group("");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV")->fallthrough();
  auto* figure = app.add_subcommand("figure", "Run a frozen figure preset")->fallthrough();
  figure->add_option("name", o.figure)->required()->check(CLI::IsMember(atxxz::figure_names()));
  auto* spectrum = app.add_subcommand("spectrum", "Lowest levels of one Hamiltonian")->fallthrough();
  spectrum->add_option("--sector", o.sector, "ground | full | q0..q3 | n=<k>")->capture_default_str();
  spectrum->add_option("--levels", o.levels, "Number of levels")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Mapping checks")->fallthrough();
  verify->add_option("suites", o.suites, "link-algebra constraints energy pair-density spectral-inclusion all");
  auto* info = app.add_subcommand("info", "Sizes, memory estimate, presets")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kArgument;
  }

  try {
    if (*sweep) return cmd_sweep(o);
    if (*figure) return cmd_figure(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*verify) return cmd_verify(o);
    if (*info) return cmd_info(o);
  } catch (const atxxz::ArgumentError& e) {
    std::cerr << "atxxz: " << e.what() << '\n';
    return kArgument;
  } catch (const atxxz::CapacityError& e) {
    std::cerr << "atxxz: " << e.what() << '\n';
    return kArgument;
  } catch (const atxxz::InconsistentInputs& e) {
    std::cerr << "atxxz: " << e.what() << '\n';
    return kArgument;
  } catch (const atxxz::Error& e) {
    std::cerr << "atxxz: " << e.what() << '\n';
    return kSolver;
  }
  return kArgument;
}
