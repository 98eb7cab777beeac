// Command line front end. Everything goes through the public C interface;
// exit codes mirror feld_status (0 ok, 2 invalid input, 3 verification
// failure, 4 cap exceeded).

#include <CLI11.hpp>

#include <felderhof/felderhof.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct poly_guard {
  feld_poly* p = nullptr;
  ~poly_guard() { feld_poly_free(p); }
};

struct string_guard {
  char* s = nullptr;
  ~string_guard() { feld_string_free(s); }
  std::string str() const { return s == nullptr ? std::string() : std::string(s); }
};

struct output_options {
  std::string format = "json";
  std::string eval;
  std::string path;
};

int report_failure(feld_status status) {
  std::cerr << "error: " << feld_last_error() << "\n";
  return static_cast<int>(status);
}

int emit(const std::string& text, const std::string& path) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return static_cast<int>(FELD_ERR_INVALID);
  }
  out << body;
  return 0;
}

// Render or evaluate a finished polynomial per the common output flags.
int finish_poly(const feld_poly* p, const output_options& opts) {
  if (!opts.eval.empty()) {
    string_guard value;
    feld_status status = feld_poly_eval(p, opts.eval.c_str(), &value.s);
    if (status != FELD_OK) return report_failure(status);
    std::string text = value.str();
    if (opts.format == "json") {
      text = "{\"value\":\"" + text + "\"}";
    } else if (opts.format == "csv") {
      text = "value\n" + text;
    }
    return emit(text, opts.path);
  }
  string_guard rendered;
  feld_status status = feld_poly_render(p, opts.format.c_str(), &rendered.s);
  if (status != FELD_OK) return report_failure(status);
  return emit(rendered.str(), opts.path);
}

void add_output_flags(CLI::App* cmd, output_options& opts) {
  cmd->add_option("--format", opts.format, "Output format: json, csv or pretty")
      ->default_val("json");
  cmd->add_option("--eval", opts.eval,
                  "Evaluate at a rational point, e.g. z1=3/2,z2=7,t=2");
  cmd->add_option("--output", opts.path, "Write to this file instead of stdout");
}

// Marked positions come either directly or as a partition translated against
// the site count. Returns false (after printing) on inconsistent sizing.
bool resolve_positions(int sites, int requested_n, const std::vector<int>& direct,
                       const std::vector<int>& partition, std::vector<int>& out, int& n) {
  if (!direct.empty() || partition.empty()) {
    out = direct;
    n = static_cast<int>(direct.size());
  } else {
    n = static_cast<int>(partition.size());
    out.assign(partition.size(), 0);
    feld_status status = feld_config_from_partition(
        sites, n, n, partition.data(), out.data());
    if (status != FELD_OK) {
      std::cerr << "error: " << feld_last_error() << "\n";
      return false;
    }
  }
  if (requested_n >= 0 && requested_n != n) {
    std::cerr << "error: --N disagrees with the given positions\n";
    return false;
  }
  return true;
}

std::uint64_t resolve_seed(std::uint64_t flag_value, bool& ok) {
  ok = true;
  const char* env = std::getenv("FELD_SEED");
  if (env == nullptr || *env == '\0') return flag_value;
  char* end = nullptr;
  std::uint64_t value = std::strtoull(env, &end, 0);
  if (end == env || *end != '\0') {
    std::cerr << "error: bad FELD_SEED value: " << env << "\n";
    ok = false;
    return flag_value;
  }
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact wavefunctions of a free-fermion six-vertex model"};
  app.require_subcommand(1);
  app.set_version_flag("--version", feld_version());

  // wavefunction ----------------------------------------------------------
  int wf_sites = 0;
  int wf_n = -1;
  std::vector<int> wf_particles, wf_partition;
  std::string wf_variant = "standard";
  output_options wf_out;
  auto* wf = app.add_subcommand("wavefunction", "Overlap with a particle configuration");
  wf->add_option("--M", wf_sites, "Number of sites")->required();
  wf->add_option("--N", wf_n, "Number of particles (checked against the list)");
  auto* wf_pos = wf->add_option("--particles", wf_particles, "Particle positions, e.g. 2,4")
                     ->delimiter(',');
  wf->add_option("--partition", wf_partition, "Partition standing for the positions")
      ->delimiter(',')
      ->excludes(wf_pos);
  wf->add_option("--variant", wf_variant,
                 "Table: standard, rescaled, five-vertex or inhomogeneous");
  add_output_flags(wf, wf_out);

  // dual-wavefunction ------------------------------------------------------
  int dw_sites = 0;
  int dw_n = -1;
  std::vector<int> dw_holes, dw_partition;
  std::string dw_variant = "standard";
  output_options dw_out;
  auto* dw = app.add_subcommand("dual-wavefunction", "Overlap with a hole configuration");
  dw->add_option("--M", dw_sites, "Number of sites")->required();
  dw->add_option("--N", dw_n, "Number of holes (checked against the list)");
  auto* dw_pos =
      dw->add_option("--holes", dw_holes, "Hole positions, e.g. 2,4")->delimiter(',');
  dw->add_option("--partition", dw_partition, "Partition standing for the positions")
      ->delimiter(',')
      ->excludes(dw_pos);
  dw->add_option("--variant", dw_variant,
                 "Table: standard, rescaled, five-vertex or inhomogeneous");
  add_output_flags(dw, dw_out);

  // schur ------------------------------------------------------------------
  int schur_n = 0;
  std::vector<int> schur_partition;
  output_options schur_out;
  auto* sc = app.add_subcommand("schur", "Schur polynomial in N variables");
  sc->add_option("--N", schur_n, "Number of variables")->required();
  sc->add_option("--partition", schur_partition, "Partition, e.g. 2,1")->delimiter(',');
  add_output_flags(sc, schur_out);

  // factorial-schur ---------------------------------------------------------
  int fs_n = 0;
  std::vector<int> fs_partition;
  std::string fs_alphas;
  output_options fs_out;
  auto* fs = app.add_subcommand("factorial-schur", "Factorial Schur polynomial");
  fs->add_option("--N", fs_n, "Number of variables")->required();
  fs->add_option("--partition", fs_partition, "Partition, e.g. 2,1")->delimiter(',');
  fs->add_option("--alphas", fs_alphas,
                 "Integer shifts, e.g. 0,1,2; default symbolic a1, a2, ...");
  add_output_flags(fs, fs_out);

  // gt-sum -------------------------------------------------------------------
  int gt_sites = 0;
  int gt_n = -1;
  std::vector<int> gt_particles, gt_partition;
  output_options gt_out;
  auto* gt = app.add_subcommand("gt-sum", "Weighted sum over top-fixed strict patterns");
  gt->add_option("--M", gt_sites, "Number of sites (needed with --particles)");
  gt->add_option("--N", gt_n, "Number of rows (checked against the input)");
  auto* gt_pos = gt->add_option("--particles", gt_particles, "Particle positions, e.g. 2,4")
                     ->delimiter(',');
  gt->add_option("--partition", gt_partition, "Top-row partition, e.g. 2,1")
      ->delimiter(',')
      ->excludes(gt_pos);
  add_output_flags(gt, gt_out);

  // dual-gt-sum ---------------------------------------------------------------
  int dg_sites = 0;
  int dg_n = -1;
  std::vector<int> dg_holes, dg_partition;
  output_options dg_out;
  auto* dg = app.add_subcommand("dual-gt-sum", "Weighted sum over bottom-fixed patterns");
  dg->add_option("--M", dg_sites, "Number of sites")->required();
  dg->add_option("--N", dg_n, "Number of holes (checked against the list)");
  auto* dg_pos =
      dg->add_option("--holes", dg_holes, "Hole positions, e.g. 2,4")->delimiter(',');
  dg->add_option("--partition", dg_partition, "Partition standing for the positions")
      ->delimiter(',')
      ->excludes(dg_pos);
  add_output_flags(dg, dg_out);

  // dwbp -----------------------------------------------------------------------
  int dwbp_sites = 0;
  std::string dwbp_variant = "standard";
  output_options dwbp_out;
  auto* dp = app.add_subcommand("dwbp", "Domain-wall boundary partition function");
  dp->add_option("--M", dwbp_sites, "Grid size")->required();
  dp->add_option("--variant", dwbp_variant, "standard (homogeneous) or inhomogeneous");
  add_output_flags(dp, dwbp_out);

  // b-element ---------------------------------------------------------------
  int be_sites = 0;
  std::vector<int> be_xbar, be_ybar;
  std::string be_variant = "standard";
  output_options be_out;
  auto* be = app.add_subcommand("b-element", "Single-row element between hole configurations");
  be->add_option("--M", be_sites, "Number of sites")->required();
  be->add_option("--xbar", be_xbar, "Outgoing hole positions")->delimiter(',')->required();
  be->add_option("--ybar", be_ybar, "Incoming hole positions")->delimiter(',')->required();
  be->add_option("--variant", be_variant,
                 "Table: standard, rescaled, five-vertex or inhomogeneous");
  add_output_flags(be, be_out);

  // verify -----------------------------------------------------------------
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 0xF31D;
  std::string verify_output;
  auto* vf = app.add_subcommand("verify", "Run the identity verification suites");
  vf->add_option("--suite", verify_suite, "all or a group id c01..c15");
  vf->add_option("--seed", verify_seed, "Seed for the sampled checks (FELD_SEED overrides)");
  vf->add_option("--output", verify_output, "Write the JSON report to this file");

  // bench ------------------------------------------------------------------
  int bench_sites = 0;
  int bench_n = 0;
  std::string bench_format = "csv";
  std::string bench_output;
  auto* bn = app.add_subcommand("bench", "Time the equivalent computation strategies");
  bn->add_option("--M", bench_sites, "Number of sites")->required();
  bn->add_option("--N", bench_n, "Number of holes")->required();
  bn->add_option("--format", bench_format, "csv or json")->default_val("csv");
  bn->add_option("--output", bench_output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return static_cast<int>(FELD_ERR_INVALID);
  }

  if (wf->parsed()) {
    std::vector<int> positions;
    int n = 0;
    if (!resolve_positions(wf_sites, wf_n, wf_particles, wf_partition, positions, n))
      return static_cast<int>(FELD_ERR_INVALID);
    poly_guard p;
    feld_status status =
        feld_wavefunction(wf_sites, n, positions.data(), wf_variant.c_str(), &p.p);
    if (status != FELD_OK) return report_failure(status);
    return finish_poly(p.p, wf_out);
  }

  if (dw->parsed()) {
    std::vector<int> positions;
    int n = 0;
    if (!resolve_positions(dw_sites, dw_n, dw_holes, dw_partition, positions, n))
      return static_cast<int>(FELD_ERR_INVALID);
    poly_guard p;
    feld_status status =
        feld_dual_wavefunction(dw_sites, n, positions.data(), dw_variant.c_str(), &p.p);
    if (status != FELD_OK) return report_failure(status);
    return finish_poly(p.p, dw_out);
  }

  if (sc->parsed()) {
    poly_guard p;
    feld_status status = feld_schur(schur_n, static_cast<int>(schur_partition.size()),
                                    schur_partition.data(), &p.p);
    if (status != FELD_OK) return report_failure(status);
    return finish_poly(p.p, schur_out);
  }

  if (fs->parsed()) {
    poly_guard p;
    feld_status status =
        feld_factorial_schur(fs_n, static_cast<int>(fs_partition.size()), fs_partition.data(),
                             fs_alphas.c_str(), &p.p);
    if (status != FELD_OK) return report_failure(status);
    return finish_poly(p.p, fs_out);
  }

  if (gt->parsed()) {
    std::vector<int> lambda = gt_partition;
    if (!gt_particles.empty()) {
      if (gt_sites <= 0) {
        std::cerr << "error: --particles needs --M\n";
        return static_cast<int>(FELD_ERR_INVALID);
      }
      lambda.assign(gt_particles.size(), 0);
      feld_status status =
          feld_partition_from_config(gt_sites, static_cast<int>(gt_particles.size()),
                                     gt_particles.data(), lambda.data());
      if (status != FELD_OK) return report_failure(status);
    }
    int n = static_cast<int>(lambda.size());
    if (gt_n >= 0 && gt_n != n) {
      std::cerr << "error: --N disagrees with the given input\n";
      return static_cast<int>(FELD_ERR_INVALID);
    }
    poly_guard p;
    feld_status status = feld_gt_sum(n, n, lambda.data(), &p.p);
    if (status != FELD_OK) return report_failure(status);
    return finish_poly(p.p, gt_out);
  }

  if (dg->parsed()) {
    std::vector<int> positions;
    int n = 0;
    if (!resolve_positions(dg_sites, dg_n, dg_holes, dg_partition, positions, n))
      return static_cast<int>(FELD_ERR_INVALID);
    poly_guard p;
    feld_status status = feld_dual_gt_sum(dg_sites, n, positions.data(), &p.p);
    if (status != FELD_OK) return report_failure(status);
    return finish_poly(p.p, dg_out);
  }

  if (dp->parsed()) {
    poly_guard p;
    feld_status status = feld_dwbp(dwbp_sites, dwbp_variant.c_str(), &p.p);
    if (status != FELD_OK) return report_failure(status);
    return finish_poly(p.p, dwbp_out);
  }

  if (be->parsed()) {
    poly_guard p;
    feld_status status = feld_b_element(
        be_sites, static_cast<int>(be_xbar.size()), be_xbar.data(),
        static_cast<int>(be_ybar.size()), be_ybar.data(), be_variant.c_str(), &p.p);
    if (status != FELD_OK) return report_failure(status);
    return finish_poly(p.p, be_out);
  }

  if (vf->parsed()) {
    bool seed_ok = false;
    std::uint64_t seed = resolve_seed(verify_seed, seed_ok);
    if (!seed_ok) return static_cast<int>(FELD_ERR_INVALID);
    string_guard report;
    int all_passed = 0;
    feld_status status = feld_verify(verify_suite.c_str(), seed, &report.s, &all_passed);
    if (status != FELD_OK && status != FELD_ERR_VERIFY) return report_failure(status);
    int emit_status = emit(report.str(), verify_output);
    if (emit_status != 0) return emit_status;
    return static_cast<int>(status);
  }

  if (bn->parsed()) {
    string_guard table;
    feld_status status = feld_bench(bench_sites, bench_n, bench_format.c_str(), &table.s);
    if (status != FELD_OK) return report_failure(status);
    return emit(table.str(), bench_output);
  }

  return static_cast<int>(FELD_ERR_INVALID);
}
