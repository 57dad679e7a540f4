// Command-line front end. Talks to the library exclusively through the C API
// in fliptop.h; all computation lives behind that boundary.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "fliptop.h"

namespace {

struct WalkOpts {
  std::string walk = "bn";
  int n = 4;
  std::string alpha;
  std::string a;
  std::uint64_t max_group_order = 50000;
  unsigned bit_budget = 4096;
  unsigned threads = 1;
  std::string mode = "exact";
};

void add_walk_flags(CLI::App* cmd, WalkOpts& w) {
  cmd->add_option("--walk", w.walk, "walk kind: bn, bn-alpha, dn, sn")
      ->check(CLI::IsMember({"bn", "bn-alpha", "dn", "sn"}));
  cmd->add_option("--n", w.n, "rank of the group")->required();
  cmd->add_option("--alpha", w.alpha, "bias for bn-alpha, in [0,1], decimal or p/q");
  cmd->add_option("--a", w.a, "identity mass for sn, in (0,1), decimal or p/q");
  cmd->add_option("--max-group-order", w.max_group_order,
                  "largest group order for which exact distributions are materialized");
  cmd->add_option("--bit-budget", w.bit_budget,
                  "denominator bits before exact arithmetic falls back to floating");
  cmd->add_option("--threads", w.threads, "worker threads for convolution and simulation");
  cmd->add_option("--mode", w.mode, "distribution arithmetic: exact or floating")
      ->check(CLI::IsMember({"exact", "floating"}));
}

struct WalkDeleter {
  void operator()(ftt_walk* w) const { ftt_walk_destroy(w); }
};
using WalkPtr = std::unique_ptr<ftt_walk, WalkDeleter>;

struct BufferDeleter {
  void operator()(ftt_buffer* b) const { ftt_buffer_destroy(b); }
};
using BufferPtr = std::unique_ptr<ftt_buffer, BufferDeleter>;

int report_error(int rc) {
  std::cerr << "error: " << ftt_last_error() << "\n";
  return rc;
}

// exit code 2 on failure: creation only rejects invalid arguments
WalkPtr make_walk(const WalkOpts& o) {
  const char* param = nullptr;
  if (o.walk == "bn-alpha") {
    if (o.alpha.empty()) {
      std::cerr << "error: --alpha is required for bn-alpha\n";
      return nullptr;
    }
    param = o.alpha.c_str();
  } else if (o.walk == "sn") {
    if (o.a.empty()) {
      std::cerr << "error: --a is required for sn\n";
      return nullptr;
    }
    param = o.a.c_str();
  }
  WalkPtr w(ftt_walk_create(o.walk.c_str(), o.n, param));
  if (!w) {
    std::cerr << "error: " << ftt_last_error() << "\n";
    return nullptr;
  }
  int rc = ftt_walk_set_group_cap(w.get(), o.max_group_order);
  if (rc == FTT_OK) rc = ftt_walk_set_bit_budget(w.get(), o.bit_budget);
  if (rc == FTT_OK) rc = ftt_walk_set_threads(w.get(), o.threads);
  if (rc == FTT_OK) rc = ftt_walk_set_mode(w.get(), o.mode.c_str());
  if (rc != FTT_OK) {
    report_error(rc);
    return nullptr;
  }
  std::cerr << "# walk=" << o.walk << " n=" << o.n;
  if (param) std::cerr << " param=" << param;
  std::cerr << " mode=" << o.mode << " max-group-order=" << o.max_group_order
            << " bit-budget=" << o.bit_budget << " threads=" << o.threads << "\n";
  return w;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  return 0;
}

int emit_buffer(int rc, BufferPtr buf, const std::string& out_path) {
  if (rc != FTT_OK) return report_error(rc);
  return write_output(ftt_buffer_data(buf.get()), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra, mixing bounds and simulation for flip-transpose walks"};
  app.require_subcommand(1);

  WalkOpts w;
  std::string out_path;
  std::string format = "json";
  bool aggregate = false;
  long k_max = 40;
  bool exact_rational = false;
  bool with_tv = false;
  double threshold = 0.25;
  long steps = 0;
  long trials = 10000;
  std::uint64_t seed = 1;
  std::string suite = "all";
  int n_max = 0;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue lines from the closed formulas");
  add_walk_flags(spectrum, w);
  spectrum->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_flag("--aggregate", aggregate, "merge lines with equal eigenvalues");
  spectrum->add_option("--out", out_path, "write to file instead of stdout");

  auto* tv = app.add_subcommand("tv-curve", "exact distance to uniform per step");
  add_walk_flags(tv, w);
  tv->add_option("--k-max", k_max, "last step to report");
  tv->add_flag("--exact-rational", exact_rational, "print tv cells as canonical rationals");
  tv->add_option("--out", out_path, "write to file instead of stdout");

  auto* bounds = app.add_subcommand("bounds-curve", "lower/upper mixing bounds per step");
  add_walk_flags(bounds, w);
  bounds->add_option("--k-max", k_max, "last step to report");
  bounds->add_flag("--with-tv", with_tv, "include the exact tv column");
  bounds->add_option("--out", out_path, "write to file instead of stdout");

  auto* mixing = app.add_subcommand("mixing-time", "first k with tv below a threshold");
  add_walk_flags(mixing, w);
  mixing->add_option("--threshold", threshold, "tv threshold in (0,1)");
  mixing->add_option("--k-max", k_max, "give up after this many steps");
  mixing->add_option("--out", out_path, "write to file instead of stdout");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo fixed-point statistics");
  add_walk_flags(simulate, w);
  simulate->add_option("--steps", steps, "walk length per trial")->required();
  simulate->add_option("--trials", trials, "number of independent trials");
  simulate->add_option("--seed", seed, "RNG seed; results are reproducible per seed");
  simulate->add_option("--out", out_path, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "self-check suites against oracles");
  verify->add_option("--suite", suite, "oracle, lemmas, projection, moments, all")
      ->check(CLI::IsMember({"oracle", "lemmas", "projection", "moments", "all"}));
  verify->add_option("--n-max", n_max, "cap the structure sizes; 0 keeps suite defaults");
  verify->add_option("--out", out_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) {
    std::cerr << "# verify suite=" << suite << " n-max=" << n_max << "\n";
    ftt_buffer* raw = nullptr;
    int failures = 0;
    int rc = ftt_verify(suite.c_str(), n_max, &raw, &failures);
    BufferPtr report(raw);
    if (rc != FTT_OK && rc != FTT_ERR_VERIFY) return report_error(rc);
    int wrc = write_output(ftt_buffer_data(report.get()), out_path);
    if (wrc != 0) return wrc;
    return failures > 0 ? FTT_ERR_VERIFY : 0;
  }

  WalkPtr walk = make_walk(w);
  if (!walk) return FTT_ERR_INVALID;

  ftt_buffer* raw = nullptr;
  if (spectrum->parsed()) {
    int rc = ftt_spectrum(walk.get(), aggregate ? 1 : 0, format.c_str(), &raw);
    return emit_buffer(rc, BufferPtr(raw), out_path);
  }
  if (tv->parsed()) {
    int rc = ftt_tv_curve(walk.get(), k_max, exact_rational ? 1 : 0, &raw);
    return emit_buffer(rc, BufferPtr(raw), out_path);
  }
  if (bounds->parsed()) {
    int rc = ftt_bounds_curve(walk.get(), k_max, with_tv ? 1 : 0, &raw);
    return emit_buffer(rc, BufferPtr(raw), out_path);
  }
  if (mixing->parsed()) {
    long k_out = -1;
    int rc = ftt_mixing_time(walk.get(), threshold, k_max, &k_out);
    if (rc != FTT_OK) return report_error(rc);
    std::string line = k_out >= 0 ? std::to_string(k_out) : std::string("not-reached");
    return write_output(line + "\n", out_path);
  }
  if (simulate->parsed()) {
    int rc = ftt_simulate(walk.get(), steps, trials, seed, &raw);
    return emit_buffer(rc, BufferPtr(raw), out_path);
  }
  return 2;
}
