#include "fliptop.h"

#include <exception>
#include <string>
#include <utility>

#include "bounds.hpp"
#include "errors.hpp"
#include "montecarlo.hpp"
#include "spectrum.hpp"
#include "verify.hpp"
#include "walk.hpp"

using namespace fliptop;

struct ftt_walk {
  WalkSpec spec;
  WalkEngineOptions opts;
};

struct ftt_buffer {
  std::string text;
};

namespace {

thread_local std::string g_error;

int fail(int code, std::string msg) {
  g_error = std::move(msg);
  return code;
}

// Runs f, translating exceptions to status codes. f returns a status itself
// so FTT_ERR_VERIFY can pass through with its message intact.
template <typename F>
int guarded(F&& f) {
  try {
    int rc = f();
    if (rc == FTT_OK) g_error.clear();
    return rc;
  } catch (const InvalidArgument& e) {
    return fail(FTT_ERR_INVALID, e.what());
  } catch (const CapExceeded& e) {
    return fail(FTT_ERR_CAP, e.what());
  } catch (const std::exception& e) {
    return fail(FTT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FTT_ERR_INTERNAL, "unknown failure");
  }
}

int emit(ftt_buffer** out, std::string text) {
  if (!out) return fail(FTT_ERR_INVALID, "output buffer pointer is null");
  *out = new ftt_buffer{std::move(text)};
  return FTT_OK;
}

}  // namespace

extern "C" {

const char* ftt_version(void) { return "1.0.0"; }

const char* ftt_last_error(void) { return g_error.c_str(); }

ftt_walk* ftt_walk_create(const char* kind, int n, const char* param) {
  ftt_walk* w = nullptr;
  int rc = guarded([&]() {
    if (!kind) return fail(FTT_ERR_INVALID, "kind is null");
    WalkSpec spec;
    spec.kind = parse_walk_kind(kind);
    spec.n = n;
    if (walk_has_param(spec.kind)) {
      if (!param)
        return fail(FTT_ERR_INVALID,
                    std::string(kind) + " requires a parameter string");
      spec.param = parse_rational(param);
    }
    validate_spec(spec);
    w = new ftt_walk{std::move(spec), WalkEngineOptions{}};
    return FTT_OK;
  });
  (void)rc;
  return w;
}

void ftt_walk_destroy(ftt_walk* w) { delete w; }

int ftt_walk_group_order(const ftt_walk* w, uint64_t* out) {
  return guarded([&]() {
    if (!w || !out) return fail(FTT_ERR_INVALID, "null argument");
    *out = group_order(group_of(w->spec));
    return FTT_OK;
  });
}

int ftt_walk_set_group_cap(ftt_walk* w, uint64_t group_cap) {
  return guarded([&]() {
    if (!w) return fail(FTT_ERR_INVALID, "null walk");
    if (group_cap == 0) return fail(FTT_ERR_INVALID, "group cap must be positive");
    w->opts.group_cap = group_cap;
    return FTT_OK;
  });
}

int ftt_walk_set_bit_budget(ftt_walk* w, unsigned bit_budget) {
  return guarded([&]() {
    if (!w) return fail(FTT_ERR_INVALID, "null walk");
    if (bit_budget < 64) return fail(FTT_ERR_INVALID, "bit budget must be at least 64");
    w->opts.bit_budget = bit_budget;
    return FTT_OK;
  });
}

int ftt_walk_set_mode(ftt_walk* w, const char* mode) {
  return guarded([&]() {
    if (!w || !mode) return fail(FTT_ERR_INVALID, "null argument");
    std::string m(mode);
    if (m == "exact")
      w->opts.mode = Mode::Exact;
    else if (m == "floating")
      w->opts.mode = Mode::Floating;
    else
      return fail(FTT_ERR_INVALID, "mode must be 'exact' or 'floating'");
    return FTT_OK;
  });
}

int ftt_walk_set_threads(ftt_walk* w, unsigned threads) {
  return guarded([&]() {
    if (!w) return fail(FTT_ERR_INVALID, "null walk");
    if (threads == 0) return fail(FTT_ERR_INVALID, "thread count must be positive");
    w->opts.threads = threads;
    return FTT_OK;
  });
}

int ftt_spectrum(const ftt_walk* w, int aggregate_lines, const char* format,
                 ftt_buffer** out) {
  return guarded([&]() {
    if (!w || !format) return fail(FTT_ERR_INVALID, "null argument");
    std::string f(format);
    if (f == "json") return emit(out, spectrum_json(w->spec, aggregate_lines != 0));
    if (f == "csv") return emit(out, spectrum_csv(w->spec, aggregate_lines != 0));
    return fail(FTT_ERR_INVALID, "format must be 'json' or 'csv'");
  });
}

int ftt_tv_curve(const ftt_walk* w, long k_max, int exact_cells, ftt_buffer** out) {
  return guarded([&]() {
    if (!w) return fail(FTT_ERR_INVALID, "null walk");
    if (k_max < 0) return fail(FTT_ERR_INVALID, "k_max must be non-negative");
    return emit(out, tv_curve_csv(w->spec, k_max, exact_cells != 0, w->opts));
  });
}

int ftt_bounds_curve(const ftt_walk* w, long k_max, int with_tv, ftt_buffer** out) {
  return guarded([&]() {
    if (!w) return fail(FTT_ERR_INVALID, "null walk");
    if (k_max < 0) return fail(FTT_ERR_INVALID, "k_max must be non-negative");
    return emit(out, bounds_curve_csv(w->spec, k_max, with_tv != 0, w->opts));
  });
}

int ftt_mixing_time(const ftt_walk* w, double threshold, long k_max, long* k_out) {
  return guarded([&]() {
    if (!w || !k_out) return fail(FTT_ERR_INVALID, "null argument");
    if (!(threshold > 0 && threshold < 1))
      return fail(FTT_ERR_INVALID, "threshold must lie in (0,1)");
    if (k_max < 0) return fail(FTT_ERR_INVALID, "k_max must be non-negative");
    auto k = mixing_time(w->spec, threshold, k_max, w->opts);
    *k_out = k ? *k : -1;
    return FTT_OK;
  });
}

int ftt_simulate(const ftt_walk* w, long steps, long trials, uint64_t seed,
                 ftt_buffer** out) {
  return guarded([&]() {
    if (!w) return fail(FTT_ERR_INVALID, "null walk");
    SimConfig config;
    config.spec = w->spec;
    config.steps = steps;
    config.trials = trials;
    config.seed = seed;
    config.threads = w->opts.threads;
    return emit(out, simulate_csv(config));
  });
}

int ftt_verify(const char* suite, int n_max, ftt_buffer** report, int* failures) {
  return guarded([&]() {
    if (!suite) return fail(FTT_ERR_INVALID, "suite is null");
    auto results = verify_suite(suite, n_max);
    int nf = count_failures(results);
    if (report) {
      int rc = emit(report, render_report(results));
      if (rc != FTT_OK) return rc;
    }
    if (failures) *failures = nf;
    if (nf > 0) return fail(FTT_ERR_VERIFY, std::to_string(nf) + " checks failed");
    return FTT_OK;
  });
}

const char* ftt_buffer_data(const ftt_buffer* b) { return b ? b->text.c_str() : ""; }

size_t ftt_buffer_size(const ftt_buffer* b) { return b ? b->text.size() : 0; }

void ftt_buffer_destroy(ftt_buffer* b) { delete b; }

}  // extern "C"
