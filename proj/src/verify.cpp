#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include "bounds.hpp"
#include "errors.hpp"
#include "montecarlo.hpp"
#include "spectrum.hpp"
#include "walk.hpp"

namespace fliptop {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string spec_label(const WalkSpec& spec) {
  std::string s = walk_kind_name(spec.kind) + " n=" + std::to_string(spec.n);
  if (walk_has_param(spec.kind)) s += " param=" + rat_str(spec.param);
  return s;
}

WalkSpec make_spec(WalkKind kind, int n, Rat param = Rat(0)) {
  return WalkSpec{kind, n, std::move(param)};
}

// nullopt on agreement, first counterexample otherwise
std::optional<std::string> spectrum_vs_oracle(const WalkSpec& spec, double tol) {
  std::vector<double> formula = expand_spectrum(exact_spectrum(spec));
  std::vector<double> oracle = brute_force_spectrum(spec);
  if (formula.size() != oracle.size())
    return spec_label(spec) + ": expanded line count " + std::to_string(formula.size()) +
           " differs from |G| = " + std::to_string(oracle.size());
  for (size_t i = 0; i < formula.size(); ++i) {
    if (std::abs(formula[i] - oracle[i]) > tol) {
      std::ostringstream os;
      os << spec_label(spec) << ": eigenvalue " << i << " formula " << formula[i]
         << " vs oracle " << oracle[i];
      return os.str();
    }
  }
  return std::nullopt;
}

// Walk specs whose group order stays within the dense-oracle budget.
std::vector<WalkSpec> oracle_sweep(int bn_max, int dn_max, int sn_max) {
  std::vector<WalkSpec> specs;
  for (int n = 2; n <= bn_max; ++n) specs.push_back(make_spec(WalkKind::FlipTransposeTopB, n));
  for (const Rat& alpha : {Rat(0), Rat(1, 4), Rat(3, 4)})
    for (int n = 2; n <= bn_max; ++n)
      specs.push_back(make_spec(WalkKind::BiasedFlipTransposeTopB, n, alpha));
  for (int n = 2; n <= dn_max; ++n) specs.push_back(make_spec(WalkKind::FlipTransposeTopD, n));
  for (const Rat& a : {Rat(1, 4), Rat(1, 2), Rat(2, 3)})
    for (int n = 2; n <= sn_max; ++n)
      specs.push_back(make_spec(WalkKind::TransposeTopS, n, a));
  return specs;
}

Rat prob_at_identity(const StepMeasure& m) {
  for (const auto& [r, p] : m.atoms)
    if (r == 0) return p;
  return Rat(0);
}

bool aggregates_equal(const std::vector<SpectralLine>& a, const std::vector<SpectralLine>& b) {
  auto ag = aggregate(a), bg = aggregate(b);
  if (ag.size() != bg.size()) return false;
  for (size_t i = 0; i < ag.size(); ++i)
    if (ag[i].first != bg[i].first || ag[i].second != bg[i].second) return false;
  return true;
}

std::optional<std::string> distributions_equal(const GroupDistribution& a,
                                               const GroupDistribution& b) {
  if (a.size() != b.size()) return std::string("distribution sizes differ");
  for (std::uint64_t x = 0; x < a.size(); ++x)
    if (a.value(x) != b.value(x))
      return "mass differs at rank " + std::to_string(x) + ": " + rat_str(a.value(x)) +
             " vs " + rat_str(b.value(x));
  return std::nullopt;
}

// ---- release gate ----

CriterionResult criterion_oracle_sweep() {
  CriterionResult r{1, "exact spectra match the dense eigensolver (tol 1e-9, |G| <= 500)",
                    true, "", 0};
  auto t0 = Clock::now();
  int checked = 0;
  for (const WalkSpec& spec : oracle_sweep(4, 4, 5)) {
    if (auto err = spectrum_vs_oracle(spec, 1e-9)) {
      r.pass = false;
      r.detail = *err;
      break;
    }
    ++checked;
  }
  r.seconds = seconds_since(t0);
  if (r.pass) r.detail = std::to_string(checked) + " spectra compared";
  if (r.seconds > 60) {
    r.pass = false;
    r.detail += " (time limit 60s exceeded)";
  }
  return r;
}

CriterionResult criterion_counting() {
  CriterionResult r{2, "multiplicity and dimension counting identities, n <= 7", true, "", 0};
  auto t0 = Clock::now();
  for (int n = 2; n <= 7 && r.pass; ++n) {
    Int bn_order = factorial(n) << n;
    Int dn_order = bn_order / 2;
    auto fail = [&](const std::string& what) {
      r.pass = false;
      r.detail = what + " at n=" + std::to_string(n);
    };
    if (total_multiplicity(bn_spectrum(n)) != bn_order) {
      fail("bn multiplicity sum");
      continue;
    }
    if (total_multiplicity(bn_alpha_spectrum(n, Rat(1, 4))) != bn_order) {
      fail("bn-alpha multiplicity sum");
      continue;
    }
    if (total_multiplicity(dn_spectrum(n)) != dn_order) {
      fail("dn multiplicity sum");
      continue;
    }
    if (total_multiplicity(sn_a_spectrum(n, Rat(1, 2))) != factorial(n)) {
      fail("sn multiplicity sum");
      continue;
    }
    Int dim_sq = 0, dn_split = 0;
    for (const DoubleDiagram& mu : enumerate_double_diagrams(n)) {
      Int dim = double_dim(mu);
      dim_sq += dim * dim;
      if (mu.first == mu.second) {
        Int half = dim / 2;
        dn_split += 2 * half * half;
      } else if (partition_less(mu.second, mu.first)) {
        dn_split += dim * dim;
      }
    }
    if (dim_sq != bn_order) {
      fail("sum of dim^2 over double diagrams");
      continue;
    }
    if (dn_split != dn_order) {
      fail("split/symmetric pair identity");
      continue;
    }
  }
  r.seconds = seconds_since(t0);
  if (r.pass) r.detail = "all identities hold for n = 2..7";
  return r;
}

CriterionResult criterion_traces() {
  CriterionResult r{3, "first and second spectral moments match return probabilities exactly",
                    true, "", 0};
  auto t0 = Clock::now();
  std::vector<WalkSpec> specs;
  for (int n = 2; n <= 5; ++n) {
    specs.push_back(make_spec(WalkKind::FlipTransposeTopB, n));
    for (const Rat& alpha : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)})
      specs.push_back(make_spec(WalkKind::BiasedFlipTransposeTopB, n, alpha));
    specs.push_back(make_spec(WalkKind::FlipTransposeTopD, n));
    for (const Rat& a : {Rat(1, 4), Rat(1, 2), Rat(2, 3)})
      specs.push_back(make_spec(WalkKind::TransposeTopS, n, a));
  }
  for (const WalkSpec& spec : specs) {
    auto lines = exact_spectrum(spec);
    Rat s1 = spectral_power_sum(lines, 1);
    Rat s2 = spectral_power_sum(lines, 2);
    StepMeasure m = step_measure(spec);
    Rat order(Int(static_cast<unsigned long>(group_order(m.group))));
    WalkEngine eng(spec);
    eng.step();
    eng.step();
    Rat expected1 = order * prob_at_identity(m);
    Rat expected2 = order * eng.dist().value(0);
    if (s1 != expected1 || s2 != expected2) {
      r.pass = false;
      r.detail = spec_label(spec) + ": trace " + rat_str(s1) + " vs " + rat_str(expected1) +
                 ", square trace " + rat_str(s2) + " vs " + rat_str(expected2);
      break;
    }
  }
  r.seconds = seconds_since(t0);
  if (r.pass) r.detail = std::to_string(specs.size()) + " walks checked, zero tolerance";
  return r;
}

CriterionResult criterion_projection() {
  CriterionResult r{4, "projection onto S_n intertwines the walks exactly, n in {3,4}, k <= 12",
                    true, "", 0};
  auto t0 = Clock::now();
  for (int n = 3; n <= 4 && r.pass; ++n) {
    WalkEngine eng_b(make_spec(WalkKind::FlipTransposeTopB, n));
    WalkEngine eng_d(make_spec(WalkKind::FlipTransposeTopD, n));
    WalkEngine eng_sb(make_spec(WalkKind::TransposeTopS, n, Rat(1, n)));
    WalkEngine eng_sd(make_spec(WalkKind::TransposeTopS, n, Rat(1, 2 * n - 1)));
    for (long k = 0; k <= 12; ++k) {
      if (k > 0) {
        eng_b.step();
        eng_d.step();
        eng_sb.step();
        eng_sd.step();
      }
      if (auto err = distributions_equal(pushforward_projection(eng_b.dist()), eng_sb.dist())) {
        r.pass = false;
        r.detail = "bn n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + *err;
        break;
      }
      if (auto err = distributions_equal(pushforward_projection(eng_d.dist()), eng_sd.dist())) {
        r.pass = false;
        r.detail = "dn n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + *err;
        break;
      }
    }
  }
  r.seconds = seconds_since(t0);
  if (r.pass) r.detail = "pushforwards agree with the projected walks, zero discrepancy";
  return r;
}

CriterionResult criterion_moments() {
  CriterionResult r{5, "fixed-point moment formulas match the dynamic program exactly", true,
                    "", 0};
  auto t0 = Clock::now();
  for (int n = 4; n <= 5 && r.pass; ++n) {
    for (const Rat& a : {Rat(1, n), Rat(1, 2 * n - 1), Rat(1, 2)}) {
      WalkEngine eng(make_spec(WalkKind::TransposeTopS, n, a));
      for (long k = 0; k <= 10; ++k) {
        if (k > 0) eng.step();
        auto [e1, e2] = fixed_point_moments(eng.dist());
        MomentPair mp = moments_exact(n, a, k);
        if (e1 != mp.e1 || e2 != mp.e2) {
          r.pass = false;
          r.detail = "n=" + std::to_string(n) + " a=" + rat_str(a) + " k=" +
                     std::to_string(k) + ": DP (" + rat_str(e1) + ", " + rat_str(e2) +
                     ") vs formula (" + rat_str(mp.e1) + ", " + rat_str(mp.e2) + ")";
          break;
        }
      }
      if (!r.pass) break;
    }
  }
  r.seconds = seconds_since(t0);
  if (r.pass) r.detail = "n in {4,5}, a in {1/n, 1/(2n-1), 1/2}, k <= 10";
  return r;
}

CriterionResult criterion_sandwich() {
  CriterionResult r{6, "lower bound <= exact TV <= spectral bound (and closed form), k <= 60",
                    true, "", 0};
  auto t0 = Clock::now();
  for (int n = 3; n <= 4 && r.pass; ++n) {
    WalkSpec spec = make_spec(WalkKind::FlipTransposeTopB, n);
    WalkEngine eng(spec);
    long closed_from = static_cast<long>(std::ceil(n * std::log(n)));
    for (long k = 0; k <= 60; ++k) {
      if (k > 0) eng.step();
      Rat tv = eng.tv_exact();
      Rat lower_raw = moment_lower_bound_raw(n, Rat(1, n), k);
      if (lower_raw > tv) {
        r.pass = false;
        r.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": lower " +
                   rat_str(lower_raw) + " exceeds TV " + rat_str(tv);
        break;
      }
      Rat sum = ds_power_sum(spec, k);
      if (4 * tv * tv > sum) {
        r.pass = false;
        r.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   ": spectral bound violated, 4 TV^2 = " + rat_str(4 * tv * tv) +
                   " > " + rat_str(sum);
        break;
      }
      if (k >= closed_from) {
        double tvd = rat_d(tv);
        double cb = closed_form_upper_bn(n, k);
        if (tvd > cb) {
          r.pass = false;
          r.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": TV " +
                     dec_str(tvd) + " exceeds closed form " + dec_str(cb);
          break;
        }
      }
    }
  }
  r.seconds = seconds_since(t0);
  if (r.pass) r.detail = "exact rational comparisons, n in {3,4}";
  return r;
}

CriterionResult criterion_lemma_gaps() {
  CriterionResult r{7, "both summation lemmas hold strictly on their stated ranges", true, "",
                    0};
  auto t0 = Clock::now();
  for (int n = 2; n <= 6 && r.pass; ++n) {
    for (const DoubleDiagram& mu : enumerate_double_diagrams(n)) {
      int m = mu.first.size();
      if (m < 1 || 2 * m > n) continue;
      for (long k : {1L, 5L, 10L}) {
        for (int x : {0, 1}) {
          GapPair gap = lemma_ub1_gap(mu, k, x);
          if (!(gap.lhs < gap.rhs)) {
            r.pass = false;
            r.detail = "tableau-sum lemma fails at mu=" + to_string(mu) + " k=" +
                       std::to_string(k) + " x=" + std::to_string(x) + ": " +
                       rat_str(gap.lhs) + " !< " + rat_str(gap.rhs);
            break;
          }
        }
        if (!r.pass) break;
      }
      if (!r.pass) break;
    }
  }
  for (int ell = 1; ell <= 10 && r.pass; ++ell) {
    long k_mid = std::max(1L, static_cast<long>(std::ceil(ell * std::log(ell))));
    for (long k : {1L, k_mid, 40L}) {
      if (!lemma_ub2_holds(lemma_ub2_gap(ell, k))) {
        r.pass = false;
        r.detail = "partition-sum lemma fails at ell=" + std::to_string(ell) + " k=" +
                   std::to_string(k);
        break;
      }
    }
    if (r.pass && rat_d(lemma_ub2_gap(ell, k_mid).lhs) >= std::exp(1.0)) {
      r.pass = false;
      r.detail = "partition sum at ell=" + std::to_string(ell) +
                 ", k=ceil(ell ln ell) is not below e";
    }
  }
  r.seconds = seconds_since(t0);
  if (r.pass) r.detail = "strict inequalities verified exactly (lemma 1) and in doubles (lemma 2)";
  return r;
}

CriterionResult criterion_alpha_degenerations() {
  CriterionResult r{8, "biased walk degenerates correctly at alpha in {1, 1/2} and matches the oracle",
                    true, "", 0};
  auto t0 = Clock::now();
  for (int n = 2; n <= 5 && r.pass; ++n) {
    if (!aggregates_equal(bn_alpha_spectrum(n, Rat(1)), bn_spectrum(n))) {
      r.pass = false;
      r.detail = "alpha=1 spectrum differs from the unbiased walk at n=" + std::to_string(n);
      break;
    }
    for (const SpectralLine& line : bn_alpha_spectrum(n, Rat(1, 2))) {
      if (line.component == 2 && line.eigenvalue != 0) {
        r.pass = false;
        r.detail = "alpha=1/2 leaves a non-zero component-2 line at n=" + std::to_string(n);
        break;
      }
    }
  }
  if (r.pass) {
    for (const Rat& alpha : {Rat(0), Rat(1, 4), Rat(3, 4)}) {
      if (auto err = spectrum_vs_oracle(
              make_spec(WalkKind::BiasedFlipTransposeTopB, 3, alpha), 1e-9)) {
        r.pass = false;
        r.detail = *err;
        break;
      }
    }
  }
  r.seconds = seconds_since(t0);
  if (r.pass) r.detail = "alpha=1 equals bn, alpha=1/2 kills component 2, oracle agrees at n=3";
  return r;
}

CriterionResult criterion_large_floating() {
  CriterionResult r{9, "n=6 floating walk: monotone TV with the 1/4-crossing inside the bound window",
                    true, "", 0};
  auto t0 = Clock::now();
  const int n = 6;
  const long k_max = 60;
  const double threshold = 0.25;
  WalkSpec spec = make_spec(WalkKind::FlipTransposeTopB, n);
  WalkEngineOptions opts;
  opts.mode = Mode::Floating;
  WalkEngine eng(spec, opts);
  std::vector<double> tvs;
  tvs.reserve(k_max + 1);
  for (long k = 0; k <= k_max; ++k) {
    if (k > 0) eng.step();
    tvs.push_back(eng.tv());
  }
  long k_tv = -1, k_low = -1, k_up = -1;
  for (long k = 0; k <= k_max; ++k) {
    if (k > 0 && tvs[k] > tvs[k - 1] + 1e-10) {
      r.pass = false;
      r.detail = "TV increased between k=" + std::to_string(k - 1) + " and k=" +
                 std::to_string(k);
      break;
    }
    if (k_tv < 0 && tvs[k] <= threshold) k_tv = k;
    if (k_low < 0 && moment_lower_bound(n, Rat(1, n), k) <= threshold) k_low = k;
    if (k_up < 0 && ds_upper_bound(spec, k) <= threshold) k_up = k;
  }
  if (r.pass) {
    if (k_tv < 0 || k_low < 0 || k_up < 0) {
      r.pass = false;
      r.detail = "a 1/4-crossing was not reached by k=60";
    } else if (!(k_low <= k_tv && k_tv <= k_up)) {
      r.pass = false;
      r.detail = "crossing k=" + std::to_string(k_tv) + " outside window [" +
                 std::to_string(k_low) + ", " + std::to_string(k_up) + "]";
    } else {
      r.detail = "crossings: lower " + std::to_string(k_low) + ", TV " + std::to_string(k_tv) +
                 ", spectral " + std::to_string(k_up);
    }
  }
  r.seconds = seconds_since(t0);
  if (r.seconds > 300) {
    r.pass = false;
    r.detail += " (time limit 300s exceeded)";
  }
  return r;
}

CriterionResult criterion_montecarlo() {
  CriterionResult r{10, "n=20 simulation reproduces the exact fixed-point mean within 3 sigma",
                    true, "", 0};
  auto t0 = Clock::now();
  SimConfig config;
  config.spec = make_spec(WalkKind::FlipTransposeTopB, 20);
  config.steps = 59;  // floor(20 ln 20)
  config.trials = 100000;
  config.seed = 12345;
  config.threads = 1;
  FixedPointStats stats = estimate_fixed_point_mean(config);
  double e1 = rat_d(moments_exact(20, Rat(1, 20), config.steps).e1);
  double dev = std::abs(stats.mean - e1);
  if (!(stats.stderr_of_mean > 0) || dev > 3 * stats.stderr_of_mean) {
    r.pass = false;
    r.detail = "mean " + dec_str(stats.mean) + " vs exact " + dec_str(e1) + ", stderr " +
               dec_str(stats.stderr_of_mean);
  } else {
    r.detail = "mean " + dec_str(stats.mean) + ", exact " + dec_str(e1) + ", deviation " +
               dec_str(dev) + " <= 3 * " + dec_str(stats.stderr_of_mean);
  }
  r.seconds = seconds_since(t0);
  if (r.seconds > 120) {
    r.pass = false;
    r.detail += " (time limit 120s exceeded)";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  return {criterion_oracle_sweep(), criterion_counting(),  criterion_traces(),
          criterion_projection(),   criterion_moments(),   criterion_sandwich(),
          criterion_lemma_gaps(),   criterion_alpha_degenerations(),
          criterion_large_floating(), criterion_montecarlo()};
}

namespace {

// ---- CLI verify suites ----

std::vector<CheckResult> suite_oracle(int n_max) {
  if (n_max <= 0) n_max = 5;
  std::vector<CheckResult> out;
  int bn_max = std::min(4, n_max), dn_max = std::min(4, n_max), sn_max = std::min(5, n_max);
  for (const WalkSpec& spec : oracle_sweep(bn_max, dn_max, sn_max)) {
    auto err = spectrum_vs_oracle(spec, 1e-9);
    out.push_back({"spectrum-oracle " + spec_label(spec), !err,
                   err ? *err : "matches within 1e-9"});
  }
  for (int n = 2; n <= std::min(5, n_max); ++n) {
    bool eq = aggregates_equal(bn_alpha_spectrum(n, Rat(1)), bn_spectrum(n));
    out.push_back({"alpha=1 degeneration n=" + std::to_string(n), eq,
                   eq ? "aggregate spectra identical" : "aggregate spectra differ"});
    bool zeros = true;
    for (const SpectralLine& line : bn_alpha_spectrum(n, Rat(1, 2)))
      if (line.component == 2 && line.eigenvalue != 0) zeros = false;
    out.push_back({"alpha=1/2 component-2 zeros n=" + std::to_string(n), zeros,
                   zeros ? "all component-2 lines vanish" : "non-zero component-2 line"});
  }
  return out;
}

std::vector<CheckResult> suite_lemmas(int n_max) {
  if (n_max <= 0) n_max = 6;
  std::vector<CheckResult> out;
  for (int n = 2; n <= n_max; ++n) {
    bool pass = true;
    std::string detail = "strict for all admissible diagrams, k in {1,5,10}, x in {0,1}";
    for (const DoubleDiagram& mu : enumerate_double_diagrams(n)) {
      int m = mu.first.size();
      if (m < 1 || 2 * m > n) continue;
      for (long k : {1L, 5L, 10L}) {
        for (int x : {0, 1}) {
          GapPair gap = lemma_ub1_gap(mu, k, x);
          if (!(gap.lhs < gap.rhs)) {
            pass = false;
            detail = "fails at mu=" + to_string(mu) + " k=" + std::to_string(k) +
                     " x=" + std::to_string(x);
          }
        }
      }
    }
    out.push_back({"tableau-sum lemma n=" + std::to_string(n), pass, detail});
  }
  int ell_max = std::max(10, n_max);
  for (int ell = 1; ell <= ell_max; ++ell) {
    long k_mid = std::max(1L, static_cast<long>(std::ceil(ell * std::log(ell))));
    bool pass = true;
    std::string detail = "strict at k in {1, ceil(ell ln ell), 40}, and below e at the middle k";
    for (long k : {1L, k_mid, 40L}) {
      if (!lemma_ub2_holds(lemma_ub2_gap(ell, k))) {
        pass = false;
        detail = "fails at k=" + std::to_string(k);
      }
    }
    if (rat_d(lemma_ub2_gap(ell, k_mid).lhs) >= std::exp(1.0)) {
      pass = false;
      detail = "not below e at k=ceil(ell ln ell)";
    }
    out.push_back({"partition-sum lemma ell=" + std::to_string(ell), pass, detail});
  }
  return out;
}

std::vector<CheckResult> suite_projection(int n_max) {
  if (n_max <= 0) n_max = 4;
  std::vector<CheckResult> out;
  for (int n = 3; n <= std::min(4, n_max); ++n) {
    struct Case {
      WalkSpec upstairs;
      Rat a;
      const char* label;
    };
    std::vector<Case> cases = {
        {make_spec(WalkKind::FlipTransposeTopB, n), Rat(1, n), "bn"},
        {make_spec(WalkKind::FlipTransposeTopD, n), Rat(1, 2 * n - 1), "dn"},
        {make_spec(WalkKind::BiasedFlipTransposeTopB, n, Rat(1, 3)), Rat(1, n), "bn-alpha"},
    };
    for (const Case& c : cases) {
      WalkEngine up(c.upstairs);
      WalkEngine down(make_spec(WalkKind::TransposeTopS, n, c.a));
      bool pass = true;
      std::string detail = "exact agreement for k <= 12";
      for (long k = 0; k <= 12; ++k) {
        if (k > 0) {
          up.step();
          down.step();
        }
        if (auto err = distributions_equal(pushforward_projection(up.dist()), down.dist())) {
          pass = false;
          detail = "k=" + std::to_string(k) + ": " + *err;
          break;
        }
      }
      out.push_back({std::string("projection ") + c.label + " n=" + std::to_string(n), pass,
                     detail});
    }
  }
  return out;
}

std::vector<CheckResult> suite_moments(int n_max) {
  if (n_max <= 0) n_max = 5;
  std::vector<CheckResult> out;
  for (int n = 3; n <= std::min(5, n_max); ++n) {
    for (const Rat& a : {Rat(1, n), Rat(1, 2 * n - 1), Rat(1, 2)}) {
      WalkEngine eng(make_spec(WalkKind::TransposeTopS, n, a));
      bool pass = true;
      std::string detail = "formula equals dynamic program for k <= 10";
      for (long k = 0; k <= 10; ++k) {
        if (k > 0) eng.step();
        auto [e1, e2] = fixed_point_moments(eng.dist());
        MomentPair mp = moments_exact(n, a, k);
        if (e1 != mp.e1 || e2 != mp.e2) {
          pass = false;
          detail = "k=" + std::to_string(k) + ": DP (" + rat_str(e1) + ", " + rat_str(e2) +
                   ") vs (" + rat_str(mp.e1) + ", " + rat_str(mp.e2) + ")";
          break;
        }
      }
      out.push_back({"moments n=" + std::to_string(n) + " a=" + rat_str(a), pass, detail});
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> verify_suite(const std::string& suite, int n_max) {
  if (suite == "oracle") return suite_oracle(n_max);
  if (suite == "lemmas") return suite_lemmas(n_max);
  if (suite == "projection") return suite_projection(n_max);
  if (suite == "moments") return suite_moments(n_max);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto* name : {"oracle", "lemmas", "projection", "moments"}) {
      auto part = verify_suite(name, n_max);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw InvalidArgument("unknown suite '" + suite +
                        "' (expected oracle, lemmas, projection, moments, all)");
}

std::string render_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int failures = 0;
  for (const CheckResult& c : results) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
    if (!c.pass) ++failures;
  }
  os << results.size() << " checks, " << failures << " failures\n";
  return os.str();
}

int count_failures(const std::vector<CheckResult>& results) {
  int failures = 0;
  for (const CheckResult& c : results)
    if (!c.pass) ++failures;
  return failures;
}

}  // namespace fliptop
