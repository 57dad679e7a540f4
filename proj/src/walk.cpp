#include "walk.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "errors.hpp"

namespace fliptop {

namespace {

void append_atom(WindowMeasure& m, const SignedPermutation& el, const Rat& p) {
  if (sgn(p) == 0) return;  // degenerate parameter values shrink the support
  m.atoms.push_back({el.window(), p});
}

void check_atoms(const WindowMeasure& m) {
  Rat total = 0;
  std::vector<std::vector<int>> windows;
  for (const auto& [w, p] : m.atoms) {
    if (sgn(p) <= 0) throw InvalidArgument("step measure atoms must be positive");
    total += p;
    windows.push_back(w);
  }
  std::sort(windows.begin(), windows.end());
  if (std::adjacent_find(windows.begin(), windows.end()) != windows.end())
    throw InvalidArgument("step measure atoms must be distinct");
  if (total != 1) throw InvalidArgument("step measure must have total mass 1");
}

Int measure_common_denominator(const StepMeasure& m) {
  Int den = 1;
  for (const auto& [r, p] : m.atoms)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.get_den().get_mpz_t());
  return den;
}

// act[a][x] = rank(x * atom_a^-1); drives result(x) = sum_a d(x * atom_a^-1) p_a.
std::vector<std::vector<std::uint32_t>> action_tables(const StepMeasure& m) {
  std::uint64_t order = group_order(m.group);
  std::vector<std::vector<int>> inv_atoms;
  inv_atoms.reserve(m.atoms.size());
  for (const auto& [r, p] : m.atoms) {
    std::vector<int> w = unrank_element(r, m.group);
    std::vector<int> inv(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
      int v = w[i];
      if (v > 0)
        inv[v - 1] = static_cast<int>(i) + 1;
      else
        inv[-v - 1] = -(static_cast<int>(i) + 1);
    }
    inv_atoms.push_back(std::move(inv));
  }
  std::vector<std::vector<std::uint32_t>> act(m.atoms.size());
  for (auto& t : act) t.resize(order);
  std::vector<int> prod(static_cast<size_t>(m.group.n));
  for (std::uint64_t x = 0; x < order; ++x) {
    std::vector<int> wx = unrank_element(x, m.group);
    for (size_t a = 0; a < inv_atoms.size(); ++a) {
      const std::vector<int>& s = inv_atoms[a];
      for (size_t i = 0; i < s.size(); ++i) {
        int si = s[i];
        prod[i] = si > 0 ? wx[si - 1] : -wx[-si - 1];
      }
      act[a][x] = static_cast<std::uint32_t>(rank_element(prod, m.group));
    }
  }
  return act;
}

void parallel_over(std::uint64_t count, unsigned threads,
                   const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (threads <= 1 || count < 2048) {
    body(0, count);
    return;
  }
  unsigned t = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  std::vector<std::thread> pool;
  std::uint64_t chunk = (count + t - 1) / t;
  for (unsigned i = 0; i < t; ++i) {
    std::uint64_t lo = i * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

GroupDistribution convolve_with_tables(const GroupDistribution& d, const StepMeasure& m,
                                       const std::vector<std::vector<std::uint32_t>>& act,
                                       const Int& mden, unsigned threads) {
  GroupDistribution out;
  out.group_ = d.group();
  std::uint64_t order = d.size();
  if (d.mode() == Mode::Exact) {
    std::vector<Int> weights;
    weights.reserve(m.atoms.size());
    for (const auto& [r, p] : m.atoms) {
      Rat w = p * Rat(mden);
      w.canonicalize();
      if (w.get_den() != 1) throw InvalidArgument("measure denominator mismatch");
      weights.push_back(w.get_num());
    }
    out.mode_ = Mode::Exact;
    out.den_ = d.den_ * mden;
    out.num_.assign(order, Int(0));
    parallel_over(order, threads, [&](std::uint64_t lo, std::uint64_t hi) {
      Int acc;
      for (std::uint64_t x = lo; x < hi; ++x) {
        acc = 0;
        for (size_t a = 0; a < act.size(); ++a)
          mpz_addmul(acc.get_mpz_t(), d.num_[act[a][x]].get_mpz_t(),
                     weights[a].get_mpz_t());
        out.num_[x] = acc;
      }
    });
  } else {
    std::vector<double> weights;
    weights.reserve(m.atoms.size());
    for (const auto& [r, p] : m.atoms) weights.push_back(rat_d(p));
    out.mode_ = Mode::Floating;
    out.fval_.assign(order, 0.0);
    parallel_over(order, threads, [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t x = lo; x < hi; ++x) {
        double acc = 0;
        for (size_t a = 0; a < act.size(); ++a) acc += d.fval_[act[a][x]] * weights[a];
        out.fval_[x] = acc;
      }
    });
  }
  return out;
}

WindowMeasure step_windows(const WalkSpec& spec) {
  validate_spec(spec);
  int n = spec.n;
  WindowMeasure m{group_of(spec), {}};

  switch (spec.kind) {
    case WalkKind::FlipTransposeTopB: {
      Rat w(1, 2 * n);
      append_atom(m, SignedPermutation::identity(n), w);
      for (int i = 1; i < n; ++i)
        append_atom(m, generator(GeneratorKind::Transpose, i, n), w);
      for (int i = 1; i <= n; ++i)
        append_atom(m, generator(GeneratorKind::FlipTranspose, i, n), w);
      break;
    }
    case WalkKind::BiasedFlipTransposeTopB: {
      // Expansion of (1/2n)(alpha*1 + (1-alpha)(-n,n))(1 + (-n,n) + X_n),
      // X_n = sum over i<n of (i,n) + (-i,n). The cross terms (-n,n)(i,n) and
      // (-i,i)(i,n) are mutual inverses, so symmetry survives the bias.
      const Rat& alpha = spec.param;
      Rat base(1, 2 * n);
      Rat wa = alpha * base, wb = (1 - alpha) * base;
      wa.canonicalize();
      wb.canonicalize();
      append_atom(m, SignedPermutation::identity(n), base);
      append_atom(m, generator(GeneratorKind::NegateLast, 0, n), base);
      SignedPermutation neg_last = generator(GeneratorKind::NegateLast, 0, n);
      for (int i = 1; i < n; ++i) {
        SignedPermutation ti = generator(GeneratorKind::Transpose, i, n);
        append_atom(m, ti, wa);
        append_atom(m, generator(GeneratorKind::FlipTranspose, i, n), wa);
        append_atom(m, compose(neg_last, ti), wb);
        append_atom(m, compose(generator(GeneratorKind::Flip, i, n), ti), wb);
      }
      break;
    }
    case WalkKind::FlipTransposeTopD: {
      Rat w(1, 2 * n - 1);
      append_atom(m, SignedPermutation::identity(n), w);
      for (int i = 1; i < n; ++i) {
        append_atom(m, generator(GeneratorKind::Transpose, i, n), w);
        append_atom(m, generator(GeneratorKind::FlipTranspose, i, n), w);
      }
      break;
    }
    case WalkKind::TransposeTopS: {
      const Rat& a = spec.param;
      Rat w = (1 - a) / (n - 1);
      w.canonicalize();
      m.atoms.push_back({Permutation::identity(n).window(), a});
      for (int i = 1; i < n; ++i) {
        Permutation t = project(generator(GeneratorKind::Transpose, i, n));
        m.atoms.push_back({t.window(), w});
      }
      break;
    }
  }
  check_atoms(m);
  return m;
}

StepMeasure step_measure(const WalkSpec& spec) {
  WindowMeasure wm = step_windows(spec);
  StepMeasure m{wm.group, {}};
  m.atoms.reserve(wm.atoms.size());
  for (const auto& [w, p] : wm.atoms) m.atoms.push_back({rank_element(w, wm.group), p});
  return m;
}

GroupDistribution GroupDistribution::delta_at_identity(GroupId g, std::uint64_t group_cap) {
  std::uint64_t order = group_order(g);
  if (order > group_cap) throw CapExceeded("group order exceeds distribution cap");
  GroupDistribution d;
  d.group_ = g;
  d.mode_ = Mode::Exact;
  d.num_.assign(order, Int(0));
  d.num_[0] = 1;
  d.den_ = 1;
  return d;
}

GroupDistribution GroupDistribution::uniform(GroupId g, std::uint64_t group_cap) {
  std::uint64_t order = group_order(g);
  if (order > group_cap) throw CapExceeded("group order exceeds distribution cap");
  GroupDistribution d;
  d.group_ = g;
  d.mode_ = Mode::Exact;
  d.num_.assign(order, Int(1));
  d.den_ = Int(static_cast<unsigned long>(order));
  return d;
}

std::uint64_t GroupDistribution::size() const {
  return mode_ == Mode::Exact ? num_.size() : fval_.size();
}

Rat GroupDistribution::value(std::uint64_t r) const {
  if (mode_ != Mode::Exact) throw InvalidArgument("distribution is in floating mode");
  if (r >= num_.size()) throw InvalidArgument("rank out of range");
  Rat v(num_[r], den_);
  v.canonicalize();
  return v;
}

double GroupDistribution::fvalue(std::uint64_t r) const {
  if (mode_ == Mode::Floating) {
    if (r >= fval_.size()) throw InvalidArgument("rank out of range");
    return fval_[r];
  }
  return rat_d(value(r));
}

Rat GroupDistribution::total_mass() const {
  if (mode_ != Mode::Exact) throw InvalidArgument("distribution is in floating mode");
  Int s = 0;
  for (const Int& v : num_) s += v;
  Rat t(s, den_);
  t.canonicalize();
  return t;
}

void GroupDistribution::to_floating() {
  if (mode_ == Mode::Floating) return;
  fval_.resize(num_.size());
  double den = den_.get_d();
  // den can exceed double range under large bit budgets; fall back to mpq
  bool den_fits = std::isfinite(den) && den > 0;
  for (size_t i = 0; i < num_.size(); ++i) {
    if (den_fits) {
      fval_[i] = num_[i].get_d() / den;
    } else {
      Rat v(num_[i], den_);
      v.canonicalize();
      fval_[i] = rat_d(v);
    }
  }
  num_.clear();
  num_.shrink_to_fit();
  den_ = 1;
  mode_ = Mode::Floating;
}

GroupDistribution convolve_step(const GroupDistribution& d, const StepMeasure& m,
                                unsigned threads) {
  if (!(d.group() == m.group))
    throw InvalidArgument("distribution and measure live on different groups");
  return convolve_with_tables(d, m, action_tables(m), measure_common_denominator(m),
                              threads);
}

// TV(d, U) = (1/2) sum_x |num[x] * |G| - den| / (den * |G|), all exact.
Rat tv_to_uniform_exact(const GroupDistribution& d) {
  if (d.mode() != Mode::Exact) throw InvalidArgument("distribution is in floating mode");
  std::uint64_t order = d.size();
  Int g(static_cast<unsigned long>(order));
  Int sum = 0, diff;
  for (std::uint64_t x = 0; x < order; ++x) {
    diff = d.num_[x] * g - d.den_;
    sum += abs(diff);
  }
  Rat tv(sum, 2 * d.den_ * g);
  tv.canonicalize();
  return tv;
}

double tv_to_uniform(const GroupDistribution& d) {
  if (d.mode() == Mode::Exact) return rat_d(tv_to_uniform_exact(d));
  std::uint64_t order = d.size();
  double u = 1.0 / static_cast<double>(order);
  double s = 0;
  for (std::uint64_t x = 0; x < order; ++x) s += std::abs(d.fvalue(x) - u);
  return 0.5 * s;
}

GroupDistribution pushforward_projection(const GroupDistribution& d) {
  GroupId g = d.group();
  if (g.family == Family::S)
    throw InvalidArgument("distribution already lives on the symmetric group");
  GroupId sg{Family::S, g.n};
  std::uint64_t order = d.size(), sorder = group_order(sg);
  GroupDistribution out;
  out.group_ = sg;
  std::vector<std::uint32_t> proj(order);
  for (std::uint64_t x = 0; x < order; ++x) {
    std::vector<int> w = unrank_element(x, g);
    for (int& v : w) v = std::abs(v);
    proj[x] = static_cast<std::uint32_t>(rank_element(w, sg));
  }
  if (d.mode() == Mode::Exact) {
    out.mode_ = Mode::Exact;
    out.den_ = d.den_;
    out.num_.assign(sorder, Int(0));
    for (std::uint64_t x = 0; x < order; ++x) out.num_[proj[x]] += d.num_[x];
  } else {
    out.mode_ = Mode::Floating;
    out.fval_.assign(sorder, 0.0);
    for (std::uint64_t x = 0; x < order; ++x) out.fval_[proj[x]] += d.fval_[x];
  }
  return out;
}

std::pair<Rat, Rat> fixed_point_moments(const GroupDistribution& d) {
  if (d.group().family != Family::S)
    throw InvalidArgument("fixed-point moments need a distribution on S_n");
  if (d.mode() != Mode::Exact) throw InvalidArgument("distribution is in floating mode");
  std::uint64_t order = d.size();
  Int s1 = 0, s2 = 0;
  for (std::uint64_t x = 0; x < order; ++x) {
    std::vector<int> w = unrank_element(x, d.group());
    long f = 0;
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] == static_cast<int>(i) + 1) ++f;
    s1 += d.num_[x] * f;
    s2 += d.num_[x] * (f * f);
  }
  Rat e1(s1, d.den_), e2(s2, d.den_);
  e1.canonicalize();
  e2.canonicalize();
  return {e1, e2};
}

WalkEngine::WalkEngine(WalkSpec spec, WalkEngineOptions opts)
    : spec_(std::move(spec)),
      opts_(opts),
      measure_(step_measure(spec_)),
      dist_(GroupDistribution::delta_at_identity(group_of(spec_), opts.group_cap)) {
  if (opts_.mode == Mode::Floating) dist_.to_floating();
  step_den_ = measure_common_denominator(measure_);
  act_ = action_tables(measure_);
}

void WalkEngine::step() {
  if (dist_.mode() == Mode::Exact) {
    Int next_den = dist_.common_denominator() * step_den_;
    if (mpz_sizeinbase(next_den.get_mpz_t(), 2) > opts_.bit_budget) dist_.to_floating();
  }
  dist_ = convolve_with_tables(dist_, measure_, act_, step_den_, opts_.threads);
  ++k_;
}

std::optional<long> mixing_time(const WalkSpec& spec, double threshold, long k_max,
                                WalkEngineOptions opts) {
  if (threshold < 0 || threshold > 1) throw InvalidArgument("threshold must lie in [0,1]");
  if (k_max < 0) throw InvalidArgument("k_max must be non-negative");
  WalkEngine eng(spec, opts);
  Rat thresh_exact;
  mpq_set_d(thresh_exact.get_mpq_t(), threshold);  // doubles embed exactly in Q
  for (long k = 0; k <= k_max; ++k) {
    if (k > 0) eng.step();
    if (eng.dist().mode() == Mode::Exact) {
      if (eng.tv_exact() <= thresh_exact) return k;
    } else {
      if (eng.tv() <= threshold) return k;
    }
  }
  return std::nullopt;
}

std::string tv_curve_csv(const WalkSpec& spec, long k_max, bool exact_cells,
                         WalkEngineOptions opts) {
  if (k_max < 0) throw InvalidArgument("k_max must be non-negative");
  WalkEngine eng(spec, opts);
  std::ostringstream os;
  os << "k,tv,mode,n,walk_kind\n";
  for (long k = 0; k <= k_max; ++k) {
    if (k > 0) eng.step();
    bool exact = eng.dist().mode() == Mode::Exact;
    os << k << ',';
    if (exact && exact_cells)
      os << rat_str(eng.tv_exact());
    else
      os << dec_str(eng.tv());
    os << ',' << (exact ? "exact" : "floating") << ',' << spec.n << ','
       << walk_kind_name(spec.kind) << '\n';
  }
  return os.str();
}

}  // namespace fliptop
