#include "bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace fliptop {

namespace {

// Strips the trivial line (eigenvalue exactly 1). Every walk here is
// irreducible and aperiodic, so that line must carry multiplicity exactly 1.
Rat nontrivial_power_sum(const std::vector<SpectralLine>& lines, unsigned long power) {
  Int trivial_mult = 0;
  Rat s = 0;
  for (const SpectralLine& line : lines) {
    if (line.eigenvalue == 1) {
      trivial_mult += line.multiplicity;
      continue;
    }
    s += Rat(line.multiplicity) * rat_pow(line.eigenvalue, power);
  }
  if (trivial_mult != 1) throw std::logic_error("trivial eigenvalue line must be simple");
  s.canonicalize();
  return s;
}

}  // namespace

Rat ds_power_sum(const WalkSpec& spec, long k) {
  if (k < 0) throw InvalidArgument("k must be non-negative");
  return nontrivial_power_sum(exact_spectrum(spec), 2 * static_cast<unsigned long>(k));
}

double ds_upper_bound(const WalkSpec& spec, long k) {
  return 0.5 * std::sqrt(rat_d(ds_power_sum(spec, k)));
}

double closed_form_upper_bn(int n, long k) {
  if (n < 2) throw InvalidArgument("bound requires n >= 2");
  double threshold = n * std::log(n);
  if (static_cast<double>(k) < threshold)
    throw InvalidArgument("closed-form bound is valid only for k >= n ln n");
  double e = std::exp(1.0);
  double decay = std::exp(-2.0 * k / n);
  double inner = 2.0 * decay + (4.0 + 4.0 * e) * std::expm1(n * static_cast<double>(n) * decay) +
                 std::exp(-4.0 * k / n);
  return 0.5 * std::sqrt(inner);
}

double closed_form_upper_dn(int n, long k) {
  if (n < 2) throw InvalidArgument("bound requires n >= 2");
  double threshold = (n - 0.5) * std::log(n);
  if (static_cast<double>(k) < threshold)
    throw InvalidArgument("closed-form bound is valid only for k >= (n - 1/2) ln n");
  double e = std::exp(1.0);
  double decay = std::exp(-4.0 * k / (2.0 * n - 1.0));
  double inner = 2.0 * (1.0 + e) * std::expm1(n * static_cast<double>(n) * decay) + decay;
  return 0.5 * std::sqrt(inner);
}

MomentPair moments_exact(int n, const Rat& a, long k) {
  if (n < 3) throw InvalidArgument("moment formulas require n >= 3");
  if (a <= 0 || a >= 1) throw InvalidArgument("a must lie strictly inside (0,1)");
  if (k < 0) throw InvalidArgument("k must be non-negative");
  unsigned long ku = static_cast<unsigned long>(k);

  // per-module eigenvalues of the projected walk, see sn_a_spectrum
  Rat rho1 = Rat(n - 2) / (n - 1) + a / (n - 1);        // (n+a-2)/(n-1)
  Rat tau = (a * n - 1) / (n - 1);                       // (an-1)/(n-1)
  Rat rho2 = Rat(n - 3) / (n - 1) + 2 * a / (n - 1);     // (n+2a-3)/(n-1)
  Rat sigma = (a * n + a - 2) / (n - 1);                 // (an+a-2)/(n-1)
  rho1.canonicalize();
  tau.canonicalize();
  rho2.canonicalize();
  sigma.canonicalize();

  Rat p_rho1 = rat_pow(rho1, ku), p_tau = rat_pow(tau, ku);
  Rat p_rho2 = rat_pow(rho2, ku), p_a = rat_pow(a, ku), p_sigma = rat_pow(sigma, ku);

  Rat std_block = (n - 2) * p_rho1 + p_tau;  // the (n-1,1) contribution
  Rat e1 = 1 + std_block;

  // (n-2,2) and (n-2,1,1) contributions; at n = 3 the first coefficient is -1
  // and cancels the (n-2) a^k term exactly.
  Rat c22(Int(static_cast<long>(n - 1) * (n - 4)), Int(2));
  Rat c211(Int(static_cast<long>(n - 2) * (n - 3)), Int(2));
  c22.canonicalize();
  c211.canonicalize();
  Rat e2 = 2 + 3 * std_block + (c22 * p_rho2 + (n - 2) * p_a) +
           (c211 * p_rho2 + (n - 2) * p_sigma);
  e1.canonicalize();
  e2.canonicalize();
  return {e1, e2};
}

Rat moment_lower_bound_raw(int n, const Rat& a, long k) {
  MomentPair m = moments_exact(n, a, k);
  Rat var = m.e2 - m.e1 * m.e1;
  Rat out = 1 - 4 * var / (m.e1 * m.e1) - 2 / m.e1;
  out.canonicalize();
  return out;
}

double moment_lower_bound(int n, const Rat& a, long k) {
  double v = rat_d(moment_lower_bound_raw(n, a, k));
  if (v < 0) return 0;
  if (v > 1) return 1;
  return v;
}

Rat projected_param(const WalkSpec& spec) {
  switch (spec.kind) {
    case WalkKind::FlipTransposeTopB:
    case WalkKind::BiasedFlipTransposeTopB:
      return Rat(1, spec.n);
    case WalkKind::FlipTransposeTopD:
      return Rat(1, 2 * spec.n - 1);
    case WalkKind::TransposeTopS:
      return spec.param;
  }
  throw InvalidArgument("unknown walk kind");
}

GapPair lemma_ub1_gap(const DoubleDiagram& mu, long k, int x) {
  int n = mu.total();
  int m = mu.first.size();
  if (n < 2) throw InvalidArgument("lemma needs at least two boxes");
  if (m < 1 || 2 * m > n)
    throw InvalidArgument("lemma requires 1 <= |mu1| <= n/2");
  if (x != 0 && x != 1) throw InvalidArgument("x must be 0 or 1");
  if (k < 1) throw InvalidArgument("k must be positive");
  unsigned long pw = 2 * static_cast<unsigned long>(k);

  Rat lhs = 0;
  for (const CornerLine& corner : last_box_content_spectrum(mu)) {
    Rat base(corner.content + x, n);
    base.canonicalize();
    lhs += Rat(corner.count) * rat_pow(base, pw);
  }
  lhs.canonicalize();

  auto edge_terms = [&](const Partition& p) -> Rat {
    Rat row(p.part(1), n), col(p.rows(), n);
    row.canonicalize();
    col.canonicalize();
    return rat_pow(row, pw) + rat_pow(col, pw);
  };
  Rat rhs = Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m))) *
            Rat(syt_count(mu.second)) * Rat(syt_count(mu.first)) *
            (edge_terms(mu.first) + edge_terms(mu.second));
  rhs.canonicalize();
  return {lhs, rhs};
}

Ub2Gap lemma_ub2_gap(int ell, long k) {
  if (ell < 1) throw InvalidArgument("ell must be positive");
  if (k < 1) throw InvalidArgument("k must be positive");
  unsigned long pw = 2 * static_cast<unsigned long>(k);
  Rat lhs = 0;
  for (const Partition& lambda : enumerate_partitions(ell)) {
    Int d = syt_count(lambda);
    Rat base(lambda.part(1), ell);
    base.canonicalize();
    lhs += Rat(d * d) * rat_pow(base, pw);
  }
  lhs.canonicalize();
  double log_rhs = static_cast<double>(ell) * ell * std::exp(-2.0 * k / ell);
  return {lhs, std::exp(log_rhs), log_rhs};
}

bool lemma_ub2_holds(const Ub2Gap& gap) {
  Rat excess = gap.lhs - 1;
  excess.canonicalize();
  if (sgn(excess) < 0) return true;  // below the trivial term, certainly below exp
  return std::log1p(rat_d(excess)) < gap.log_rhs;
}

std::string bounds_curve_csv(const WalkSpec& spec, long k_max, bool with_tv,
                             WalkEngineOptions opts) {
  if (k_max < 0) throw InvalidArgument("k_max must be non-negative");
  validate_spec(spec);
  int n = spec.n;
  Rat a = projected_param(spec);
  std::vector<SpectralLine> lines = exact_spectrum(spec);

  bool has_closed = spec.kind != WalkKind::TransposeTopS;
  double closed_threshold =
      spec.kind == WalkKind::FlipTransposeTopD ? (n - 0.5) * std::log(n) : n * std::log(n);

  std::optional<WalkEngine> eng;
  if (with_tv) eng.emplace(spec, opts);

  std::ostringstream os;
  os << "k,lower,tv_exact,ds_upper,closed_upper,n,walk_kind\n";
  for (long k = 0; k <= k_max; ++k) {
    os << k << ',' << dec_str(moment_lower_bound(n, a, k)) << ',';
    if (eng) {
      if (k > 0) eng->step();
      os << dec_str(eng->tv());
    }
    os << ',';
    Rat sum = nontrivial_power_sum(lines, 2 * static_cast<unsigned long>(k));
    os << dec_str(0.5 * std::sqrt(rat_d(sum))) << ',';
    if (has_closed && static_cast<double>(k) >= closed_threshold) {
      double c = spec.kind == WalkKind::FlipTransposeTopD ? closed_form_upper_dn(n, k)
                                                          : closed_form_upper_bn(n, k);
      os << dec_str(c);
    }
    os << ',' << n << ',' << walk_kind_name(spec.kind) << '\n';
  }
  return os.str();
}

}  // namespace fliptop
