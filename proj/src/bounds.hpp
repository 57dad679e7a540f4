#pragma once

#include <string>

#include "rational.hpp"
#include "spectrum.hpp"
#include "tableaux.hpp"
#include "walk.hpp"
#include "walk_spec.hpp"

namespace fliptop {

// Upper and lower bounds on the total variation distance to uniform.
//
// Upper bounds follow the spectral route: for a symmetric walk,
//   4 TV(k)^2 <= sum over non-trivial eigenvalue lines of mult * eig^(2k).
// The closed forms bound that sum analytically and hold past k of order
// n log n (natural log throughout). The lower bound tracks the first two
// moments of the fixed-point count of the projected walk through Chebyshev
// and Markov estimates.

// sum of mult * eig^(2k) over all non-trivial lines, exact.
Rat ds_power_sum(const WalkSpec& spec, long k);

// (1/2) sqrt(ds_power_sum); the raw spectral bound, may exceed 1 for small k.
double ds_upper_bound(const WalkSpec& spec, long k);

// Valid for k >= n ln n; throws InvalidArgument below that.
double closed_form_upper_bn(int n, long k);
// Valid for k >= (n - 1/2) ln n.
double closed_form_upper_dn(int n, long k);

struct MomentPair {
  Rat e1, e2;  // E[f], E[f^2] under the k-step projected walk
};

// Exact moments of the fixed-point count under the a-biased top-transposition
// walk on S_n after k steps, from the closed per-module formulas. Exact for
// all n >= 3 (at n = 3 two terms cancel; verified against the dynamic
// program).
MomentPair moments_exact(int n, const Rat& a, long k);

// 1 - 4(E2 - E1^2)/E1^2 - 2/E1, exact; can be negative.
Rat moment_lower_bound_raw(int n, const Rat& a, long k);
// The raw value clamped to [0,1].
double moment_lower_bound(int n, const Rat& a, long k);

// The a-parameter of the projected walk, the one whose moment bound lower
// bounds this walk's TV distance.
Rat projected_param(const WalkSpec& spec);

struct GapPair {
  Rat lhs, rhs;  // the lemma asserts lhs < rhs strictly
};

// Tableau-sum lemma: for a double diagram mu with 1 <= |mu1| <= n/2 and
// x in {0,1},
//   sum over standard double tableaux T of ((c(b_T(n)) + x)/n)^(2k)
//     < C(n,|mu1|) d_mu2 d_mu1 * sum_i [ (mu^i_1/n)^(2k) + (mu^i'_1/n)^(2k) ].
// The lhs is assembled from corner counts, no tableau enumeration.
GapPair lemma_ub1_gap(const DoubleDiagram& mu, long k, int x);

struct Ub2Gap {
  Rat lhs;         // sum over lambda |- ell of d^2 (lambda_1/ell)^(2k)
  double rhs;      // exp(log_rhs), may round to 1.0 when log_rhs underflows
  double log_rhs;  // ell^2 exp(-2k/ell)
};

Ub2Gap lemma_ub2_gap(int ell, long k);

// lhs < rhs, decided in the log domain: both sides approach 1 at large k,
// where the direct double comparison degenerates. lhs >= 1 always, and
// ln(lhs) = log1p(lhs - 1) with the excess computed exactly first.
bool lemma_ub2_holds(const Ub2Gap& gap);

// CSV columns k,lower,tv_exact,ds_upper,closed_upper,n,walk_kind. tv_exact is
// filled only when with_tv is set; closed_upper is blank below its validity
// threshold and for the S_n walk.
std::string bounds_curve_csv(const WalkSpec& spec, long k_max, bool with_tv,
                             WalkEngineOptions opts = {});

}  // namespace fliptop
