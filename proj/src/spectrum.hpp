#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rational.hpp"
#include "tableaux.hpp"
#include "walk_spec.hpp"

namespace fliptop {

// Exact eigenvalue data for the four walks, computed from content formulas.
//
// The transition operator of each walk acts on every irreducible block
// through a Jucys-Murphy-type element, so it is diagonal in the
// Gelfand-Tsetlin basis and its eigenvalues depend only on the content and
// component of the box holding n:
//   B_n walk:  (c+1)/n when n sits in component 1, c/n in component 2,
//              over double diagrams mu with |mu| = n; each line carries
//              multiplicity dim(V^mu) * (number of standard double tableaux
//              with n in a corner of that content and component).
//   biased:    component-2 eigenvalues scale by (2*alpha - 1).
//   D_n walk:  (2c+1)/(2n-1) for corners of either component, over unordered
//              pairs; split pairs carry dim V^mu, symmetric pairs half that.
//   S_n walk:  a + (1-a) c/(n-1) for removable corners of lambda |- n with
//              multiplicity d_lambda * d_(lambda minus corner).
struct SpectralLine {
  Rat eigenvalue;
  Int multiplicity;
  std::variant<DoubleDiagram, Partition> source;
  int component;  // 1 or 2 for signed walks, 0 for S_n lines
};

std::vector<SpectralLine> bn_spectrum(int n);
std::vector<SpectralLine> bn_alpha_spectrum(int n, const Rat& alpha);
std::vector<SpectralLine> dn_spectrum(int n);
std::vector<SpectralLine> sn_a_spectrum(int n, const Rat& a);

// Dispatch on the walk kind. Lines come sorted by eigenvalue descending,
// ties broken by component then source text, so output is deterministic.
std::vector<SpectralLine> exact_spectrum(const WalkSpec& spec);

std::string source_text(const SpectralLine& line);

// Collapses lines with equal eigenvalues; sorted descending.
std::vector<std::pair<Rat, Int>> aggregate(const std::vector<SpectralLine>& lines);

// sum over lines of multiplicity * eigenvalue^power
Rat spectral_power_sum(const std::vector<SpectralLine>& lines, unsigned long power);

Int total_multiplicity(const std::vector<SpectralLine>& lines);

// Multiplicity-expanded eigenvalues, descending; length equals |G|.
std::vector<double> expand_spectrum(const std::vector<SpectralLine>& lines);

// Numerical oracle: builds the dense |G| x |G| transition matrix from the
// step measure, checks symmetry, and feeds it to a self-adjoint eigensolver.
// Returns all |G| eigenvalues, descending. Never used on the formula path.
std::vector<double> brute_force_spectrum(const WalkSpec& spec,
                                         std::uint64_t order_cap = 1000);

// JSON array of {"num","den","multiplicity","diagram","component"} objects
// (aggregate form drops the last two). Multiplicities are emitted as plain
// JSON integers of arbitrary size.
std::string spectrum_json(const WalkSpec& spec, bool aggregate_lines);
std::string spectrum_csv(const WalkSpec& spec, bool aggregate_lines);

}  // namespace fliptop
