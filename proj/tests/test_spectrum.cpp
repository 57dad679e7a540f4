#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "json.hpp"
#include "spectrum.hpp"
#include "walk.hpp"

using namespace fliptop;

namespace {

std::map<Rat, Int> aggregate_map(const std::vector<SpectralLine>& lines) {
  std::map<Rat, Int> m;
  for (const auto& [eig, mult] : aggregate(lines)) m[eig] = mult;
  return m;
}

WalkSpec bn_spec(int n) { return {WalkKind::FlipTransposeTopB, n, Rat(0)}; }

}  // namespace

TEST_CASE("hand-computed aggregate spectrum of the n=3 walk") {
  std::map<Rat, Int> expected = {{Rat(1), 1},       {Rat(2, 3), 9},  {Rat(1, 3), 14},
                                 {Rat(0), 14},      {Rat(-1, 3), 9}, {Rat(-2, 3), 1}};
  CHECK(aggregate_map(bn_spectrum(3)) == expected);
}

TEST_CASE("hand-computed aggregate spectra of the even-subgroup walk") {
  std::map<Rat, Int> expected3 = {
      {Rat(1), 1}, {Rat(3, 5), 8}, {Rat(1, 5), 6}, {Rat(-1, 5), 8}, {Rat(-3, 5), 1}};
  CHECK(aggregate_map(dn_spectrum(3)) == expected3);
  // D_2 is the Klein four group; the walk has 3 atoms
  std::map<Rat, Int> expected2 = {{Rat(1), 1}, {Rat(1, 3), 2}, {Rat(-1, 3), 1}};
  CHECK(aggregate_map(dn_spectrum(2)) == expected2);
}

TEST_CASE("second-largest eigenvalue and its multiplicity") {
  for (int n : {3, 4, 5}) {
    auto agg = aggregate(bn_spectrum(n));
    REQUIRE(agg.size() >= 2);
    CHECK(agg[0].first == 1);
    CHECK(agg[0].second == 1);
    CHECK(agg[1].first == Rat(n - 1, n));
    CHECK(agg[1].second == 2 * (n - 1) * (n - 1) + 1);
  }
}

TEST_CASE("multiplicities fill the group order") {
  for (int n = 2; n <= 7; ++n) {
    Int bn_order = factorial(n) << n;
    CHECK(total_multiplicity(bn_spectrum(n)) == bn_order);
    CHECK(total_multiplicity(bn_alpha_spectrum(n, Rat(2, 5))) == bn_order);
    CHECK(total_multiplicity(sn_a_spectrum(n, Rat(1, 3))) == factorial(n));
    CHECK(total_multiplicity(dn_spectrum(n)) == bn_order / 2);
  }
  CHECK_THROWS_AS(bn_spectrum(1), InvalidArgument);
}

TEST_CASE("eigenvalues stay inside [-1, 1] with a simple top line") {
  std::vector<WalkSpec> specs = {
      {WalkKind::FlipTransposeTopB, 5, Rat(0)},
      {WalkKind::BiasedFlipTransposeTopB, 4, Rat(1, 3)},
      {WalkKind::FlipTransposeTopD, 5, Rat(0)},
      {WalkKind::TransposeTopS, 6, Rat(2, 7)},
  };
  for (const WalkSpec& spec : specs) {
    auto lines = exact_spectrum(spec);
    Int top_mult = 0;
    for (size_t i = 0; i < lines.size(); ++i) {
      CHECK(lines[i].eigenvalue <= 1);
      CHECK(lines[i].eigenvalue >= -1);
      if (lines[i].eigenvalue == 1) top_mult += lines[i].multiplicity;
      if (i + 1 < lines.size()) CHECK(!(lines[i].eigenvalue < lines[i + 1].eigenvalue));
    }
    CHECK(top_mult == 1);
  }
}

TEST_CASE("trace equals the return probability, exactly") {
  for (const WalkSpec& spec :
       {WalkSpec{WalkKind::FlipTransposeTopB, 4, Rat(0)},
        WalkSpec{WalkKind::BiasedFlipTransposeTopB, 3, Rat(1, 4)},
        WalkSpec{WalkKind::FlipTransposeTopD, 4, Rat(0)},
        WalkSpec{WalkKind::TransposeTopS, 5, Rat(1, 5)}}) {
    auto lines = exact_spectrum(spec);
    StepMeasure m = step_measure(spec);
    Rat p_id = 0;
    for (const auto& [r, p] : m.atoms)
      if (r == 0) p_id = p;
    Rat order(Int(static_cast<unsigned long>(group_order(m.group))));
    CHECK(spectral_power_sum(lines, 1) == order * p_id);
  }
}

TEST_CASE("biased walk: degenerations at the edges of the parameter range") {
  for (int n : {2, 3, 4, 5}) {
    CHECK(aggregate(bn_alpha_spectrum(n, Rat(1))) == aggregate(bn_spectrum(n)));
    for (const SpectralLine& line : bn_alpha_spectrum(n, Rat(1, 2)))
      if (line.component == 2) CHECK(line.eigenvalue == 0);
    // alpha = 0: component-2 eigenvalues flip sign relative to alpha = 1
    std::map<Rat, Int> at0, at1;
    for (const SpectralLine& line : bn_alpha_spectrum(n, Rat(0)))
      if (line.component == 2) at0[line.eigenvalue] += line.multiplicity;
    for (const SpectralLine& line : bn_alpha_spectrum(n, Rat(1)))
      if (line.component == 2) at1[-line.eigenvalue] += line.multiplicity;
    CHECK(at0 == at1);
  }
}

TEST_CASE("formula spectrum matches the dense eigensolver") {
  // the wider sweep runs in the verification suites; spot-check here
  for (const WalkSpec& spec :
       {WalkSpec{WalkKind::FlipTransposeTopB, 3, Rat(0)},
        WalkSpec{WalkKind::BiasedFlipTransposeTopB, 2, Rat(3, 4)},
        WalkSpec{WalkKind::FlipTransposeTopD, 3, Rat(0)},
        WalkSpec{WalkKind::TransposeTopS, 4, Rat(1, 4)}}) {
    auto formula = expand_spectrum(exact_spectrum(spec));
    auto oracle = brute_force_spectrum(spec);
    REQUIRE(formula.size() == oracle.size());
    for (size_t i = 0; i < formula.size(); ++i)
      CHECK(std::abs(formula[i] - oracle[i]) < 1e-9);
  }
  CHECK(brute_force_spectrum(bn_spec(3)).size() == 48);
  CHECK_THROWS_AS(brute_force_spectrum(bn_spec(5)), CapExceeded);
}

TEST_CASE("json output carries exact rationals and big multiplicities") {
  auto doc = nlohmann::json::parse(spectrum_json(bn_spec(3), true));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 6);
  CHECK(doc[0]["num"] == 1);
  CHECK(doc[0]["den"] == 1);
  CHECK(doc[0]["multiplicity"] == 1);
  CHECK(doc[1]["num"] == 2);
  CHECK(doc[1]["den"] == 3);
  CHECK(doc[1]["multiplicity"] == 9);
  CHECK(doc[2]["multiplicity"] == 14);
  for (const auto& line : doc) CHECK(line["den"].get<long>() > 0);

  auto full = nlohmann::json::parse(spectrum_json(bn_spec(3), false));
  Int mult_sum = 0;
  for (const auto& line : full) {
    CHECK(line.contains("diagram"));
    CHECK(line.contains("component"));
    mult_sum += Int(line["multiplicity"].get<long>());
  }
  CHECK(mult_sum == 48);
}

TEST_CASE("csv output shape") {
  std::string csv = spectrum_csv(bn_spec(3), true);
  CHECK(csv.substr(0, csv.find('\n')) == "num,den,multiplicity");
  std::string full = spectrum_csv(bn_spec(3), false);
  CHECK(full.substr(0, full.find('\n')) == "num,den,multiplicity,diagram,component");
  // one header plus 48-expanding lines; count rows
  size_t rows = 0;
  for (char c : full)
    if (c == '\n') ++rows;
  Int lines_total = 0;
  for (const SpectralLine& line : bn_spectrum(3)) {
    (void)line;
    ++lines_total;
  }
  CHECK(Int(static_cast<long>(rows)) == lines_total + 1);
}

TEST_CASE("invalid arguments are rejected") {
  CHECK_THROWS_AS(bn_spectrum(0), InvalidArgument);
  CHECK_THROWS_AS(bn_alpha_spectrum(3, Rat(3, 2)), InvalidArgument);
  CHECK_THROWS_AS(sn_a_spectrum(3, Rat(0)), InvalidArgument);
  CHECK_THROWS_AS(sn_a_spectrum(3, Rat(1)), InvalidArgument);
  CHECK_THROWS_AS(dn_spectrum(1), InvalidArgument);
}
