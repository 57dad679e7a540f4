#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "group.hpp"
#include "walk.hpp"

using namespace fliptop;

namespace {

WalkSpec bn_spec(int n) { return {WalkKind::FlipTransposeTopB, n, Rat(0)}; }
WalkSpec dn_spec(int n) { return {WalkKind::FlipTransposeTopD, n, Rat(0)}; }
WalkSpec sn_spec(int n, Rat a) { return {WalkKind::TransposeTopS, n, std::move(a)}; }
WalkSpec ba_spec(int n, Rat alpha) {
  return {WalkKind::BiasedFlipTransposeTopB, n, std::move(alpha)};
}

}  // namespace

TEST_CASE("step measures: support sizes and total mass") {
  for (int n : {2, 3, 5}) {
    CHECK(step_measure(bn_spec(n)).atoms.size() == 2 * static_cast<size_t>(n));
    CHECK(step_measure(dn_spec(n)).atoms.size() == 2 * static_cast<size_t>(n) - 1);
    CHECK(step_measure(sn_spec(n, Rat(1, 3))).atoms.size() == static_cast<size_t>(n));
    CHECK(step_measure(ba_spec(n, Rat(1, 3))).atoms.size() ==
          4 * static_cast<size_t>(n) - 2);
    // degenerate biases drop the vanished atoms
    CHECK(step_measure(ba_spec(n, Rat(1))).atoms.size() == 2 * static_cast<size_t>(n));
    CHECK(step_measure(ba_spec(n, Rat(0))).atoms.size() == 2 * static_cast<size_t>(n));
  }
}

TEST_CASE("step measures are symmetric: p(x) = p(x inverse)") {
  for (const WalkSpec& spec : {bn_spec(4), dn_spec(4), sn_spec(5, Rat(2, 7)),
                               ba_spec(4, Rat(1, 3)), ba_spec(3, Rat(1, 5))}) {
    StepMeasure m = step_measure(spec);
    std::map<std::uint64_t, Rat> by_rank;
    for (const auto& [r, p] : m.atoms) by_rank[r] = p;
    for (const auto& [r, p] : m.atoms) {
      std::vector<int> w = unrank_element(r, m.group);
      SignedPermutation el(w);
      std::uint64_t r_inv = rank_element(inverse(el).window(), m.group);
      REQUIRE(by_rank.count(r_inv) == 1);
      CHECK(by_rank[r_inv] == p);
    }
  }
}

TEST_CASE("window measure mirrors the ranked measure") {
  for (const WalkSpec& spec : {bn_spec(3), dn_spec(3), sn_spec(4, Rat(1, 4))}) {
    WindowMeasure wm = step_windows(spec);
    StepMeasure m = step_measure(spec);
    REQUIRE(wm.atoms.size() == m.atoms.size());
    for (size_t i = 0; i < m.atoms.size(); ++i) {
      CHECK(rank_element(wm.atoms[i].first, wm.group) == m.atoms[i].first);
      CHECK(wm.atoms[i].second == m.atoms[i].second);
    }
  }
  // windows work far beyond the 64-bit rank space
  CHECK(step_windows(bn_spec(50)).atoms.size() == 100);
}

TEST_CASE("one step from the identity: hand-computed distance") {
  WalkEngine eng(bn_spec(3));
  CHECK(eng.tv_exact() == Rat(47, 48));
  eng.step();
  CHECK(eng.k() == 1);
  CHECK(eng.tv_exact() == Rat(7, 8));
}

TEST_CASE("mass is conserved and distributions stay symmetric") {
  WalkEngine eng(bn_spec(3));
  for (int k = 0; k < 8; ++k) {
    eng.step();
    CHECK(eng.dist().total_mass() == 1);
  }
  // p^(*k)(x) = p^(*k)(x^-1) for symmetric steps
  const GroupDistribution& d = eng.dist();
  GroupId g = d.group();
  for (std::uint64_t r = 0; r < d.size(); ++r) {
    std::uint64_t r_inv =
        rank_element(inverse(SignedPermutation(unrank_element(r, g))).window(), g);
    CHECK(d.value(r) == d.value(r_inv));
  }
}

TEST_CASE("distance to uniform decreases in k") {
  for (const WalkSpec& spec : {bn_spec(3), dn_spec(3), sn_spec(5, Rat(1, 5))}) {
    WalkEngine eng(spec);
    Rat prev = eng.tv_exact();
    for (int k = 1; k <= 20; ++k) {
      eng.step();
      Rat cur = eng.tv_exact();
      CHECK(cur <= prev);
      prev = cur;
    }
    // the slowest of the three decays like 0.8^k, so 20 steps mix to ~2%
    CHECK(rat_d(prev) < 0.05);
  }
}

TEST_CASE("floating dynamic program tracks the exact one") {
  WalkEngineOptions fopts;
  fopts.mode = Mode::Floating;
  WalkEngine exact(bn_spec(3));
  WalkEngine floating(bn_spec(3), fopts);
  CHECK(floating.dist().mode() == Mode::Floating);
  for (int k = 1; k <= 20; ++k) {
    exact.step();
    floating.step();
    CHECK(std::abs(exact.tv() - floating.tv()) < 1e-12);
    for (std::uint64_t r = 0; r < exact.dist().size(); ++r)
      CHECK(std::abs(exact.dist().fvalue(r) - floating.dist().fvalue(r)) < 1e-14);
  }
}

TEST_CASE("a tiny bit budget forces demotion mid-run") {
  WalkEngineOptions opts;
  opts.bit_budget = 16;  // den grows like 6^k here, so this trips at k = 7
  WalkEngine eng(bn_spec(3), opts);
  CHECK(eng.dist().mode() == Mode::Exact);
  WalkEngine reference(bn_spec(3));
  for (int k = 1; k <= 12; ++k) {
    eng.step();
    reference.step();
    CHECK(std::abs(eng.tv() - reference.tv()) < 1e-12);
  }
  CHECK(eng.dist().mode() == Mode::Floating);
  CHECK_THROWS_AS(eng.dist().value(0), InvalidArgument);  // exact reads are gone
}

TEST_CASE("uniform distribution is the fixed point") {
  GroupDistribution u = GroupDistribution::uniform({Family::B, 3});
  StepMeasure m = step_measure(bn_spec(3));
  GroupDistribution stepped = convolve_step(u, m);
  for (std::uint64_t r = 0; r < u.size(); ++r) CHECK(stepped.value(r) == u.value(r));
  CHECK(tv_to_uniform_exact(u) == 0);
}

TEST_CASE("projection pushforward: mass regroups by the unsigned window") {
  WalkEngine eng(bn_spec(3));
  eng.step();
  eng.step();
  GroupDistribution down = pushforward_projection(eng.dist());
  CHECK(down.group() == GroupId{Family::S, 3});
  CHECK(down.total_mass() == 1);
  // each S_3 rank collects the 2^3 sign patterns above it
  const GroupDistribution& up = eng.dist();
  GroupId bg = up.group();
  std::map<std::uint64_t, Rat> sums;
  for (std::uint64_t r = 0; r < up.size(); ++r) {
    std::vector<int> w = unrank_element(r, bg);
    for (int& v : w) v = std::abs(v);
    sums[rank_element(w, {Family::S, 3})] += up.value(r);
  }
  for (auto& [r, total] : sums) {
    total.canonicalize();
    CHECK(down.value(r) == total);
  }
}

TEST_CASE("fixed-point moments at k = 0 are n and n squared") {
  GroupDistribution d = GroupDistribution::delta_at_identity({Family::S, 6});
  auto [e1, e2] = fixed_point_moments(d);
  CHECK(e1 == 6);
  CHECK(e2 == 36);
  GroupDistribution u = GroupDistribution::uniform({Family::S, 5});
  auto [ue1, ue2] = fixed_point_moments(u);
  CHECK(ue1 == 1);  // expected fixed points of a uniform permutation
  CHECK(ue2 == 2);
}

TEST_CASE("mixing time is monotone in the threshold") {
  auto strict_k = mixing_time(bn_spec(3), 0.05, 100);
  auto loose_k = mixing_time(bn_spec(3), 0.5, 100);
  REQUIRE(strict_k.has_value());
  REQUIRE(loose_k.has_value());
  CHECK(*loose_k <= *strict_k);
  CHECK_FALSE(mixing_time(bn_spec(3), 1e-30, 5).has_value());
  // threshold 1/4 at n=3: the exact curve crosses between the known k values
  auto quarter = mixing_time(bn_spec(3), 0.25, 100);
  REQUIRE(quarter.has_value());
  WalkEngine eng(bn_spec(3));
  for (long k = 0; k < *quarter; ++k) {
    CHECK(eng.tv_exact() > Rat(1, 4));
    eng.step();
  }
  CHECK(eng.tv_exact() <= Rat(1, 4));
}

TEST_CASE("tv curve csv carries exact cells in rational mode") {
  std::string csv = tv_curve_csv(bn_spec(3), 2, true);
  CHECK(csv.find("k,tv,mode,n,walk_kind") == 0);
  CHECK(csv.find("0,47/48,exact,3,bn") != std::string::npos);
  CHECK(csv.find("1,7/8,exact,3,bn") != std::string::npos);
}

TEST_CASE("group caps apply to distributions") {
  WalkEngineOptions opts;
  opts.group_cap = 40;  // |B_3| = 48 exceeds this
  CHECK_THROWS_AS(WalkEngine(bn_spec(3), opts), CapExceeded);
  CHECK_THROWS_AS(GroupDistribution::uniform({Family::B, 3}, 40), CapExceeded);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(step_measure({WalkKind::FlipTransposeTopB, 1, Rat(0)}), InvalidArgument);
  CHECK_THROWS_AS(step_measure({WalkKind::BiasedFlipTransposeTopB, 3, Rat(2)}),
                  InvalidArgument);
  CHECK_THROWS_AS(step_measure({WalkKind::TransposeTopS, 3, Rat(1)}), InvalidArgument);
  CHECK_THROWS_AS(step_measure({WalkKind::TransposeTopS, 3, Rat(-1, 2)}), InvalidArgument);
}
