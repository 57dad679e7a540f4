// Exercises the shared library through the public C header only.

#include <cstring>
#include <string>

#include "doctest.h"
#include "fliptop.h"

namespace {

std::string buffer_text(ftt_buffer* b) {
  REQUIRE(b != nullptr);
  std::string s(ftt_buffer_data(b), ftt_buffer_size(b));
  CHECK(ftt_buffer_data(b)[ftt_buffer_size(b)] == '\0');
  ftt_buffer_destroy(b);
  return s;
}

struct WalkGuard {
  ftt_walk* w;
  explicit WalkGuard(ftt_walk* h) : w(h) {}
  ~WalkGuard() { ftt_walk_destroy(w); }
  WalkGuard(const WalkGuard&) = delete;
  WalkGuard& operator=(const WalkGuard&) = delete;
};

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(ftt_version()) == "1.0.0");
}

TEST_CASE("walk creation and group orders") {
  ftt_walk* b3 = ftt_walk_create("bn", 3, nullptr);
  REQUIRE(b3 != nullptr);
  WalkGuard g1(b3);
  uint64_t order = 0;
  CHECK(ftt_walk_group_order(b3, &order) == FTT_OK);
  CHECK(order == 48);

  ftt_walk* d4 = ftt_walk_create("dn", 4, nullptr);
  REQUIRE(d4 != nullptr);
  WalkGuard g2(d4);
  CHECK(ftt_walk_group_order(d4, &order) == FTT_OK);
  CHECK(order == 192);

  ftt_walk* s5 = ftt_walk_create("sn", 5, "1/5");
  REQUIRE(s5 != nullptr);
  WalkGuard g3(s5);
  CHECK(ftt_walk_group_order(s5, &order) == FTT_OK);
  CHECK(order == 120);
}

TEST_CASE("creation failures set the error message") {
  CHECK(ftt_walk_create("cn", 3, nullptr) == nullptr);
  CHECK(std::string(ftt_last_error()).find("kind") != std::string::npos);

  // bn-alpha needs a parameter
  CHECK(ftt_walk_create("bn-alpha", 3, nullptr) == nullptr);
  CHECK(ftt_last_error()[0] != '\0');

  // alpha outside [0,1]
  CHECK(ftt_walk_create("bn-alpha", 3, "3/2") == nullptr);

  // sn needs a in (0,1), endpoints excluded
  CHECK(ftt_walk_create("sn", 4, "0") == nullptr);
  CHECK(ftt_walk_create("sn", 4, "1") == nullptr);

  // unparseable parameter
  CHECK(ftt_walk_create("sn", 4, "1/0") == nullptr);
  CHECK(ftt_walk_create("sn", 4, "pi") == nullptr);

  // rank below the group's minimum
  CHECK(ftt_walk_create("bn", 1, nullptr) == nullptr);

  // success clears the error slot
  ftt_walk* ok = ftt_walk_create("bn", 3, nullptr);
  REQUIRE(ok != nullptr);
  WalkGuard g(ok);
  CHECK(ftt_last_error()[0] == '\0');
}

TEST_CASE("option setters validate") {
  ftt_walk* w = ftt_walk_create("bn", 3, nullptr);
  REQUIRE(w != nullptr);
  WalkGuard g(w);
  CHECK(ftt_walk_set_group_cap(w, 100) == FTT_OK);
  CHECK(ftt_walk_set_group_cap(w, 0) == FTT_ERR_INVALID);
  CHECK(ftt_walk_set_bit_budget(w, 64) == FTT_OK);
  CHECK(ftt_walk_set_bit_budget(w, 16) == FTT_ERR_INVALID);
  CHECK(ftt_walk_set_mode(w, "floating") == FTT_OK);
  CHECK(ftt_walk_set_mode(w, "exact") == FTT_OK);
  CHECK(ftt_walk_set_mode(w, "approximate") == FTT_ERR_INVALID);
  CHECK(std::string(ftt_last_error()).find("mode") != std::string::npos);
  CHECK(ftt_walk_set_threads(w, 4) == FTT_OK);
  CHECK(ftt_walk_set_threads(w, 0) == FTT_ERR_INVALID);
  CHECK(ftt_walk_set_mode(nullptr, "exact") == FTT_ERR_INVALID);
}

TEST_CASE("spectrum output in both formats") {
  ftt_walk* w = ftt_walk_create("bn", 3, nullptr);
  REQUIRE(w != nullptr);
  WalkGuard g(w);

  ftt_buffer* out = nullptr;
  REQUIRE(ftt_spectrum(w, 1, "csv", &out) == FTT_OK);
  std::string csv = buffer_text(out);
  CHECK(csv.find("num,den,multiplicity") == 0);
  CHECK(csv.find("\n2,3,9\n") != std::string::npos);
  CHECK(csv.find("\n-2,3,1\n") != std::string::npos);

  out = nullptr;
  REQUIRE(ftt_spectrum(w, 0, "json", &out) == FTT_OK);
  std::string json = buffer_text(out);
  CHECK(json.find("\"diagram\"") != std::string::npos);
  CHECK(json.find("\"multiplicity\"") != std::string::npos);

  out = nullptr;
  CHECK(ftt_spectrum(w, 1, "yaml", &out) == FTT_ERR_INVALID);
  CHECK(out == nullptr);
  CHECK(ftt_spectrum(w, 1, "csv", nullptr) == FTT_ERR_INVALID);
}

TEST_CASE("tv curve carries exact cells") {
  ftt_walk* w = ftt_walk_create("bn", 3, nullptr);
  REQUIRE(w != nullptr);
  WalkGuard g(w);
  ftt_buffer* out = nullptr;
  REQUIRE(ftt_tv_curve(w, 4, 1, &out) == FTT_OK);
  std::string csv = buffer_text(out);
  CHECK(csv.find("47/48") != std::string::npos);
  CHECK(csv.find("7/8") != std::string::npos);
  CHECK(csv.find("73/216") != std::string::npos);

  out = nullptr;
  CHECK(ftt_tv_curve(w, -1, 1, &out) == FTT_ERR_INVALID);
}

TEST_CASE("bounds curve and mixing time") {
  ftt_walk* w = ftt_walk_create("bn", 4, nullptr);
  REQUIRE(w != nullptr);
  WalkGuard g(w);
  ftt_buffer* out = nullptr;
  REQUIRE(ftt_bounds_curve(w, 10, 1, &out) == FTT_OK);
  std::string csv = buffer_text(out);
  CHECK(csv.find("k,") == 0);
  CHECK(csv.find("\n0,") != std::string::npos);

  long k = 0;
  CHECK(ftt_mixing_time(w, 0.25, 40, &k) == FTT_OK);
  CHECK(k == 7);

  // unreachable threshold is reported, not failed
  CHECK(ftt_mixing_time(w, 1e-30, 3, &k) == FTT_OK);
  CHECK(k == -1);

  CHECK(ftt_mixing_time(w, -0.5, 10, &k) == FTT_ERR_INVALID);
  CHECK(ftt_mixing_time(w, 0.25, 10, nullptr) == FTT_ERR_INVALID);
}

TEST_CASE("cap errors surface as FTT_ERR_CAP") {
  ftt_walk* w = ftt_walk_create("bn", 9, nullptr);
  REQUIRE(w != nullptr);
  WalkGuard g(w);
  // |B_9| is far beyond the default distribution cap
  ftt_buffer* out = nullptr;
  CHECK(ftt_tv_curve(w, 2, 1, &out) == FTT_ERR_CAP);
  CHECK(out == nullptr);
  CHECK(ftt_last_error()[0] != '\0');
}

TEST_CASE("simulation through the C surface is deterministic") {
  ftt_walk* w = ftt_walk_create("bn", 12, nullptr);
  REQUIRE(w != nullptr);
  WalkGuard g(w);
  ftt_buffer* out = nullptr;
  REQUIRE(ftt_simulate(w, 25, 2000, 77, &out) == FTT_OK);
  std::string first = buffer_text(out);
  CHECK(first.find("k,mean_f,stderr,trials,seed,walk_kind,n") == 0);
  CHECK(first.find(",2000,77,bn,12") != std::string::npos);

  out = nullptr;
  REQUIRE(ftt_simulate(w, 25, 2000, 77, &out) == FTT_OK);
  CHECK(buffer_text(out) == first);

  out = nullptr;
  CHECK(ftt_simulate(w, -1, 10, 0, &out) == FTT_ERR_INVALID);
  CHECK(ftt_simulate(w, 1, 0, 0, &out) == FTT_ERR_INVALID);
}

TEST_CASE("verify suite runs green through the C surface") {
  ftt_buffer* report = nullptr;
  int failures = -1;
  CHECK(ftt_verify("moments", 0, &report, &failures) == FTT_OK);
  CHECK(failures == 0);
  std::string text = buffer_text(report);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);

  report = nullptr;
  CHECK(ftt_verify("nonsense", 0, &report, &failures) == FTT_ERR_INVALID);

  // report buffer is optional; the failure count alone works
  failures = -1;
  CHECK(ftt_verify("moments", 0, nullptr, &failures) == FTT_OK);
  CHECK(failures == 0);
}

TEST_CASE("null handles are rejected uniformly") {
  uint64_t order = 0;
  CHECK(ftt_walk_group_order(nullptr, &order) == FTT_ERR_INVALID);
  ftt_buffer* out = nullptr;
  CHECK(ftt_spectrum(nullptr, 1, "csv", &out) == FTT_ERR_INVALID);
  CHECK(ftt_tv_curve(nullptr, 3, 1, &out) == FTT_ERR_INVALID);
  CHECK(ftt_simulate(nullptr, 1, 1, 0, &out) == FTT_ERR_INVALID);
  ftt_walk_destroy(nullptr);  // must be a no-op
}
