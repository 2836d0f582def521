#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracle_helpers.hpp"
#include "wzw/cache.hpp"
#include "wzw/symmetry.hpp"

using namespace wzw;

TEST_CASE("A1 spin-1 weight string") {
  const auto& rd = root_data("A1");
  const auto& ws = weight_system(rd, {2});
  CHECK(ws.total == 3);
  REQUIRE(ws.all.size() == 3);
  CHECK(ws.all[0] == std::pair<Weight, long long>{{-2}, 1});
  CHECK(ws.all[1] == std::pair<Weight, long long>{{0}, 1});
  CHECK(ws.all[2] == std::pair<Weight, long long>{{2}, 1});
}

TEST_CASE("weight system size equals the Weyl dimension") {
  for (auto [alg, w] : std::initializer_list<std::pair<const char*, Weight>>{
           {"A2", {2, 1}}, {"B2", {1, 2}}, {"G2", {1, 1}}, {"C3", {1, 0, 1}},
           {"D4", {0, 1, 0, 1}}, {"F4", {1, 0, 0, 0}}}) {
    const auto& rd = root_data(alg);
    CHECK(weight_system(rd, w).total == weyl_dimension(rd, w));
  }
}

TEST_CASE("non-dominant highest weight is rejected") {
  CHECK_THROWS_AS(weight_system(root_data("A2"), {-1, 2}), std::invalid_argument);
}

TEST_CASE("E6 351 system: label profile") {
  const auto& rd = root_data("E6");
  const auto& ws = weight_system(rd, {0, 1, 0, 0, 0, 0});
  CHECK(ws.total == 351);
  for (const auto& [w, m] : ws.all) {
    int minus2 = 0;
    for (int x : w) {
      CHECK(x >= -2);
      CHECK(x <= 2);
      if (x == -2) ++minus2;
    }
    CHECK(minus2 <= 1);
  }
  // 15 weights with label -2 at each fixed node, in both conjugate systems
  const auto& ws4 = weight_system(rd, {0, 0, 0, 1, 0, 0});
  for (int j = 0; j < 6; ++j) {
    long long c2 = 0, c4 = 0;
    for (const auto& [w, m] : ws.all)
      if (w[j] == -2) c2 += m;
    for (const auto& [w, m] : ws4.all)
      if (w[j] == -2) c4 += m;
    CHECK(c2 == 15);
    CHECK(c4 == 15);
  }
  // equal number of level-2 weights in the two conjugate systems
  long long l2 = 0, l4 = 0;
  for (const auto& [w, m] : ws.all)
    if (level_of(rd, w) == 2) l2 += m;
  for (const auto& [w, m] : ws4.all)
    if (level_of(rd, w) == 2) l4 += m;
  CHECK(l2 == l4);
}

TEST_CASE("conjugate system is the negated system") {
  for (auto [alg, w] : std::initializer_list<std::pair<const char*, Weight>>{
           {"A2", {2, 1}}, {"A3", {1, 0, 2}}, {"D5", {0, 0, 0, 1, 0}},
           {"E6", {1, 0, 0, 0, 0, 0}}}) {
    const auto& rd = root_data(alg);
    auto neg = weight_system(rd, w).all;
    for (auto& [v, m] : neg)
      for (auto& x : v) x = -x;
    std::sort(neg.begin(), neg.end());
    CHECK(neg == weight_system(rd, conjugate(rd, w)).all);
  }
}

TEST_CASE("multiplicity is Weyl invariant") {
  const auto& rd = root_data("B3");
  const auto& ws = weight_system(rd, {1, 1, 0});
  for (const auto& [w, m] : ws.all) CHECK(ws.multiplicity(rd, w) == m);
}

TEST_CASE("reduce_shifted basics") {
  const auto& rd = root_data("A2");
  auto r = reduce_shifted(rd, {2, 1});
  CHECK(r.dominant == Weight{2, 1});
  CHECK(r.sign == 1);
  CHECK(reduce_shifted(rd, {0, 3}).sign == 0);
  CHECK(reduce_shifted(rd, {3, 0}).sign == 0);
  auto s = reduce_shifted(rd, {-1, 3});
  CHECK(s.dominant == Weight{1, 2});
  CHECK(s.sign == -1);
}

TEST_CASE("reduce_shifted against brute-force Weyl images") {
  const auto& rd = root_data("A2");
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      auto red = reduce_shifted(rd, {a, b});
      auto images = testing::weyl_images_with_signs(rd, {a, b});
      if (red.sign == 0) {
        // on a wall: the orbit contains a weight with a zero label
        bool wall = false;
        for (const auto& [w, s] : images)
          wall = wall || std::any_of(w.begin(), w.end(), [](int x) { return x == 0; });
        CHECK(wall);
      } else {
        CHECK(images.count({red.dominant, red.sign}) == 1);
        // unique strictly dominant image
        int strict = 0;
        for (const auto& [w, s] : images)
          strict += std::all_of(w.begin(), w.end(), [](int x) { return x > 0; });
        CHECK(strict == 1);
      }
    }
}

TEST_CASE("single reflection flips the sign, keeps the representative") {
  const auto& rd = root_data("B3");
  Weight sigma = {2, 1, 3};
  auto base = reduce_shifted(rd, sigma);
  REQUIRE(base.sign == 1);
  for (int i = 0; i < rd.rank; ++i) {
    Weight refl = sigma;
    int si = refl[i];
    for (int j = 0; j < rd.rank; ++j) refl[j] -= si * rd.cartan[i][j];
    auto r = reduce_shifted(rd, refl);
    CHECK(r.sign == -1);
    CHECK(r.dominant == sigma);
  }
}

TEST_CASE("su(3) character polynomials") {
  const auto& rd = root_data("A2");
  auto p10 = character_polynomial(rd, {1, 0});
  CHECK(p10.terms == std::map<Weight, long long>{{{-1, 1}, 1}, {{0, -1}, 1}, {{1, 0}, 1}});
  auto p11 = character_polynomial(rd, {1, 1});
  CHECK(p11.terms.size() == 7);
  CHECK(p11.terms.at({0, 0}) == 2);
  long long coeff_sum = 0;
  for (const auto& [w, c] : p11.terms) coeff_sum += c;
  CHECK(coeff_sum == 8);
  auto p0 = character_polynomial(rd, {0, 0});
  CHECK(p0.terms == std::map<Weight, long long>{{{0, 0}, 1}});
}

TEST_CASE("level-2 su(3) evaluation of the summed character") {
  const auto& rd = root_data("A2");
  const std::vector<Weight> hws = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CharacterPolynomial x;
  for (const auto& w : hws)
    for (const auto& [e, c] : character_polynomial(rd, w).terms) x.terms[e] += c;
  const double r5 = std::sqrt(5.0);
  const std::vector<double> expected = {1.5 * (3 + r5), 0, 0, 0, 1.5 * (3 - r5), 0};
  for (size_t i = 0; i < hws.size(); ++i) {
    Weight shifted = hws[i];
    for (auto& v : shifted) v += 1;
    auto val = evaluate_at_level(rd, x, shifted, 2);
    CHECK(std::abs(val - std::complex<double>(expected[i], 0)) < 1e-9);
  }
  // constant polynomial evaluates to 1 anywhere
  CharacterPolynomial one;
  one.terms[{0, 0}] = 1;
  CHECK(std::abs(evaluate_at_level(rd, one, {5, 7}, 3) - std::complex<double>(1, 0)) < 1e-15);
  CHECK_THROWS_AS(evaluate_at_level(rd, one, {1, 1}, 0), std::invalid_argument);
}

TEST_CASE("character products decompose like tensor products (A2 smoke)") {
  const auto& rd = root_data("A2");
  auto oracle = testing::decompose_by_characters(rd, {1, 1}, {2, 0});
  auto dec = tensor_decompose(rd, {1, 1}, {2, 0});
  CHECK(oracle == dec.terms);
}

TEST_CASE("disk cache round-trips dominant multiplicities") {
  const auto& rd = root_data("B2");
  auto dir = std::filesystem::temp_directory_path() / "wzw-cache-test";
  std::filesystem::remove_all(dir);
  std::string previous = cache_dir();
  set_cache_dir(dir.string());
  const auto& ws = weight_system(rd, {2, 1});   // computes and stores
  auto loaded = load_cached_weight_system(rd, {2, 1});
  REQUIRE(loaded.has_value());
  CHECK(loaded->dominant_mults == ws.dominant_mults);
  CHECK(loaded->hw == ws.hw);
  // junk or mismatched entries are ignored, not trusted
  {
    std::ofstream bad(dir / ("B2_" + cartan_fingerprint(rd) + "_0_3.json"));
    bad << "{\"version\": 99, \"algebra\": \"B2\", \"hw\": [0,3], \"dominant\": []}";
  }
  CHECK(!load_cached_weight_system(rd, {0, 3}).has_value());

  set_cache_dir(previous);
  std::filesystem::remove_all(dir);
  CHECK(cartan_fingerprint(rd) == cartan_fingerprint(root_data("B2")));
  CHECK(cartan_fingerprint(rd) != cartan_fingerprint(root_data("C2")));
}
