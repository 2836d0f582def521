#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "wzw/fusion.hpp"
#include "wzw/symmetry.hpp"

using namespace wzw;

TEST_CASE("su(2) alcove") {
  for (int k = 1; k <= 5; ++k) {
    auto ring = make_fusion_ring(root_data("A1"), k);
    REQUIRE(ring.size() == k + 1);
    for (int l = 0; l <= k; ++l) CHECK(ring.alcove[l] == Weight{l});
  }
}

TEST_CASE("alcove sizes and membership") {
  const auto& e6 = root_data("E6");
  CHECK(make_fusion_ring(e6, 3).size() == 20);
  CHECK(make_fusion_ring(e6, 4).size() == 42);

  auto su3 = make_fusion_ring(root_data("A2"), 2);
  std::set<Weight> got(su3.alcove.begin(), su3.alcove.end());
  CHECK(got == std::set<Weight>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});

  CHECK_THROWS_AS(make_fusion_ring(e6, 0), std::invalid_argument);
}

TEST_CASE("alcove is closed under conjugation and the center action") {
  for (auto [alg, k] : std::initializer_list<std::pair<const char*, int>>{
           {"A3", 4}, {"B3", 3}, {"D5", 2}, {"E6", 3}, {"G2", 5}}) {
    const auto& rd = root_data(alg);
    auto ring = make_fusion_ring(rd, k);
    for (const auto& w : ring.alcove) {
      CHECK(ring.index.count(conjugate(rd, w)) == 1);
      for (const auto& aut : automorphisms(rd))
        CHECK(ring.index.count(aut.apply(rd, w, k)) == 1);
    }
    // graded-lex order: level never decreases, ties resolved by labels
    for (int i = 0; i + 1 < ring.size(); ++i) {
      long long ka = level_of(rd, ring.alcove[i]), kb = level_of(rd, ring.alcove[i + 1]);
      CHECK(ka <= kb);
      if (ka == kb) CHECK(ring.alcove[i] < ring.alcove[i + 1]);
    }
  }
}

TEST_CASE("affine reduction") {
  const auto& rd = root_data("A1");
  // interior point stays put
  auto r = reduce_shifted_affine(rd, 2, {3});
  CHECK(r.sign == 1);
  CHECK(r.dominant == Weight{3});
  // the shifted back wall kills
  CHECK(reduce_shifted_affine(rd, 2, {4}).sign == 0);
  // beyond the back wall: one s0 reflection, negative sign
  auto s = reduce_shifted_affine(rd, 2, {5});
  CHECK(s.sign == -1);
  CHECK(s.dominant == Weight{3});
}

TEST_CASE("affine reduction is stable under pre-applied reflections") {
  // applying any wall reflection before reducing flips the sign and keeps
  // the representative; zero-sign points stay zero-sign
  std::mt19937_64 rng(17);
  for (auto [alg, k] :
       std::initializer_list<std::pair<const char*, int>>{{"A2", 3}, {"B2", 2}, {"G2", 3}}) {
    const auto& rd = root_data(alg);
    const int t = k + rd.dual_coxeter;
    std::uniform_int_distribution<int> lab(-4, t + 2);
    for (int trial = 0; trial < 200; ++trial) {
      Weight sigma(rd.rank);
      for (auto& x : sigma) x = lab(rng);
      auto base = reduce_shifted_affine(rd, k, sigma);
      for (int i = -1; i < rd.rank; ++i) {
        Weight refl = sigma;
        if (i < 0) {
          int s0 = t - static_cast<int>(level_of(rd, refl));
          for (int j = 0; j < rd.rank; ++j) refl[j] += s0 * rd.theta_labels[j];
        } else {
          int si = refl[i];
          for (int j = 0; j < rd.rank; ++j) refl[j] -= si * rd.cartan[i][j];
        }
        auto red = reduce_shifted_affine(rd, k, refl);
        CHECK(red.sign == -base.sign);
        if (base.sign != 0) CHECK(red.dominant == base.dominant);
      }
    }
  }
}

TEST_CASE("su(2) fusion truncation") {
  auto ring2 = make_fusion_ring(root_data("A1"), 2);
  auto dec = fusion_decompose(ring2, {1}, {1});
  CHECK(dec.terms == std::map<Weight, long long>{{{0}, 1}, {{2}, 1}});

  auto ring1 = make_fusion_ring(root_data("A1"), 1);
  auto dec1 = fusion_decompose(ring1, {1}, {1});
  CHECK(dec1.terms == std::map<Weight, long long>{{{0}, 1}});
  auto kw1 = kac_walton(ring1, {1}, {1});
  CHECK(kw1.terms == dec1.terms);
}

TEST_CASE("operands must be integrable at the level") {
  auto ring = make_fusion_ring(root_data("A2"), 1);
  CHECK_THROWS_AS(fusion_decompose(ring, {2, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(fusion_decompose(ring, {1, 0}, {-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(kac_walton(ring, {0, 2}, {1, 0}), std::invalid_argument);
}

TEST_CASE("E6 level-3 worked products") {
  const auto& rd = root_data("E6");
  auto ring = make_fusion_ring(rd, 3);
  Weight mu = {1, 0, 0, 0, 2, 0};

  auto a = fusion_decompose(ring, {0, 1, 0, 0, 0, 0}, mu);
  CHECK(a.terms == std::map<Weight, long long>{{{0, 0, 0, 0, 2, 0}, 1},
                                               {{0, 0, 0, 1, 0, 0}, 1},
                                               {{0, 1, 0, 0, 1, 0}, 1},
                                               {{1, 0, 0, 0, 0, 1}, 1}});
  CHECK(a.total_multiplicity() == 4);

  auto b = fusion_decompose(ring, {0, 0, 0, 1, 0, 0}, mu);
  CHECK(b.terms == std::map<Weight, long long>{{{0, 0, 0, 1, 1, 0}, 1},
                                               {{0, 0, 1, 0, 0, 0}, 1},
                                               {{1, 0, 0, 0, 1, 0}, 1},
                                               {{1, 1, 0, 0, 0, 0}, 1}});
  CHECK(b.total_multiplicity() == 4);

  CHECK(kac_walton(ring, {0, 1, 0, 0, 0, 0}, mu).terms == a.terms);
  CHECK(kac_walton(ring, {0, 0, 0, 1, 0, 0}, mu).terms == b.terms);
}

TEST_CASE("E6 level-4 worked products") {
  // The level-4 lists have three multiplicity-2 channels each; totals match
  // under conjugation as they must.
  const auto& rd = root_data("E6");
  auto ring = make_fusion_ring(rd, 4);
  Weight mu = {1, 0, 0, 0, 2, 0};

  auto a = fusion_decompose(ring, {0, 1, 0, 0, 0, 0}, mu);
  CHECK(a.terms == std::map<Weight, long long>{
                       {{0, 0, 0, 0, 2, 0}, 1}, {{0, 0, 0, 0, 2, 1}, 2},
                       {{0, 0, 0, 1, 0, 0}, 1}, {{0, 0, 0, 1, 0, 1}, 1},
                       {{0, 1, 0, 0, 1, 0}, 2}, {{1, 0, 0, 0, 0, 1}, 1},
                       {{1, 0, 0, 0, 3, 0}, 1}, {{1, 0, 0, 1, 1, 0}, 2},
                       {{1, 0, 1, 0, 0, 0}, 1}, {{2, 0, 0, 0, 1, 0}, 1}});
  auto b = fusion_decompose(ring, {0, 0, 0, 1, 0, 0}, mu);
  CHECK(b.terms == std::map<Weight, long long>{
                       {{0, 0, 0, 0, 3, 0}, 1}, {{0, 0, 0, 1, 1, 0}, 2},
                       {{0, 0, 1, 0, 0, 0}, 1}, {{0, 1, 0, 0, 2, 0}, 2},
                       {{0, 1, 0, 1, 0, 0}, 1}, {{1, 0, 0, 0, 1, 0}, 1},
                       {{1, 0, 0, 0, 1, 1}, 2}, {{1, 1, 0, 0, 0, 0}, 1},
                       {{2, 0, 0, 0, 2, 0}, 1}, {{2, 0, 0, 1, 0, 0}, 1}});
  CHECK(a.terms.size() == 10);
  CHECK(b.terms.size() == 10);
  CHECK(a.total_multiplicity() == b.total_multiplicity());
  CHECK(kac_walton(ring, {0, 1, 0, 0, 0, 0}, mu).terms == a.terms);
}

TEST_CASE("far from the back wall the fusion product is classical") {
  const auto& rd = root_data("A3");
  auto ring = make_fusion_ring(rd, 6);
  // K(lhs) + K(rhs) <= k: only w = 1 contributes
  Weight x = {1, 1, 0}, y = {0, 1, 1};
  CHECK(fusion_decompose(ring, x, y).terms == tensor_decompose(rd, x, y).terms);
}

TEST_CASE("Kac-Walton equals affine Racah-Speiser on small grids") {
  for (auto [alg, kmax] : std::initializer_list<std::pair<const char*, int>>{
           {"A1", 4}, {"A2", 3}, {"B2", 3}, {"G2", 2}, {"C3", 2}}) {
    const auto& rd = root_data(alg);
    for (int k = 1; k <= kmax; ++k) {
      auto ring = make_fusion_ring(rd, k);
      for (const auto& x : ring.alcove)
        for (const auto& y : ring.alcove)
          CHECK(kac_walton(ring, x, y).terms == fusion_decompose(ring, x, y).terms);
    }
  }
}

TEST_CASE("fusion with the identity and conjugation covariance") {
  const auto& rd = root_data("D5");
  auto ring = make_fusion_ring(rd, 2);
  for (const auto& w : ring.alcove) {
    auto dec = fusion_decompose(ring, w, {0, 0, 0, 0, 0});
    CHECK(dec.terms == std::map<Weight, long long>{{w, 1}});
  }
  // automorphism covariance of the coefficients
  auto aut = automorphisms(rd)[0];
  for (const auto& x : ring.alcove)
    for (const auto& y : ring.alcove) {
      auto base = fusion_decompose(ring, x, y);
      auto rot = fusion_decompose(ring, x, aut.apply(rd, y, 2));
      std::map<Weight, long long> expect;
      for (const auto& [w, m] : base.terms) expect[aut.apply(rd, w, 2)] = m;
      CHECK(rot.terms == expect);
    }
}

TEST_CASE("fusion matrices: identity, transpose-conjugate, commuting") {
  const auto& rd = root_data("A2");
  auto ring = make_fusion_ring(rd, 2);
  auto mats = fusion_matrices(ring);
  const int m = ring.size();

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) CHECK(mats[0][i][j] == (i == j ? 1 : 0));

  for (int l = 0; l < m; ++l) {
    int lc = ring.position(conjugate(rd, ring.alcove[l]));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) CHECK(mats[lc][i][j] == mats[l][j][i]);
  }

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      IntMatrix ab(m, std::vector<long long>(m, 0)), ba = ab;
      for (int i = 0; i < m; ++i)
        for (int kk = 0; kk < m; ++kk)
          for (int j = 0; j < m; ++j) {
            ab[i][j] += mats[a][i][kk] * mats[b][kk][j];
            ba[i][j] += mats[b][i][kk] * mats[a][kk][j];
          }
      CHECK(ab == ba);
    }
}

TEST_CASE("path matrices") {
  // su(2) level 1
  auto p1 = path_matrix(make_fusion_ring(root_data("A1"), 1));
  CHECK(p1.x == IntMatrix{{1, 1}, {1, 1}});

  // su(3) level 2: the known 6x6 table, stated in the order
  // (0,0),(1,0),(0,1),(2,0),(1,1),(0,2); remap into alcove order.
  const auto& rd = root_data("A2");
  auto ring = make_fusion_ring(rd, 2);
  const std::vector<Weight> printed_order = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  const IntMatrix printed = {{1, 1, 1, 1, 1, 1},
                             {1, 2, 2, 1, 2, 1},
                             {1, 2, 2, 1, 2, 1},
                             {1, 1, 1, 1, 1, 1},
                             {1, 2, 2, 1, 2, 1},
                             {1, 1, 1, 1, 1, 1}};
  auto pm = path_matrix(ring);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(pm.x[ring.position(printed_order[i])][ring.position(printed_order[j])] ==
            printed[i][j]);

  // X = CX = XC exactly, and XP = X for the center permutation
  for (auto [alg, k] : std::initializer_list<std::pair<const char*, int>>{
           {"A2", 2}, {"A3", 2}, {"D5", 2}, {"A1", 3}}) {
    const auto& rda = root_data(alg);
    auto r = make_fusion_ring(rda, k);
    auto x = path_matrix(r).x;
    const int m = r.size();
    std::vector<int> conj(m), perm(m);
    for (int i = 0; i < m; ++i) conj[i] = r.position(conjugate(rda, r.alcove[i]));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        CHECK(x[i][j] == x[conj[i]][j]);
        CHECK(x[i][j] == x[i][conj[j]]);
      }
    for (const auto& aut : automorphisms(rda)) {
      for (int i = 0; i < m; ++i) perm[i] = r.position(aut.apply(rda, r.alcove[i], k));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) CHECK(x[i][j] == x[i][perm[j]]);
    }
  }
}
