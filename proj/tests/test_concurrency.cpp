#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <vector>

#include "wzw/modular.hpp"

using namespace wzw;

// The shared caches (root data per algebra, weight systems per highest
// weight) are read-mostly and guarded; hammer them from several threads
// and check every thread observes identical values.

TEST_CASE("root data and weight systems are safe to share across threads") {
  const std::vector<std::string> algs = {"A3", "B3", "C3", "D4", "G2", "E6"};
  auto worker = [&](int salt) {
    long long acc = 0;
    for (int round = 0; round < 3; ++round) {
      for (const auto& name : algs) {
        const auto& rd = root_data(name);
        Weight w(rd.rank, 0);
        w[(salt + round) % rd.rank] = 1 + (salt % 2);
        acc += weight_system(rd, w).total;
        acc += rd.dual_coxeter;
      }
    }
    return acc;
  };
  std::vector<std::future<long long>> futs;
  for (int t = 0; t < 8; ++t) futs.push_back(std::async(std::launch::async, worker, t % 4));
  std::vector<long long> results;
  for (auto& f : futs) results.push_back(f.get());
  // threads t and t+4 ran the same salt and must agree exactly
  for (int t = 0; t < 4; ++t) CHECK(results[t] == results[t + 4]);
}

TEST_CASE("modular data built concurrently agrees") {
  auto build = [] {
    auto md = make_modular_data(make_fusion_ring(root_data("A2"), 3));
    return std::abs(sigma_sum(md, {0, 0}));
  };
  auto a = std::async(std::launch::async, build);
  auto b = std::async(std::launch::async, build);
  CHECK(a.get() == doctest::Approx(b.get()).epsilon(1e-14));
}
