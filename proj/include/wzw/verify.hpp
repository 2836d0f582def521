#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wzw/modular.hpp"

namespace wzw {

struct TheoremReport {
  std::string theorem;
  std::string algebra;
  int level = -1;  // -1: classical
  long long cases = 0;
  double max_residual = 0;
  std::vector<std::string> failures;  // minimal reproductions

  bool pass() const { return failures.empty(); }
  std::string summary() const;
};

// Exhaustive below the thresholds, seeded-random above.
struct SampleSpec {
  int exhaustive_max_label = 3;   // all pairs when every label stays below this
  int sample_pairs = 24;          // random pairs otherwise
  int random_max_label = 2;
  std::uint64_t seed = 12345;
  std::vector<std::pair<Weight, Weight>> forced_pairs;  // always included
};

/// Theorem 1: sum_nu N_{lm}^nu = sum_nu N_{conj(l) m}^nu, exact integers.
TheoremReport check_theorem1(const RootData& rd, const SampleSpec& spec);

/// Theorem 2: same statement for the level-k fusion multiplicities,
/// exhaustive over alcove pairs.
TheoremReport check_theorem2(const FusionRing& ring);

/// Theorems 3-4: Sigma(kappa) vanishes for every complex or quaternionic
/// alcove weight (within the scaled tolerance).
TheoremReport check_theorem3_4(const ModularData& md);

/// Triple-oracle equality: affine Racah-Speiser == Kac-Walton == rounded
/// Verlinde over all alcove pairs.
TheoremReport check_oracles(const ModularData& md);

struct VanishingCensus {
  std::string algebra;
  int level = 0;
  int alcove_size = 0;
  struct Entry {
    Weight kappa;
    RepType type;
    double abs_sigma = 0;
    bool vanished = false;
    std::string explained_by;  // complex | quaternionic | automorphism-grading | accidental | ""
  };
  std::vector<Entry> entries;
  double threshold = 0;

  int accidental_count() const;
  int vanishing_count() const;
};

/// Classifies Sigma(kappa) over the whole alcove; "accidental" is a real
/// weight with no non-vanishing grading whose sum still drops below the
/// threshold (the scaled epsilon of the modular data).
VanishingCensus vanishing_census(const ModularData& md);

}  // namespace wzw
