#pragma once

#include <map>
#include <vector>

#include "wzw/tensor.hpp"

namespace wzw {

using IntMatrix = std::vector<std::vector<long long>>;

// The level-k fusion ring of an affine algebra: the Weyl alcove P_+^k in a
// fixed graded-lexicographic order, shared by every matrix and JSON output.
struct FusionRing {
  const RootData* rd = nullptr;
  int level = 0;
  std::vector<Weight> alcove;
  std::map<Weight, int> index;

  int size() const { return static_cast<int>(alcove.size()); }
  int shifted_level() const { return level + rd->dual_coxeter; }
  int position(const Weight& w) const;  // throws when w is not integrable
};

FusionRing make_fusion_ring(const RootData& rd, int level);

/// Reduction into the interior of the shifted alcove
/// {0 < sigma_i, K(sigma) < k + h_vee} under the affine Weyl group;
/// sign 0 on any wall (including the shifted back wall).
ReducedWeight reduce_shifted_affine(const RootData& rd, int level, Weight sigma);

/// Affine Racah-Speiser fusion product. Both weights must be integrable at
/// the ring's level.
Decomposition fusion_decompose(const FusionRing& ring, const Weight& lambda, const Weight& mu,
                               bool diagnostics = false);

/// Kac-Walton: classical decomposition followed by affine reflection of
/// each term into the alcove. Equal to fusion_decompose by construction of
/// the affine Weyl group; kept as an independent route.
Decomposition kac_walton(const FusionRing& ring, const Weight& lambda, const Weight& mu);

/// One matrix per alcove weight, (N_lambda)_mu^nu in alcove order.
std::vector<IntMatrix> fusion_matrices(const FusionRing& ring);

struct PathMatrix {
  IntMatrix x;  // sum of all fusion matrices
};

PathMatrix path_matrix(const FusionRing& ring);

}  // namespace wzw
