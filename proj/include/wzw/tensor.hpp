#pragma once

#include <map>
#include <vector>

#include "wzw/weights.hpp"

namespace wzw {

// Tensor or fusion product decomposition. Final multiplicities are
// strictly positive; a negative total after Racah-Speiser cancellation is
// an internal error, never a value.
struct Decomposition {
  std::map<Weight, long long> terms;

  // Shifted-weight bookkeeping, filled only when diagnostics are
  // requested: phi/psi count sign +1/-1 contributions, the 0-suffixed
  // counters the wall cases.
  struct Diagnostics {
    bool computed = false;
    long long phi = 0;
    long long psi = 0;
    long long phi_nonneg = 0;   // sigma with no negative label
    long long psi_nonpos = 0;   // sigma with a negative label
    long long phi0_plus = 0;    // unreflected but on a wall
    long long psi0_minus = 0;   // reflected onto a wall
  } diag;

  long long total_multiplicity() const;
};

/// Classical Racah-Speiser decomposition of lambda (x) mu. Iterates the
/// smaller weight system of the pair unless diagnostics are requested, in
/// which case it iterates [lambda] as the bookkeeping is phrased that way.
Decomposition tensor_decompose(const RootData& rd, const Weight& lambda, const Weight& mu,
                               bool diagnostics = false);

long long total_multiplicity(const RootData& rd, const Weight& lambda, const Weight& mu);

/// (N_lambda)_mu^nu over a finite list of dominant weights; contributions
/// outside the list are dropped.
std::vector<std::vector<long long>> tensor_matrix(const RootData& rd, const Weight& lambda,
                                                  const std::vector<Weight>& weight_list);

}  // namespace wzw
