#pragma once

#include <complex>
#include <map>
#include <vector>

#include "wzw/algebra.hpp"

namespace wzw {

// Result of mapping a rho-shifted weight into the (interior of the)
// fundamental chamber. sign = 0 means the orbit touches a wall and the
// weight drops out of Racah-Speiser sums.
struct ReducedWeight {
  Weight dominant;
  int sign = 0;
};

/// Reflects at the most negative label (ties: lowest index) until all
/// labels are positive; any zero label encountered short-circuits to
/// sign 0. Total function; sign is det of the Weyl word used.
ReducedWeight reduce_shifted(const RootData& rd, Weight sigma);

/// Plain dominant representative of the Weyl orbit (no sign, zeros pass
/// through).
Weight dominant_rep(const RootData& rd, Weight w);

/// Full Weyl orbit of a dominant weight, sorted.
std::vector<Weight> weyl_orbit(const RootData& rd, const Weight& dominant);

// Weight system of one irrep: Freudenthal multiplicities on the dominant
// weights plus the expanded orbit list.
struct WeightSystem {
  Weight hw;
  std::map<Weight, long long> dominant_mults;
  std::vector<std::pair<Weight, long long>> all;  // every weight once, sorted
  long long total = 0;                            // = weyl_dimension(hw)

  long long multiplicity(const RootData& rd, const Weight& w) const;
};

/// Memoized per (algebra, hw); also consults the on-disk cache when a
/// cache directory is configured (see wzw/cache.hpp). Rejects
/// non-dominant hw.
const WeightSystem& weight_system(const RootData& rd, const Weight& hw);

// Laurent polynomial in t_1..t_n; exponent vectors are Dynkin labels.
struct CharacterPolynomial {
  std::map<Weight, long long> terms;
};

CharacterPolynomial character_polynomial(const RootData& rd, const Weight& hw);
CharacterPolynomial multiply(const CharacterPolynomial& a, const CharacterPolynomial& b);

/// Evaluation at level k on a weight mu: each monomial a*t^l contributes
/// a*exp[2 pi i <l, mu> / (h_vee + k)]. Angles are reduced exactly before
/// going to floating point.
std::complex<double> evaluate_at_level(const RootData& rd, const CharacterPolynomial& p,
                                       const Weight& mu, int level);

}  // namespace wzw
