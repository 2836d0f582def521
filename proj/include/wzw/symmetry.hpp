#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wzw/algebra.hpp"

namespace wzw {

/// Complex conjugate highest weight: label reversal for A_n, swap of the
/// two fork labels for D_odd, the diagram flip for E6, identity elsewhere.
Weight conjugate(const RootData& rd, const Weight& lambda);

enum class RepType { Real, Complex, Quaternionic };
std::string rep_type_name(RepType t);

/// Classical representation type from the Dynkin-label parity table.
RepType rep_type(const RootData& rd, const Weight& lambda);

// A center-induced permutation of the level-k alcove with its Z_N grading.
// Actions need the level explicitly since the affine label k - K(lambda)
// enters the formulas.
struct Automorphism {
  enum class Kind {
    ARot,       // A_n cyclic generator
    BFlip,      // B_n
    CFlip,      // C_n
    DoddRot,    // D_{2s+1} order-4 generator
    DevenP1,    // D_{2s} sigma'
    DevenP2,    // D_{2s} sigma''
    DevenP3,    // D_{2s} sigma'''
    E6Rot,      // E6 order-3 generator
    E7Flip,     // E7
  };

  Kind kind;
  std::string name;
  int order = 1;
  int grading_modulus = 1;  // N of the Z_N grading tau

  Weight apply(const RootData& rd, const Weight& lambda, int level) const;
  Weight apply_inverse(const RootData& rd, const Weight& lambda, int level) const;
  /// tau(lambda) in 0..N-1, exactly as tabulated.
  int tau(const RootData& rd, const Weight& lambda) const;
};

/// Generators of the center action on the alcove; empty for F4, G2, E8.
std::vector<Automorphism> automorphisms(const RootData& rd);

/// For a quaternionic lambda, an automorphism whose grading does not
/// vanish on it (the Theorem-4 witness). Throws std::invalid_argument when
/// lambda is not quaternionic.
Automorphism grading_nonzero_for_quaternionic(const RootData& rd, const Weight& lambda);

}  // namespace wzw
