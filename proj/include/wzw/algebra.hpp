#pragma once

#include <boost/rational.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wzw {

using Rat = boost::rational<long long>;

// Dynkin labels of a weight; length = rank of the owning algebra.
// Labels may be negative for non-dominant weights.
using Weight = std::vector<int>;

enum class Series { A, B, C, D, E, F, G };

struct AlgebraId {
  Series series;
  int rank;

  bool operator==(const AlgebraId&) const = default;
  auto operator<=>(const AlgebraId&) const = default;
};

/// Parses names like "A2", "D5", "E6". Throws std::invalid_argument on
/// unknown series or a rank outside the simple range (E5, D2, ...).
AlgebraId parse_algebra(const std::string& name);
std::string algebra_name(const AlgebraId& alg);

/// "1,0,0,0,2,0" -> Weight. Throws std::invalid_argument on junk.
Weight parse_weight(const std::string& csv);
std::string format_weight(const Weight& w);

struct PositiveRoot {
  std::vector<int> coords;  // expansion on simple roots
  Weight labels;            // Dynkin labels
  int height;               // sum of coords
  // pairing[i] = <omega_i, root> so that <lambda, root> = sum_i lambda_i * pairing[i]
  std::vector<Rat> pairing;
  Rat norm2;                // <root, root>
};

// Root-system constants for one simple algebra, normalized so that long
// roots have length^2 = 2 (hence K(lambda) = <lambda, theta> is integral).
struct RootData {
  AlgebraId id;
  int rank = 0;
  std::vector<std::vector<int>> cartan;   // row i = Dynkin labels of alpha_i
  std::vector<Rat> half_len2;             // d_i = <alpha_i,alpha_i>/2
  std::vector<std::vector<Rat>> form;     // form[i][j] = <omega_i, omega_j>
  std::vector<PositiveRoot> positive_roots;
  Weight theta_labels;                    // highest root, Dynkin labels
  std::vector<int> theta_coords;          // Coxeter-Kac marks
  std::vector<int> comarks;               // coefficients of K(lambda)
  Weight rho;                             // (1,...,1)
  int dual_coxeter = 0;                   // h_vee
  long long dim_g = 0;
  long long center_order = 0;             // det of the Cartan matrix

  std::string name() const { return algebra_name(id); }
};

/// Builds (or fetches from the per-process cache) the root data of a
/// simple algebra. The returned reference stays valid for the process
/// lifetime; RootData is immutable after construction.
const RootData& root_data(const AlgebraId& alg);
inline const RootData& root_data(const std::string& name) { return root_data(parse_algebra(name)); }

/// Symmetric bilinear form on the weight space, <theta,theta> = 2, exact.
Rat inner(const RootData& rd, const Weight& x, const Weight& y);

/// Level (rung) K(lambda) = <lambda, theta> = sum_i comark_i * lambda_i.
long long level_of(const RootData& rd, const Weight& lambda);

/// Weyl dimension formula, exact.
long long weyl_dimension(const RootData& rd, const Weight& lambda);

bool is_dominant(const Weight& w);

inline void check_rank(const RootData& rd, const Weight& w) {
  if (static_cast<int>(w.size()) != rd.rank)
    throw std::invalid_argument("weight has " + std::to_string(w.size()) +
                                " labels, algebra " + rd.name() + " has rank " +
                                std::to_string(rd.rank));
}

}  // namespace wzw
