#include "wzw/fusion.hpp"

#include <algorithm>

namespace wzw {

int FusionRing::position(const Weight& w) const {
  auto it = index.find(w);
  if (it == index.end())
    throw std::invalid_argument(format_weight(w) + " is not integrable at level " +
                                std::to_string(level) + " for " + rd->name());
  return it->second;
}

FusionRing make_fusion_ring(const RootData& rd, int level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  FusionRing ring;
  ring.rd = &rd;
  ring.level = level;

  Weight w(rd.rank, 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == rd.rank) {
      ring.alcove.push_back(w);
      return;
    }
    for (int v = 0; v * rd.comarks[pos] <= budget; ++v) {
      w[pos] = v;
      self(self, pos + 1, budget - v * rd.comarks[pos]);
    }
    w[pos] = 0;
  };
  rec(rec, 0, level);

  std::sort(ring.alcove.begin(), ring.alcove.end(), [&](const Weight& a, const Weight& b) {
    long long ka = level_of(rd, a), kb = level_of(rd, b);
    return std::tie(ka, a) < std::tie(kb, b);
  });
  for (int i = 0; i < ring.size(); ++i) ring.index[ring.alcove[i]] = i;
  return ring;
}

ReducedWeight reduce_shifted_affine(const RootData& rd, int level, Weight sigma) {
  check_rank(rd, sigma);
  const long long t = level + rd.dual_coxeter;
  // Tripwire: the reduction into a bounded alcove terminates; a runaway
  // loop means broken constants.
  long long budget = 10 * t * rd.rank + 64;
  int sign = 1;
  while (budget-- > 0) {
    long long s0 = t - level_of(rd, sigma);
    int arg = -1;
    long long worst = 0;
    if (s0 == 0) return {std::move(sigma), 0};
    if (s0 < 0) worst = s0;
    for (int i = 0; i < rd.rank; ++i) {
      if (sigma[i] == 0) return {std::move(sigma), 0};
      if (sigma[i] < worst) { worst = sigma[i]; arg = i; }
    }
    if (worst == 0) return {std::move(sigma), sign};
    if (arg < 0) {
      // s_0[sigma] = sigma + (t - K(sigma)) * theta
      for (int i = 0; i < rd.rank; ++i)
        sigma[i] += static_cast<int>(s0) * rd.theta_labels[i];
    } else {
      int si = sigma[arg];
      for (int j = 0; j < rd.rank; ++j) sigma[j] -= si * rd.cartan[arg][j];
    }
    sign = -sign;
  }
  throw std::logic_error("affine reduction did not terminate for " + rd.name());
}

namespace {

void require_integrable(const FusionRing& ring, const Weight& w, const char* side) {
  check_rank(*ring.rd, w);
  if (!is_dominant(w))
    throw std::invalid_argument(std::string(side) + " weight " + format_weight(w) +
                                " is not dominant");
  if (level_of(*ring.rd, w) > ring.level)
    throw std::invalid_argument(std::string(side) + " weight " + format_weight(w) +
                                " has level above " + std::to_string(ring.level));
}

}  // namespace

Decomposition fusion_decompose(const FusionRing& ring, const Weight& lambda, const Weight& mu,
                               bool diagnostics) {
  const RootData& rd = *ring.rd;
  require_integrable(ring, lambda, "left");
  require_integrable(ring, mu, "right");

  const Weight* iterate = &lambda;
  const Weight* fixed = &mu;
  if (!diagnostics && weyl_dimension(rd, mu) < weyl_dimension(rd, lambda))
    std::swap(iterate, fixed);

  Decomposition dec;
  dec.diag.computed = diagnostics;
  Weight shift = *fixed;
  for (auto& x : shift) x += 1;

  for (const auto& [lp, m] : weight_system(rd, *iterate).all) {
    Weight sigma = lp;
    bool has_negative = false;
    for (int i = 0; i < rd.rank; ++i) {
      sigma[i] += shift[i];
      if (sigma[i] < 0) has_negative = true;
    }
    bool beyond = !has_negative && level_of(rd, sigma) > ring.shifted_level();
    auto red = reduce_shifted_affine(rd, ring.level, std::move(sigma));
    if (diagnostics) {
      if (!has_negative && !beyond) {
        dec.diag.phi_nonneg += m;
        if (red.sign == 0) dec.diag.phi0_plus += m;
      } else {
        dec.diag.psi_nonpos += m;
        if (red.sign == 0) dec.diag.psi0_minus += m;
      }
      if (red.sign > 0) dec.diag.phi += m;
      if (red.sign < 0) dec.diag.psi += m;
    }
    if (red.sign == 0) continue;
    Weight nu = red.dominant;
    for (auto& x : nu) x -= 1;
    dec.terms[nu] += red.sign * m;
  }

  for (auto it = dec.terms.begin(); it != dec.terms.end();) {
    if (it->second < 0)
      throw std::logic_error("affine Racah-Speiser cancellation left multiplicity " +
                             std::to_string(it->second) + " at " + format_weight(it->first));
    it = it->second == 0 ? dec.terms.erase(it) : std::next(it);
  }
  return dec;
}

Decomposition kac_walton(const FusionRing& ring, const Weight& lambda, const Weight& mu) {
  const RootData& rd = *ring.rd;
  require_integrable(ring, lambda, "left");
  require_integrable(ring, mu, "right");

  Decomposition classical = tensor_decompose(rd, lambda, mu);
  Decomposition dec;
  for (const auto& [nu, m] : classical.terms) {
    Weight sigma = nu;
    for (auto& x : sigma) x += 1;
    auto red = reduce_shifted_affine(rd, ring.level, std::move(sigma));
    if (red.sign == 0) continue;
    Weight folded = red.dominant;
    for (auto& x : folded) x -= 1;
    dec.terms[folded] += red.sign * m;
  }
  for (auto it = dec.terms.begin(); it != dec.terms.end();) {
    if (it->second < 0)
      throw std::logic_error("Kac-Walton folding left multiplicity " +
                             std::to_string(it->second) + " at " + format_weight(it->first));
    it = it->second == 0 ? dec.terms.erase(it) : std::next(it);
  }
  return dec;
}

std::vector<IntMatrix> fusion_matrices(const FusionRing& ring) {
  const int m = ring.size();
  std::vector<IntMatrix> mats(m, IntMatrix(m, std::vector<long long>(m, 0)));
  for (int l = 0; l < m; ++l) {
    for (int r = 0; r < m; ++r) {
      for (const auto& [nu, mult] : fusion_decompose(ring, ring.alcove[l], ring.alcove[r]).terms)
        mats[l][r][ring.position(nu)] = mult;
    }
  }
  return mats;
}

PathMatrix path_matrix(const FusionRing& ring) {
  const int m = ring.size();
  PathMatrix p;
  p.x.assign(m, std::vector<long long>(m, 0));
  for (const auto& mat : fusion_matrices(ring))
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) p.x[i][j] += mat[i][j];
  return p;
}

}  // namespace wzw
