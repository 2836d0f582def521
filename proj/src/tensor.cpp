#include "wzw/tensor.hpp"

#include <algorithm>

namespace wzw {

long long Decomposition::total_multiplicity() const {
  long long t = 0;
  for (const auto& [w, m] : terms) t += m;
  return t;
}

namespace {

void require_dominant(const RootData& rd, const Weight& w, const char* side) {
  check_rank(rd, w);
  if (!is_dominant(w))
    throw std::invalid_argument(std::string(side) + " weight " + format_weight(w) +
                                " is not dominant");
}

void finalize(Decomposition& dec, const RootData& rd, const Weight& lambda, const Weight& mu) {
  for (auto it = dec.terms.begin(); it != dec.terms.end();) {
    if (it->second < 0)
      throw std::logic_error("Racah-Speiser cancellation left multiplicity " +
                             std::to_string(it->second) + " at " + format_weight(it->first) +
                             " in " + rd.name() + " " + format_weight(lambda) + " (x) " +
                             format_weight(mu));
    it = it->second == 0 ? dec.terms.erase(it) : std::next(it);
  }
}

}  // namespace

Decomposition tensor_decompose(const RootData& rd, const Weight& lambda, const Weight& mu,
                               bool diagnostics) {
  require_dominant(rd, lambda, "left");
  require_dominant(rd, mu, "right");

  const Weight* iterate = &lambda;
  const Weight* fixed = &mu;
  if (!diagnostics && weyl_dimension(rd, mu) < weyl_dimension(rd, lambda))
    std::swap(iterate, fixed);

  Decomposition dec;
  dec.diag.computed = diagnostics;
  Weight shift = *fixed;  // mu + rho
  for (auto& x : shift) x += 1;

  for (const auto& [lp, m] : weight_system(rd, *iterate).all) {
    Weight sigma = lp;
    bool has_negative = false;
    for (int i = 0; i < rd.rank; ++i) {
      sigma[i] += shift[i];
      if (sigma[i] < 0) has_negative = true;
    }
    auto red = reduce_shifted(rd, sigma);
    if (diagnostics) {
      if (!has_negative) {
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
  finalize(dec, rd, lambda, mu);
  return dec;
}

long long total_multiplicity(const RootData& rd, const Weight& lambda, const Weight& mu) {
  return tensor_decompose(rd, lambda, mu).total_multiplicity();
}

std::vector<std::vector<long long>> tensor_matrix(const RootData& rd, const Weight& lambda,
                                                  const std::vector<Weight>& weight_list) {
  std::map<Weight, int> index;
  for (size_t i = 0; i < weight_list.size(); ++i) index[weight_list[i]] = static_cast<int>(i);
  std::vector<std::vector<long long>> mat(weight_list.size(),
                                          std::vector<long long>(weight_list.size(), 0));
  for (size_t r = 0; r < weight_list.size(); ++r) {
    for (const auto& [nu, m] : tensor_decompose(rd, lambda, weight_list[r]).terms) {
      auto it = index.find(nu);
      if (it != index.end()) mat[r][it->second] = m;
    }
  }
  return mat;
}

}  // namespace wzw
