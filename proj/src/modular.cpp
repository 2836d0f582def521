#include "wzw/modular.hpp"

#include <algorithm>
#include <cmath>

namespace wzw {

namespace {

double matrix_deviation(const CMatrix& a, const CMatrix& b) {
  double worst = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
  return worst;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  const size_t m = a.size();
  CMatrix c(m, std::vector<Complex>(m, Complex(0, 0)));
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < m; ++k) {
      Complex aik = a[i][k];
      if (aik == Complex(0, 0)) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

void validate(const ModularData& md) {
  const int m = md.size();
  const double tol = md.eps;
  double worst_sym = 0, worst_uni = 0, worst_conj = 0, worst_st = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      worst_sym = std::max(worst_sym, std::abs(md.s[i][j] - md.s[j][i]));
      Complex dot(0, 0);
      for (int k = 0; k < m; ++k) dot += md.s[i][k] * std::conj(md.s[j][k]);
      worst_uni = std::max(worst_uni, std::abs(dot - (i == j ? 1.0 : 0.0)));
      Complex c2(0, 0);
      for (int k = 0; k < m; ++k) c2 += md.s[i][k] * md.s[k][j];
      worst_conj = std::max(worst_conj, std::abs(c2 - (md.conj_perm[i] == j ? 1.0 : 0.0)));
    }
  // (ST)^3 = S^4 = 1 in this build's evaluation convention
  CMatrix st = md.s;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) st[i][j] *= md.t_diag[j];
  CMatrix st3 = matmul(matmul(st, st), st);
  CMatrix id(m, std::vector<Complex>(m, Complex(0, 0)));
  for (int i = 0; i < m; ++i) id[i][i] = 1.0;
  worst_st = matrix_deviation(st3, id);

  for (int j = 0; j < m; ++j)
    if (std::abs(md.s[0][j].imag()) > tol || md.s[0][j].real() <= 0)
      throw std::logic_error("S row 0 is not real positive");
  if (worst_sym > tol || worst_uni > tol || worst_conj > tol || worst_st > tol)
    throw std::logic_error("modular invariants violated for " + md.rd().name() + " level " +
                           std::to_string(md.ring.level) + ": sym " + std::to_string(worst_sym) +
                           ", unitarity " + std::to_string(worst_uni) + ", S^2=C " +
                           std::to_string(worst_conj) + ", (ST)^3 " + std::to_string(worst_st));
}

}  // namespace

double ModularData::sum_eps() const { return eps * std::sqrt(static_cast<double>(size())); }

ModularData make_modular_data(const FusionRing& ring, double eps) {
  const RootData& rd = *ring.rd;
  ModularData md;
  md.ring = ring;
  md.eps = eps;
  const int m = ring.size();
  const int k = ring.level;

  md.conj_perm.resize(m);
  for (int i = 0; i < m; ++i) md.conj_perm[i] = ring.index.at(conjugate(rd, ring.alcove[i]));

  // chi(lambda)[mu + rho] for every pair, from the exact weight systems
  std::vector<CharacterPolynomial> chi(m);
  for (int i = 0; i < m; ++i) chi[i] = character_polynomial(rd, ring.alcove[i]);

  std::vector<Weight> shifted(m);
  for (int j = 0; j < m; ++j) {
    shifted[j] = ring.alcove[j];
    for (auto& x : shifted[j]) x += 1;
  }

  md.qdim.resize(m);
  for (int j = 0; j < m; ++j) {
    Complex v = evaluate_at_level(rd, chi[j], rd.rho, k);
    if (std::abs(v.imag()) > eps * 10)
      throw std::logic_error("quantum dimension came out complex");
    md.qdim[j] = v.real();
    if (md.qdim[j] <= 0) throw std::logic_error("non-positive quantum dimension");
  }
  md.s1 = 0;
  md.s2 = 0;
  for (double d : md.qdim) {
    md.s1 += d;
    md.s2 += d * d;
  }

  const double s00 = 1.0 / std::sqrt(md.s2);
  md.s.assign(m, std::vector<Complex>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      md.s[i][j] = s00 * md.qdim[j] * evaluate_at_level(rd, chi[i], shifted[j], k);

  // T_{nn} = exp(2 pi i (h(n) - c/24)), h(n) = <n, n+2 rho>/(2(k+h_vee))
  md.central_charge =
      static_cast<double>(rd.dim_g) * k / static_cast<double>(k + rd.dual_coxeter);
  md.t_diag.resize(m);
  md.conformal_weight.resize(m);
  for (int j = 0; j < m; ++j) {
    Weight n2r = ring.alcove[j];
    for (int i = 0; i < rd.rank; ++i) n2r[i] += 2;
    Rat h = inner(rd, ring.alcove[j], n2r) / Rat(2 * (k + rd.dual_coxeter));
    md.conformal_weight[j] =
        static_cast<double>(h.numerator()) / static_cast<double>(h.denominator());
    double angle = 2.0 * M_PI * (md.conformal_weight[j] - md.central_charge / 24.0);
    md.t_diag[j] = Complex(std::cos(angle), std::sin(angle));
  }

  validate(md);
  return md;
}

double quantum_dimension(const ModularData& md, const Weight& mu) {
  return md.qdim[md.ring.position(mu)];
}

Decomposition verlinde(const ModularData& md, const Weight& lambda, const Weight& mu) {
  const int m = md.size();
  const int l = md.ring.position(lambda);
  const int r = md.ring.position(mu);
  Decomposition dec;
  for (int n = 0; n < m; ++n) {
    Complex acc(0, 0);
    for (int kk = 0; kk < m; ++kk)
      acc += md.s[l][kk] * md.s[r][kk] * std::conj(md.s[n][kk]) / md.s[0][kk];
    double rounded = std::round(acc.real());
    double residual = std::max(std::abs(acc.real() - rounded), std::abs(acc.imag()));
    if (residual > 1e-6)
      throw std::logic_error("Verlinde number failed to round to an integer (residual " +
                             std::to_string(residual) + ")");
    if (rounded < -0.5)
      throw std::logic_error("negative Verlinde fusion number");
    if (rounded > 0.5) dec.terms[md.ring.alcove[n]] = static_cast<long long>(rounded);
  }
  return dec;
}

Complex sigma_sum(const ModularData& md, const Weight& kappa) {
  const int c = md.ring.position(kappa);
  Complex acc(0, 0);
  for (int n = 0; n < md.size(); ++n) acc += md.s[n][c];
  return acc;
}

CMatrix fusion_character_table(const ModularData& md) {
  const int m = md.size();
  CMatrix chi(m, std::vector<Complex>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) chi[i][j] = md.s[i][j] / md.s[0][j];
  return chi;
}

namespace {

int round_indicator(Complex v, const char* what) {
  double rounded = std::round(v.real());
  double residual = std::max(std::abs(v.real() - rounded), std::abs(v.imag()));
  if (residual > 1e-6)
    throw std::logic_error(std::string(what) + " failed to round (residual " +
                           std::to_string(residual) + ")");
  int iv = static_cast<int>(rounded);
  if (iv < -1 || iv > 1)
    throw std::logic_error(std::string(what) + " out of {-1,0,1}: " + std::to_string(iv));
  return iv;
}

// iota(nu)^2 = exp(4 pi i h(nu))
std::vector<Complex> iota_sq(const ModularData& md) {
  std::vector<Complex> v(md.size());
  for (int i = 0; i < md.size(); ++i) {
    double a = 4.0 * M_PI * md.conformal_weight[i];
    v[i] = Complex(std::cos(a), std::sin(a));
  }
  return v;
}

}  // namespace

int frobenius_schur(const ModularData& md, const Weight& mu) {
  const int m = md.size();
  const int p = md.ring.position(mu);
  auto i2 = iota_sq(md);
  // Substitute the Verlinde expansion of N_mu into both closed forms;
  // each becomes one S-weighted contraction per alcove column.
  Complex direct(0, 0), recast(0, 0);
  for (int kk = 0; kk < m; ++kk) {
    Complex a(0, 0), b(0, 0), ac(0, 0), bc(0, 0);
    for (int n = 0; n < m; ++n) {
      Complex w = md.s[0][n];
      a += w / i2[n] * md.s[n][kk];             // sum_nu S_0nu iota(nu)^-2 S_nu k
      b += w * i2[n] * std::conj(md.s[n][kk]);  // sum_sig S_0sig iota(sig)^2 S*_sig k
      ac += w * i2[n] * md.s[n][kk];
      bc += w / i2[n] * std::conj(md.s[n][kk]);
    }
    direct += md.s[p][kk] / md.s[0][kk] * a * b;
    recast += md.s[p][kk] / md.s[0][kk] * ac * bc;
  }
  int v1 = round_indicator(direct, "Frobenius-Schur double sum");
  int v2 = round_indicator(recast, "Frobenius-Schur recast form");
  if (v1 != v2)
    throw std::logic_error("Frobenius-Schur forms disagree: " + std::to_string(v1) + " vs " +
                           std::to_string(v2));
  return v1;
}

int frobenius_schur_from_matrix(const ModularData& md, const IntMatrix& n_mu) {
  const int m = md.size();
  auto i2 = iota_sq(md);
  Complex direct(0, 0), recast(0, 0);
  for (int n = 0; n < m; ++n)
    for (int s = 0; s < m; ++s) {
      if (n_mu[n][s] == 0) continue;
      double c = static_cast<double>(n_mu[n][s]) * md.s[0][n].real() * md.s[0][s].real();
      direct += c * i2[s] / i2[n];
      recast += c * i2[n] / i2[s];
    }
  int v1 = round_indicator(direct, "Frobenius-Schur double sum");
  int v2 = round_indicator(recast, "Frobenius-Schur recast form");
  if (v1 != v2)
    throw std::logic_error("Frobenius-Schur matrix forms disagree");
  return v1;
}

double automorphism_covariance_residual(const ModularData& md, const Automorphism& aut,
                                        int orientation) {
  const RootData& rd = md.rd();
  const int m = md.size();
  const int N = aut.grading_modulus;
  double worst = 0;
  for (int i = 0; i < m; ++i) {
    int gi = md.ring.position(aut.apply(rd, md.ring.alcove[i], md.ring.level));
    for (int j = 0; j < m; ++j) {
      double angle = 2.0 * M_PI * orientation * aut.tau(rd, md.ring.alcove[j]) / N;
      Complex phase(std::cos(angle), std::sin(angle));
      worst = std::max(worst, std::abs(md.s[gi][j] - phase * md.s[i][j]));
    }
  }
  return worst;
}

}  // namespace wzw
