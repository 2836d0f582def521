#include "wzw/weights.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "wzw/cache.hpp"

namespace wzw {

namespace {

// applies s_i in label coordinates: w -> w - w_i * alpha_i
inline void reflect(const RootData& rd, Weight& w, int i) {
  int wi = w[i];
  const auto& row = rd.cartan[i];
  for (int j = 0; j < rd.rank; ++j) w[j] -= wi * row[j];
}

}  // namespace

ReducedWeight reduce_shifted(const RootData& rd, Weight sigma) {
  check_rank(rd, sigma);
  int sign = 1;
  while (true) {
    int arg = -1, worst = 0;
    for (int i = 0; i < rd.rank; ++i) {
      if (sigma[i] == 0) return {std::move(sigma), 0};
      if (sigma[i] < worst) { worst = sigma[i]; arg = i; }
    }
    if (arg < 0) return {std::move(sigma), sign};
    reflect(rd, sigma, arg);
    sign = -sign;
  }
}

Weight dominant_rep(const RootData& rd, Weight w) {
  check_rank(rd, w);
  while (true) {
    int arg = -1, worst = 0;
    for (int i = 0; i < rd.rank; ++i)
      if (w[i] < worst) { worst = w[i]; arg = i; }
    if (arg < 0) return w;
    reflect(rd, w, arg);
  }
}

std::vector<Weight> weyl_orbit(const RootData& rd, const Weight& dominant) {
  std::set<Weight> seen{dominant};
  std::vector<Weight> queue{dominant};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Weight w = queue[qi];
    for (int i = 0; i < rd.rank; ++i) {
      if (w[i] <= 0) continue;  // walk downward only; reaches the full orbit
      Weight v = w;
      reflect(rd, v, i);
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

long long WeightSystem::multiplicity(const RootData& rd, const Weight& w) const {
  auto it = dominant_mults.find(dominant_rep(rd, w));
  return it == dominant_mults.end() ? 0 : it->second;
}

namespace {

// All dominant mu with lambda - mu a non-negative root-lattice element.
// By saturation these are exactly the dominant weights of [lambda].
std::vector<std::pair<Weight, int>> dominant_candidates(const RootData& rd, const Weight& lambda) {
  const int n = rd.rank;
  // bounds: c = A^{-T}(lambda - mu) <= A^{-T} lambda componentwise
  std::vector<long long> bound(n);
  for (int i = 0; i < n; ++i) {
    Rat b(0);
    for (int j = 0; j < n; ++j) b += rd.form[j][i] * Rat(lambda[j]);
    b /= rd.half_len2[i];
    bound[i] = b.numerator() / b.denominator();
  }
  std::vector<std::pair<Weight, int>> out;
  std::vector<int> c(n, 0);
  Weight mu = lambda;
  // mu = lambda - A^T c tracked incrementally: adding 1 to c_i subtracts row i
  // of the Cartan matrix.
  auto rec = [&](auto&& self, int pos, int height) -> void {
    if (pos == n) {
      if (is_dominant(mu)) out.push_back({mu, height});
      return;
    }
    self(self, pos + 1, height);
    for (int step = 1; step <= bound[pos]; ++step) {
      for (int j = 0; j < n; ++j) mu[j] -= rd.cartan[pos][j];
      self(self, pos + 1, height + step);
    }
    for (int j = 0; j < n; ++j) mu[j] += static_cast<int>(bound[pos]) * rd.cartan[pos][j];
  };
  rec(rec, 0, 0);
  return out;
}

std::unique_ptr<WeightSystem> freudenthal(const RootData& rd, const Weight& lambda) {
  auto ws = std::make_unique<WeightSystem>();
  ws->hw = lambda;

  auto cands = dominant_candidates(rd, lambda);
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  });

  Weight lam_rho = lambda;
  for (auto& x : lam_rho) x += 1;
  const Rat lam_norm = inner(rd, lam_rho, lam_rho);

  for (const auto& [mu, height] : cands) {
    if (height == 0) {
      ws->dominant_mults[mu] = 1;
      continue;
    }
    Rat num(0);
    for (const auto& root : rd.positive_roots) {
      for (int j = 1;; ++j) {
        Weight w = mu;
        for (int i = 0; i < rd.rank; ++i) w[i] += j * root.labels[i];
        auto it = ws->dominant_mults.find(dominant_rep(rd, w));
        if (it == ws->dominant_mults.end()) break;  // root strings are contiguous
        Rat pair_val(0);
        for (int i = 0; i < rd.rank; ++i)
          if (w[i] != 0) pair_val += Rat(w[i]) * root.pairing[i];
        num += Rat(2 * it->second) * pair_val;
      }
    }
    Weight mu_rho = mu;
    for (auto& x : mu_rho) x += 1;
    Rat m = num / (lam_norm - inner(rd, mu_rho, mu_rho));
    if (m.denominator() != 1 || m.numerator() <= 0)
      throw std::logic_error("Freudenthal gave a non-positive or fractional multiplicity");
    ws->dominant_mults[mu] = m.numerator();
  }
  return ws;
}

void expand_orbits(const RootData& rd, WeightSystem& ws) {
  ws.all.clear();
  ws.total = 0;
  for (const auto& [mu, m] : ws.dominant_mults) {
    for (auto& w : weyl_orbit(rd, mu)) {
      ws.all.push_back({std::move(w), m});
      ws.total += m;
    }
  }
  std::sort(ws.all.begin(), ws.all.end());
}

}  // namespace

const WeightSystem& weight_system(const RootData& rd, const Weight& hw) {
  check_rank(rd, hw);
  if (!is_dominant(hw))
    throw std::invalid_argument("weight system needs a dominant highest weight, got " +
                                format_weight(hw));
  static std::mutex mu;
  static std::map<std::pair<AlgebraId, Weight>, std::unique_ptr<WeightSystem>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rd.id, hw);
  auto it = memo.find(key);
  if (it != memo.end()) return *it->second;

  std::unique_ptr<WeightSystem> ws;
  bool from_disk = false;
  if (auto cached = load_cached_weight_system(rd, hw)) {
    ws = std::make_unique<WeightSystem>(std::move(*cached));
    from_disk = true;
  } else {
    ws = freudenthal(rd, hw);
  }
  expand_orbits(rd, *ws);
  if (ws->total != weyl_dimension(rd, hw))
    throw std::logic_error("weight system size disagrees with the Weyl dimension for " +
                           format_weight(hw));
  if (!from_disk) store_cached_weight_system(rd, *ws);
  it = memo.emplace(std::move(key), std::move(ws)).first;
  return *it->second;
}

CharacterPolynomial character_polynomial(const RootData& rd, const Weight& hw) {
  CharacterPolynomial p;
  for (const auto& [w, m] : weight_system(rd, hw).all) p.terms[w] += m;
  return p;
}

CharacterPolynomial multiply(const CharacterPolynomial& a, const CharacterPolynomial& b) {
  CharacterPolynomial p;
  for (const auto& [wa, ma] : a.terms)
    for (const auto& [wb, mb] : b.terms) {
      Weight w = wa;
      for (size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
      long long& slot = p.terms[w];
      slot += ma * mb;
      if (slot == 0) p.terms.erase(w);
    }
  return p;
}

std::complex<double> evaluate_at_level(const RootData& rd, const CharacterPolynomial& p,
                                       const Weight& mu, int level) {
  check_rank(rd, mu);
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  const long long h = rd.dual_coxeter + level;
  // <l, mu> = (sum_j l_j * V_j) / Q with integral V: exact angle reduction.
  std::vector<Rat> v(rd.rank);
  long long q = 1;
  for (int j = 0; j < rd.rank; ++j) {
    Rat s(0);
    for (int i = 0; i < rd.rank; ++i)
      if (mu[i] != 0) s += rd.form[j][i] * Rat(mu[i]);
    v[j] = s;
    q = std::lcm(q, s.denominator());
  }
  std::vector<long long> V(rd.rank);
  for (int j = 0; j < rd.rank; ++j) V[j] = (v[j] * Rat(q)).numerator();
  const long long M = q * h;
  const double step = 2.0 * M_PI / static_cast<double>(M);

  std::complex<double> acc(0.0, 0.0);
  for (const auto& [l, a] : p.terms) {
    long long dot = 0;
    for (int j = 0; j < rd.rank; ++j) dot += static_cast<long long>(l[j]) * V[j];
    long long rem = ((dot % M) + M) % M;
    double angle = step * static_cast<double>(rem);
    acc += static_cast<double>(a) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

}  // namespace wzw
