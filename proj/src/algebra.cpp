#include "wzw/algebra.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace wzw {

namespace {

using BigInt = boost::multiprecision::cpp_int;

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::E: return 'E';
    case Series::F: return 'F';
    case Series::G: return 'G';
  }
  return '?';
}

void validate_rank(Series s, int n) {
  bool ok = false;
  switch (s) {
    case Series::A: ok = n >= 1; break;
    case Series::B: ok = n >= 2; break;
    case Series::C: ok = n >= 2; break;
    case Series::D: ok = n >= 3; break;
    case Series::E: ok = n >= 6 && n <= 8; break;
    case Series::F: ok = n == 4; break;
    case Series::G: ok = n == 2; break;
  }
  if (!ok) {
    std::string msg = "not a simple algebra: ";
    msg += series_letter(s);
    msg += std::to_string(n);
    msg += " (valid: A>=1, B>=2, C>=2, D>=3, E6..E8, F4, G2)";
    throw std::invalid_argument(msg);
  }
}

// Dynkin diagram edges per series, 0-based, in the node ordering of the
// automorphism/level tables: chains for A-D (B last root short, C last
// root long, D fork at nodes n-2,n-1), E6 branch node 6 on node 3,
// E7 branch node 7 on node 4, E8 branch node 8 on node 5.
std::vector<std::pair<int, int>> diagram_edges(Series s, int n) {
  std::vector<std::pair<int, int>> e;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) e.push_back({i, i + 1});
  };
  switch (s) {
    case Series::A:
    case Series::B:
    case Series::C:
    case Series::F:
    case Series::G:
      chain(n);
      break;
    case Series::D:
      chain(n - 1);
      e.push_back({n - 3, n - 1});
      break;
    case Series::E:
      chain(n - 1);
      e.push_back({n == 6 ? 2 : (n == 7 ? 3 : 4), n - 1});
      break;
  }
  return e;
}

std::vector<Rat> root_half_lengths(Series s, int n) {
  std::vector<Rat> d(n, Rat(1));
  switch (s) {
    case Series::B: d[n - 1] = Rat(1, 2); break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = Rat(1, 2);
      break;
    case Series::F: d[2] = d[3] = Rat(1, 2); break;
    case Series::G: d[1] = Rat(1, 3); break;
    default: break;
  }
  return d;
}

// Exact inverse by Gauss-Jordan; also returns the determinant.
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m, Rat& det) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Rat(1);
  det = Rat(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != Rat(0)) { piv = r; break; }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat f = m[col][col];
    for (int j = 0; j < n; ++j) { m[col][j] /= f; inv[col][j] /= f; }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == Rat(0)) continue;
      Rat g = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= g * m[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

std::unique_ptr<RootData> build(const AlgebraId& alg) {
  auto rd = std::make_unique<RootData>();
  rd->id = alg;
  const int n = alg.rank;
  rd->rank = n;
  rd->half_len2 = root_half_lengths(alg.series, n);
  const auto& d = rd->half_len2;

  // Cartan matrix: A_ij = 2<a_i,a_j>/<a_j,a_j>, with <a_i,a_j> = -max(d_i,d_j)
  // on diagram edges.
  rd->cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rd->cartan[i][i] = 2;
  for (auto [i, j] : diagram_edges(alg.series, n)) {
    Rat prod = -std::max(d[i], d[j]);
    Rat aij = prod / d[j];
    Rat aji = prod / d[i];
    if (aij.denominator() != 1 || aji.denominator() != 1)
      throw std::logic_error("non-integral Cartan entry");
    rd->cartan[i][j] = static_cast<int>(aij.numerator());
    rd->cartan[j][i] = static_cast<int>(aji.numerator());
  }

  // Quadratic form on fundamental weights: F = A^{-1} D.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(rd->cartan[i][j]);
  Rat det;
  auto ainv = invert(a, det);
  if (det.denominator() != 1 || det.numerator() <= 0)
    throw std::logic_error("Cartan determinant not a positive integer");
  rd->center_order = det.numerator();
  rd->form.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rd->form[i][j] = ainv[i][j] * d[j];

  // Positive roots by closure: walk root strings upward from the simple
  // roots, height by height.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  auto labels_of = [&](const std::vector<int>& coords) {
    Weight lab(n, 0);
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int i = 0; i < n; ++i) s += coords[i] * rd->cartan[i][j];
      lab[j] = s;
    }
    return lab;
  };
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto coords = queue[qi];
    Weight lab = labels_of(coords);
    for (int i = 0; i < n; ++i) {
      // string through this root in direction alpha_i: p back-steps exist
      int p = 0;
      auto back = coords;
      while (true) {
        back[i] -= 1;
        bool nonneg = std::all_of(back.begin(), back.end(), [](int x) { return x >= 0; });
        if (!nonneg || !seen.count(back)) break;
        ++p;
      }
      int q = p - lab[i];
      if (q >= 1) {
        auto fwd = coords;
        fwd[i] += 1;
        if (seen.insert(fwd).second) queue.push_back(fwd);
      }
    }
  }
  for (const auto& coords : seen) {
    PositiveRoot r;
    r.coords = coords;
    r.labels = labels_of(coords);
    r.height = std::accumulate(coords.begin(), coords.end(), 0);
    r.pairing.resize(n);
    for (int i = 0; i < n; ++i) r.pairing[i] = Rat(coords[i]) * d[i];
    r.norm2 = Rat(0);
    for (int i = 0; i < n; ++i) r.norm2 += r.pairing[i] * Rat(r.labels[i]);
    rd->positive_roots.push_back(std::move(r));
  }
  std::sort(rd->positive_roots.begin(), rd->positive_roots.end(),
            [](const PositiveRoot& x, const PositiveRoot& y) {
              return std::tie(x.height, x.coords) < std::tie(y.height, y.coords);
            });

  const PositiveRoot& theta = rd->positive_roots.back();
  if (theta.norm2 != Rat(2)) throw std::logic_error("highest root norm != 2");
  rd->theta_labels = theta.labels;
  rd->theta_coords = theta.coords;
  rd->comarks.resize(n);
  for (int i = 0; i < n; ++i) {
    Rat cm = Rat(theta.coords[i]) * d[i];
    if (cm.denominator() != 1) throw std::logic_error("non-integral comark");
    rd->comarks[i] = static_cast<int>(cm.numerator());
  }
  rd->rho.assign(n, 1);
  rd->dual_coxeter = 1 + std::accumulate(rd->comarks.begin(), rd->comarks.end(), 0);
  rd->dim_g = n + 2 * static_cast<long long>(rd->positive_roots.size());
  return rd;
}

}  // namespace

AlgebraId parse_algebra(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad algebra name: '" + name + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  Series s;
  switch (c) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    case 'E': s = Series::E; break;
    case 'F': s = Series::F; break;
    case 'G': s = Series::G; break;
    default: throw std::invalid_argument("unknown series in '" + name + "'");
  }
  int rank = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw std::invalid_argument("bad rank in '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
    if (rank > 64) throw std::invalid_argument("rank too large in '" + name + "'");
  }
  if (rank < 1) throw std::invalid_argument("bad rank in '" + name + "'");
  validate_rank(s, rank);
  return {s, rank};
}

std::string algebra_name(const AlgebraId& alg) {
  return std::string(1, series_letter(alg.series)) + std::to_string(alg.rank);
}

Weight parse_weight(const std::string& csv) {
  Weight w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight component '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad weight component '" + tok + "'");
    w.push_back(v);
  }
  if (w.empty()) throw std::invalid_argument("empty weight");
  return w;
}

std::string format_weight(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

const RootData& root_data(const AlgebraId& alg) {
  validate_rank(alg.series, alg.rank);
  static std::mutex mu;
  static std::map<AlgebraId, std::unique_ptr<RootData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(alg);
  if (it == cache.end()) it = cache.emplace(alg, build(alg)).first;
  return *it->second;
}

Rat inner(const RootData& rd, const Weight& x, const Weight& y) {
  check_rank(rd, x);
  check_rank(rd, y);
  Rat acc(0);
  for (int i = 0; i < rd.rank; ++i) {
    if (x[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < rd.rank; ++j)
      if (y[j] != 0) row += rd.form[i][j] * Rat(y[j]);
    acc += Rat(x[i]) * row;
  }
  return acc;
}

long long level_of(const RootData& rd, const Weight& lambda) {
  check_rank(rd, lambda);
  long long k = 0;
  for (int i = 0; i < rd.rank; ++i) k += static_cast<long long>(rd.comarks[i]) * lambda[i];
  return k;
}

long long weyl_dimension(const RootData& rd, const Weight& lambda) {
  check_rank(rd, lambda);
  // prod <lambda+rho, a> / <rho, a>; both sides scaled to integers by the
  // common denominator of the pairing vector of each root.
  BigInt num = 1, den = 1;
  for (const auto& r : rd.positive_roots) {
    long long scale = 1;
    for (const auto& p : r.pairing) scale = std::lcm(scale, p.denominator());
    long long top = 0, bot = 0;
    for (int i = 0; i < rd.rank; ++i) {
      long long pi = (r.pairing[i] * Rat(scale)).numerator();
      top += pi * (lambda[i] + 1);
      bot += pi;
    }
    num *= top;
    den *= bot;
  }
  BigInt g = boost::multiprecision::gcd(num, den);
  num /= g;
  den /= g;
  if (den != 1) throw std::logic_error("Weyl dimension not an integer");
  if (num > std::numeric_limits<long long>::max())
    throw std::overflow_error("dimension overflows long long");
  return static_cast<long long>(num);
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

}  // namespace wzw
