#include "gdh/kacvsf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gdh/arith.hpp"

namespace gdh::kacvsf {

Rat SimpleAlgebra::form(const QVec& u, const QVec& v) const {
  Rat s = 0;
  for (long i = 0; i < rank; ++i) {
    if (u[i] == 0) continue;
    for (long j = 0; j < rank; ++j)
      if (v[j] != 0 && cartan[i][j] != 0) s += u[i] * v[j] * root_norm_half[i] * cartan[i][j];
  }
  return s;
}

QVec SimpleAlgebra::lambda_of(const std::vector<long>& s, long n) const {
  // solve sum_j (a_i, a_j) x_j = s_i / n
  long l = rank;
  QMat a(l, QVec(l + 1));
  for (long i = 0; i < l; ++i) {
    for (long j = 0; j < l; ++j) a[i][j] = root_norm_half[i] * cartan[i][j];
    a[i][l] = make_rat(s[i + 1], n);
  }
  for (long c = 0; c < l; ++c) {
    long piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[c], a[piv]);
    Rat pv = a[c][c];
    for (auto& x : a[c]) x /= pv;
    for (long r = 0; r < l; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (long k = c; k <= l; ++k) a[r][k] -= f * a[c][k];
    }
  }
  QVec x(l);
  for (long i = 0; i < l; ++i) x[i] = a[i][l];
  return x;
}

static std::vector<std::vector<long>> cartan_matrix(char family, long l) {
  std::vector<std::vector<long>> a(l, std::vector<long>(l, 0));
  for (long i = 0; i < l; ++i) a[i][i] = 2;
  auto edge = [&](long i, long j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case 'A':
      for (long i = 0; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case 'B':
      if (l < 2) throw std::domain_error("B_l needs rank >= 2");
      for (long i = 0; i + 1 < l; ++i) edge(i, i + 1);
      a[l - 2][l - 1] = -1;
      a[l - 1][l - 2] = -2;
      break;
    case 'C':
      if (l < 3) throw std::domain_error("C_l needs rank >= 3");
      for (long i = 0; i + 1 < l; ++i) edge(i, i + 1);
      a[l - 2][l - 1] = -2;
      a[l - 1][l - 2] = -1;
      break;
    case 'D':
      if (l < 4) throw std::domain_error("D_l needs rank >= 4");
      for (long i = 0; i + 2 < l; ++i) edge(i, i + 1);
      edge(l - 3, l - 1);
      break;
    case 'E': {
      if (l < 6 || l > 8) throw std::domain_error("E_l needs rank 6..8");
      // Bourbaki: chain a1-a3-a4-a5-..., a2 attached to a4 (0-based: 1 to 3)
      edge(0, 2);
      edge(2, 3);
      edge(1, 3);
      for (long i = 3; i + 1 < l; ++i) edge(i, i + 1);
      break;
    }
    case 'F':
      if (l != 4) throw std::domain_error("F needs rank 4");
      edge(0, 1);
      edge(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':
      if (l != 2) throw std::domain_error("G needs rank 2");
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      throw std::domain_error("unknown family");
  }
  return a;
}

SimpleAlgebra build_algebra(char family, long rank) {
  if (rank < 1 || rank > 24) throw std::domain_error("build_algebra: rank out of range");
  SimpleAlgebra g;
  g.family = family;
  g.rank = rank;
  g.cartan = cartan_matrix(family, rank);
  // root norms from d_i A_ij = d_j A_ji, longest normalized to 1
  g.root_norm_half.assign(rank, Rat(0));
  g.root_norm_half[0] = 1;
  std::vector<long> todo{0};
  while (!todo.empty()) {
    long i = todo.back();
    todo.pop_back();
    for (long j = 0; j < rank; ++j) {
      if (g.cartan[i][j] == 0 || j == i || g.root_norm_half[j] != 0) continue;
      g.root_norm_half[j] = g.root_norm_half[i] * Rat(g.cartan[i][j]) / Rat(g.cartan[j][i]);
      todo.push_back(j);
    }
  }
  Rat dmax = *std::max_element(g.root_norm_half.begin(), g.root_norm_half.end());
  for (auto& d : g.root_norm_half) d /= dmax;
  Rat dmin = *std::min_element(g.root_norm_half.begin(), g.root_norm_half.end());
  g.lacing = to_int(1 / dmin).get_si();
  // close the simple roots under simple reflections
  std::set<std::vector<long>> seen;
  std::vector<ZVec> frontier;
  for (long i = 0; i < rank; ++i) {
    ZVec r(rank, 0);
    r[i] = 1;
    frontier.push_back(r);
    std::vector<long> key(rank, 0);
    key[i] = 1;
    seen.insert(key);
    key[i] = -1;
    seen.insert(key);
    ZVec neg(rank, 0);
    neg[i] = -1;
    frontier.push_back(neg);
  }
  while (!frontier.empty()) {
    ZVec r = frontier.back();
    frontier.pop_back();
    g.roots.push_back(r);
    for (long i = 0; i < rank; ++i) {
      Int pairing = 0;
      for (long j = 0; j < rank; ++j) pairing += g.cartan[i][j] * r[j];
      if (pairing == 0) continue;
      ZVec nr = r;
      nr[i] -= pairing;
      std::vector<long> key(rank);
      for (long j = 0; j < rank; ++j) key[j] = nr[j].get_si();
      if (seen.insert(key).second) frontier.push_back(nr);
    }
  }
  // highest root and marks
  const ZVec* theta = nullptr;
  Int best = -1;
  for (const auto& r : g.roots) {
    Int h = 0;
    for (const auto& c : r) h += c;
    if (h > best) {
      best = h;
      theta = &r;
    }
  }
  g.marks.assign(theta->begin(), theta->end());
  Rat hd = 1;
  for (long i = 0; i < rank; ++i) hd += Rat(g.marks[i]) * g.root_norm_half[i];
  g.dual_coxeter = to_int(hd).get_si();
  // rho: (a_i, rho) = d_i
  std::vector<long> ones(rank + 1, 0);
  for (long i = 1; i <= rank; ++i) ones[i] = 1;
  {
    QMat a(rank, QVec(rank + 1));
    for (long i = 0; i < rank; ++i) {
      for (long j = 0; j < rank; ++j) a[i][j] = g.root_norm_half[i] * g.cartan[i][j];
      a[i][rank] = g.root_norm_half[i];
    }
    for (long c = 0; c < rank; ++c) {
      long piv = c;
      while (a[piv][c] == 0) ++piv;
      std::swap(a[c], a[piv]);
      Rat pv = a[c][c];
      for (auto& x : a[c]) x /= pv;
      for (long r = 0; r < rank; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rat f = a[r][c];
        for (long k = c; k <= rank; ++k) a[r][k] -= f * a[c][k];
      }
    }
    g.weyl_vector.assign(rank, Rat(0));
    for (long i = 0; i < rank; ++i) g.weyl_vector[i] = a[i][rank];
  }
  return g;
}

SimpleAlgebra build_algebra(const std::string& label) {
  if (label.size() < 2) throw std::domain_error("bad algebra label");
  return build_algebra(label[0], std::stol(label.substr(1)));
}

KacCoords make_coords(const SimpleAlgebra& g, std::vector<long> s) {
  if (static_cast<long>(s.size()) != g.rank + 1) throw std::domain_error("KacCoords: need rank+1 entries");
  long gc = 0, n = s[0];
  for (long x : s)
    if (x < 0) throw std::domain_error("KacCoords: entries must be nonnegative");
  for (long i = 0; i <= g.rank; ++i) gc = std::gcd(gc, s[i]);
  if (gc != 1) throw std::domain_error("KacCoords: entries must be coprime");
  for (long i = 1; i <= g.rank; ++i) n += g.marks[i - 1].get_si() * s[i];
  return {std::move(s), n};
}

std::vector<long> eigenspace_dims(const SimpleAlgebra& g, const KacCoords& s) {
  std::vector<long> dims(s.n, 0);
  dims[0] = g.rank;
  for (const auto& r : g.roots) {
    Int val = 0;
    for (long i = 0; i < g.rank; ++i) val += r[i] * s.s[i + 1];
    dims[mod_euclid(val, s.n).get_si()] += 1;
  }
  return dims;
}

VsfResult b_and_vsf(const SimpleAlgebra& g, const KacCoords& s) {
  auto dims = eigenspace_dims(g, s);
  VsfResult r;
  r.b = 0;
  for (long j = 0; j < s.n; ++j)
    if (dims[j]) r.b += arith::bernoulli2(make_rat(j, s.n)) * dims[j];
  r.b /= 4;
  QVec lam = g.lambda_of(s.s, s.n);
  QVec w(lam);
  for (long i = 0; i < g.rank; ++i) w[i] -= g.weyl_vector[i] / g.dual_coxeter;
  r.lhs = make_rat(g.dual_coxeter, 2) * g.form(w, w);
  return r;
}

KacCoords power_coords(const SimpleAlgebra& g, const KacCoords& s, long i) {
  if (std::gcd(i, s.n) != 1) throw std::domain_error("power_coords: exponent not coprime to the order");
  QVec x = g.lambda_of(s.s, s.n);
  for (auto& c : x) c *= i;
  QVec theta(g.rank);
  for (long k = 0; k < g.rank; ++k) theta[k] = Rat(g.marks[k]);
  // alcove coordinates: s0 = 1 - (theta, x), si = (alpha_i, x); reflect the
  // lowest-index violated wall first
  while (true) {
    long wall = -1;
    Rat viol;
    Rat tx = g.form(theta, x);
    if (tx > 1) wall = 0;
    if (wall < 0) {
      for (long k = 0; k < g.rank; ++k) {
        QVec e(g.rank, Rat(0));
        e[k] = 1;
        Rat ax = g.form(e, x);
        if (ax < 0) {
          wall = k + 1;
          break;
        }
      }
    }
    if (wall < 0) break;
    if (wall == 0) {
      // affine reflection: x + (1 - (theta,x)) theta  (theta is its own coroot)
      Rat f = 1 - tx;
      for (long k = 0; k < g.rank; ++k) x[k] += f * theta[k];
    } else {
      long k = wall - 1;
      QVec e(g.rank, Rat(0));
      e[k] = 1;
      Rat coroot_pairing = g.form(e, x) / g.root_norm_half[k];
      x[k] -= coroot_pairing;
    }
  }
  std::vector<long> sp(g.rank + 1, 0);
  Rat s0 = 1;
  for (long k = 0; k < g.rank; ++k) {
    QVec e(g.rank, Rat(0));
    e[k] = 1;
    Rat v = g.form(e, x) * s.n;
    if (!is_integer(v)) throw std::runtime_error("power_coords: non-integral alcove coordinate");
    sp[k + 1] = to_int(v).get_si();
    s0 -= Rat(g.marks[k]) * g.form(e, x);
  }
  Rat v0 = s0 * s.n;
  if (!is_integer(v0)) throw std::runtime_error("power_coords: non-integral affine coordinate");
  sp[0] = to_int(v0).get_si();
  return make_coords(g, sp);
}

AveragedVsfResult averaged_vsf(const SimpleAlgebra& g, const KacCoords& s) {
  AveragedVsfResult r;
  long n = s.n;
  r.a = 0;
  long count = 0;
  for (long i = 1; i <= n; ++i) {
    if (std::gcd(i, n) != 1) continue;
    r.a += b_and_vsf(g, power_coords(g, s, i)).b;
    ++count;
  }
  r.a /= count;
  auto dims = eigenspace_dims(g, s);
  auto tables = arith::c_xi_coeffs(n);
  r.rhs = 0;
  for (long m : arith::divisors(n)) {
    long fixed = 0;
    for (long t = 0; t < m; ++t) fixed += dims[t * (n / m)];
    r.rhs += tables.c.at(m) * fixed;
  }
  r.rhs /= Rat(24) * n;
  return r;
}

KacCoords sigma_rho_coords(const SimpleAlgebra& g) {
  long n = g.lacing * g.dual_coxeter;
  std::vector<long> s(g.rank + 1, 0);
  long used = 0;
  for (long i = 0; i < g.rank; ++i) {
    Rat si = Rat(g.lacing) * g.root_norm_half[i];
    s[i + 1] = to_int(si).get_si();
    used += g.marks[i].get_si() * s[i + 1];
  }
  s[0] = n - used;
  return make_coords(g, s);
}

std::vector<KacCoords> coords_with_order(const SimpleAlgebra& g, long n) {
  std::vector<KacCoords> out;
  std::vector<long> marks{1};
  for (const auto& m : g.marks) marks.push_back(m.get_si());
  std::vector<long> s(g.rank + 1, 0);
  std::function<void(long, long)> rec = [&](long idx, long rem) {
    if (idx == g.rank) {
      if (rem % marks[idx]) return;
      s[idx] = rem / marks[idx];
      long gc = 0;
      for (long x : s) gc = std::gcd(gc, x);
      if (gc == 1) out.push_back(make_coords(g, s));
      return;
    }
    for (long v = 0; v * marks[idx] <= rem; ++v) {
      s[idx] = v;
      rec(idx + 1, rem - v * marks[idx]);
    }
  };
  rec(0, n);
  return out;
}

}  // namespace gdh::kacvsf
