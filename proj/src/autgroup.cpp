#include "gdh/autgroup.hpp"

#include <numeric>
#include <stdexcept>

#include "gdh/arith.hpp"
#include "gdh/linalg.hpp"

namespace gdh::autgroup {

using lattice::ScaledLattice;
using linalg::zmat_mul;
using linalg::zmat_pow;

LatticeAut make_aut(const ScaledLattice& leech, ZMat matrix) {
  LatticeAut a;
  a.matrix = std::move(matrix);
  size_t n = a.matrix.size();
  ZMat p = a.matrix;
  long ord = 1;
  while (p != linalg::identity(n)) {
    p = zmat_mul(p, a.matrix);
    if (++ord > 200) throw std::domain_error("make_aut: order too large");
  }
  a.order = ord;
  for (const auto& row : leech.basis) {
    ZVec img(n, 0);
    for (size_t i = 0; i < n; ++i)
      if (row[i] != 0)
        for (size_t j = 0; j < n; ++j) img[j] += row[i] * a.matrix[i][j];
    if (!leech.contains(QVec(img.begin(), img.end())))
      throw std::domain_error("make_aut: matrix does not preserve the lattice");
  }
  return a;
}

LatticeAut identity_aut() {
  LatticeAut a;
  a.matrix = linalg::identity(24);
  a.order = 1;
  return a;
}

long CycleShape::trace_weight() const {
  long s = 0;
  for (auto [t, b] : exponents) s += t * b;
  return s;
}

CycleShape cycle_shape(const LatticeAut& nu) {
  long m = nu.order;
  size_t n = nu.matrix.size();
  std::map<long, Int> tr;
  ZMat p = linalg::identity(n);
  for (long k = 1; k <= m; ++k) {
    p = zmat_mul(p, nu.matrix);
    if (m % k == 0) {
      Int t = 0;
      for (size_t i = 0; i < n; ++i) t += p[i][i];
      tr[k] = t;
    }
  }
  // trace(nu^k) = sum_{t | (k,m)} t b_t, so t b_t = sum_{d|t} mu(t/d) tr(d)
  CycleShape shape;
  for (long t : arith::divisors(m)) {
    Int s = 0;
    for (long d : arith::divisors(t)) s += arith::mobius(t / d) * tr[d];
    if (mod_euclid(s, t) != 0) throw std::domain_error("cycle_shape: characteristic polynomial is not a product of cyclotomics");
    Int b = s / t;
    if (b != 0) shape.exponents[t] = b.get_si();
  }
  if (shape.trace_weight() != static_cast<long>(n))
    throw std::domain_error("cycle_shape: exponents do not sum to the rank");
  return shape;
}

Rat vacuum_anomaly(const CycleShape& shape) {
  Rat s = 0;
  for (auto [t, b] : shape.exponents) s += Rat(b) * (Rat(t) - make_rat(1, t));
  return s / 24;
}

bool order_doubling(const ScaledLattice& leech, const LatticeAut& nu) {
  if (nu.order % 2) return false;
  ZMat half = zmat_pow(nu.matrix, nu.order / 2);
  // (a, nu^{m/2} a) mod 2 is additive, so a basis check suffices
  for (const auto& row : leech.basis) {
    ZVec img(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0)
        for (size_t j = 0; j < row.size(); ++j) img[j] += row[i] * half[i][j];
    Rat ip = Rat(linalg::zdot(row, img)) * leech.scale;
    if (mod_euclid(to_int(ip), 2) == 1) return true;
  }
  return false;
}

// ---- standard lifts and their powers ----

struct OrbifoldCandidate::EtaData {
  ZMat nu_coeff;                  // nu^k in basis coordinates
  std::vector<std::vector<int>> c;  // polarization form on basis coeff vectors, mod 2
  std::vector<int> hvals;         // eta exponents on the basis
};

OrbifoldCandidate::OrbifoldCandidate(ScaledLattice leech, LatticeAut nu, QVec h_reference)
    : leech_(std::move(leech)), nu_(std::move(nu)) {
  size_t r = leech_.rank();
  gram_.assign(r, ZVec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      gram_[i][j] = to_int(Rat(linalg::zdot(leech_.basis[i], leech_.basis[j])) * leech_.scale);
  // nu in basis coordinates
  ZMat img = zmat_mul(leech_.basis, nu_.matrix);
  QMat qb = leech_.qbasis();
  nu_coeff_.assign(r, ZVec(r));
  for (size_t i = 0; i < r; ++i) {
    auto x = linalg::solve_left(qb, QVec(img[i].begin(), img[i].end()));
    if (!x) throw std::domain_error("candidate: nu does not preserve the lattice");
    for (size_t j = 0; j < r; ++j) nu_coeff_[i][j] = to_int((*x)[j]);
  }
  // project h into the nu-fixed subspace
  QVec hf = leech_.to_frame(h_reference);
  size_t n = leech_.ambient;
  QVec proj(n, Rat(0));
  ZMat p = linalg::identity(n);
  for (long t = 0; t < nu_.order; ++t) {
    for (size_t i = 0; i < n; ++i)
      if (hf[i] != 0)
        for (size_t j = 0; j < n; ++j) proj[j] += hf[i] * Rat(p[i][j]);
    p = zmat_mul(p, nu_.matrix);
  }
  for (auto& x : proj) x /= nu_.order;
  h_ = leech_.to_reference(proj);
}

CycleShape OrbifoldCandidate::shape_of_power(long c) const {
  LatticeAut powered;
  powered.matrix = zmat_pow(nu_.matrix, mod_long(c, nu_.order) == 0 ? nu_.order : mod_long(c, nu_.order));
  long g = std::gcd(c, nu_.order);
  powered.order = nu_.order / g;
  if (mod_long(c, nu_.order) == 0) powered.matrix = linalg::identity(leech_.ambient);
  return cycle_shape(powered);
}

const lattice::FixedProjection& OrbifoldCandidate::fixed_projection(long c) const {
  long key = std::gcd(c, nu_.order);
  std::lock_guard lock(mu_);
  auto it = fixproj_.find(key);
  if (it == fixproj_.end())
    it = fixproj_.emplace(key, lattice::fixed_and_projection(leech_, zmat_pow(nu_.matrix, key))).first;
  return it->second;
}

// quadratic function h on integer coefficient vectors:
// h(w) = sum w_i hvals_i + sum_{i<j} w_i w_j C_ij + sum_i C(w_i,2) C_ii  (mod 2)
int OrbifoldCandidate::h_value(const EtaData& e, const ZVec& w) const {
  size_t r = w.size();
  Int s = 0;
  for (size_t i = 0; i < r; ++i) {
    if (w[i] == 0) continue;
    s += w[i] * e.hvals[i];
    if (e.c[i][i]) s += w[i] * (w[i] - 1) / 2;
    for (size_t j = 0; j < i; ++j)
      if (w[j] != 0 && e.c[i][j]) s += w[i] * w[j];
  }
  return static_cast<int>(mod_euclid(s, 2).get_si());
}

const OrbifoldCandidate::EtaData& OrbifoldCandidate::eta_std(long k) const {
  long key = mod_long(k, nu_.order);
  {
    std::lock_guard lock(mu_);
    auto it = eta_.find(key);
    if (it != eta_.end()) return *it->second;
  }
  auto data = std::make_shared<EtaData>();
  size_t r = leech_.rank();
  data->nu_coeff = key == 0 ? linalg::identity(r) : zmat_pow(nu_coeff_, key);
  const ZMat& mk = data->nu_coeff;
  // B(a,b) = sum_{i>j} a_i b_j G_ij; the polarization is C(a,b) = B(a,b)+B(mk a, mk b)
  auto blt = [&](const ZVec& a, const ZVec& b) -> int {
    Int s = 0;
    for (size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < i; ++j)
        if (b[j] != 0) s += a[i] * b[j] * gram_[i][j];
    }
    return static_cast<int>(mod_euclid(s, 2).get_si());
  };
  data->c.assign(r, std::vector<int>(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      ZVec ei(r, 0), ej(r, 0);
      ei[i] = 1;
      ej[j] = 1;
      data->c[i][j] = (blt(ei, ej) + blt(mk[i], mk[j])) & 1;
    }
  ZMat km = mk;
  for (size_t i = 0; i < r; ++i) km[i][i] -= 1;
  auto hk = linalg::hnf_with_kernel(km);
  bool solved = false;
  if (key != 1 && key != 0) {
    // prefer the power chain of the chosen lift of nu when it is already a
    // standard lift of nu^key; powers then close without a defect
    const EtaData& e1 = eta_std(1);
    std::vector<int> acc(r, 0);
    ZMat mt = linalg::identity(r);
    for (long t = 0; t < key; ++t) {
      for (size_t j = 0; j < r; ++j) acc[j] ^= h_value(e1, mt[j]);
      mt = zmat_mul(mt, nu_coeff_);
    }
    data->hvals = acc;
    bool standard = true;
    for (const auto& w : hk.kernel)
      if (h_value(*data, w)) standard = false;
    solved = standard;
  }
  if (!solved) {
    // eta = +1 on the fixed sublattice: affine F2 system for the basis values
    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;
    EtaData probe = *data;
    probe.hvals.assign(r, 0);
    for (const auto& w : hk.kernel) {
      std::vector<int> row(r);
      for (size_t i = 0; i < r; ++i) row[i] = static_cast<int>(mod_euclid(w[i], 2).get_si());
      rows.push_back(std::move(row));
      rhs.push_back(h_value(probe, w));  // quadratic part only
    }
    if (rows.empty()) {
      data->hvals.assign(r, 0);
    } else {
      auto sol = linalg::solve_f2(rows, rhs);
      if (!sol) throw std::runtime_error("eta_std: standard-lift system unsolvable");
      sol->resize(r, 0);
      data->hvals = *sol;
    }
  }
  std::lock_guard lock(mu_);
  auto [pos, inserted] = eta_.emplace(key, std::move(data));
  return *pos->second;
}

QVec OrbifoldCandidate::lift_power_shift(long k) const {
  {
    std::lock_guard lock(mu_);
    auto it = fk_.find(k);
    if (it != fk_.end()) return it->second;
  }
  size_t r = leech_.rank();
  const EtaData& e1 = eta_std(1);
  // eta_k(b_j) = sum_{t<k} eta(nu^t b_j)
  std::vector<int> acc(r, 0);
  ZMat mt = linalg::identity(r);
  for (long t = 0; t < k; ++t) {
    for (size_t j = 0; j < r; ++j) acc[j] ^= h_value(e1, mt[j]);
    mt = zmat_mul(mt, nu_coeff_);
  }
  const EtaData& ek = eta_std(k);
  std::vector<int> target(r);
  for (size_t j = 0; j < r; ++j) target[j] = acc[j] ^ ek.hvals[j];
  // find w with (w, b_j) = target_j mod 2; then f_k = w/2
  std::vector<std::vector<int>> rows(r, std::vector<int>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) rows[j][i] = static_cast<int>(mod_euclid(gram_[i][j], 2).get_si());
  auto sol = linalg::solve_f2(rows, target);
  if (!sol) throw std::runtime_error("lift_power_shift: dual system unsolvable");
  QVec fk(leech_.ambient, Rat(0));
  for (size_t i = 0; i < r; ++i)
    if ((*sol)[i])
      for (size_t j = 0; j < leech_.ambient; ++j) fk[j] += make_rat(leech_.basis[i][j], 2);
  QVec fk_ref = leech_.to_reference(fk);
  std::lock_guard lock(mu_);
  fk_.emplace(k, fk_ref);
  return fk_ref;
}

int OrbifoldCandidate::eta_on(const QVec& reference_vec) const {
  auto x = leech_.coords_in_span(leech_.to_frame(reference_vec));
  if (!x) throw std::domain_error("eta_on: vector outside the lattice span");
  ZVec w(x->size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = to_int((*x)[i]);
  return h_value(eta_std(1), w) ? -1 : 1;
}

long OrbifoldCandidate::order() const {
  {
    std::lock_guard lock(mu_);
    if (order_) return order_;
  }
  long m = nu_.order;
  for (long k = m;; k += m) {
    QVec v = lift_power_shift(k);
    for (size_t j = 0; j < v.size(); ++j) v[j] += Rat(k) * h_[j];
    if (leech_.contains(leech_.to_frame(v))) {
      std::lock_guard lock(mu_);
      order_ = k;
      return k;
    }
    if (k > 400) throw std::runtime_error("order: runaway candidate order");
  }
}

Rat OrbifoldCandidate::twisted_conformal_weight(long c) const {
  if (c < 1) throw std::domain_error("twisted_conformal_weight: power must be positive");
  Rat rho_nu = vacuum_anomaly(shape_of_power(c));
  const auto& fp = fixed_projection(c);
  QVec shift = lift_power_shift(c);
  for (size_t j = 0; j < shift.size(); ++j) shift[j] += Rat(c) * h_[j];
  // project onto the nu^c-fixed subspace
  long key = std::gcd(c, nu_.order);
  ZMat a = zmat_pow(nu_.matrix, key);
  long mc = nu_.order / key;
  size_t n = leech_.ambient;
  QVec proj(n, Rat(0));
  ZMat p = linalg::identity(n);
  for (long t = 0; t < mc; ++t) {
    for (size_t i = 0; i < n; ++i)
      if (shift[i] != 0)
        for (size_t j = 0; j < n; ++j) proj[j] += shift[i] * Rat(p[i][j]);
    p = zmat_mul(p, a);
  }
  for (auto& x : proj) x /= mc;
  if (fp.projected.rank() == 0) return rho_nu;
  Rat mn = lattice::coset_min_norm(fp.projected, fp.projected.to_frame(proj));
  return rho_nu + mn / 2;
}

long OrbifoldCandidate::type() const {
  long n = order();
  Rat t = Rat(n) * Rat(n) * twisted_conformal_weight(1);
  if (!is_integer(t)) throw std::runtime_error("type: n^2 rho(V(g)) is not integral");
  return mod_euclid(to_int(t), n).get_si();
}

}  // namespace gdh::autgroup
