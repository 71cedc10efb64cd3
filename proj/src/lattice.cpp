#include "gdh/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gdh/linalg.hpp"

namespace gdh::lattice {

using linalg::qdot;
using linalg::zdot;

QMat ScaledLattice::qbasis() const { return linalg::to_qmat(basis); }

QMat ScaledLattice::gram() const {
  size_t r = rank();
  QMat g(r, QVec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j <= i; ++j) {
      g[i][j] = Rat(zdot(basis[i], basis[j])) * scale;
      g[j][i] = g[i][j];
    }
  return g;
}

Rat ScaledLattice::gram_det() const {
  size_t r = rank();
  if (r == 0) return 1;
  ZMat g(r, ZVec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) g[i][j] = zdot(basis[i], basis[j]);
  Rat s = 1;
  for (size_t i = 0; i < r; ++i) s *= scale;
  return Rat(linalg::det(g)) * s;
}

bool ScaledLattice::is_integral() const {
  for (const auto& row : gram())
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  return true;
}

bool ScaledLattice::is_even() const {
  if (!is_integral()) return false;
  auto g = gram();
  for (size_t i = 0; i < rank(); ++i)
    if (mod_euclid(to_int(g[i][i]), 2) != 0) return false;
  return true;
}

std::optional<QVec> ScaledLattice::coords_in_span(const QVec& v) const {
  return linalg::solve_left(qbasis(), v);
}

bool ScaledLattice::contains(const QVec& v) const {
  auto x = coords_in_span(v);
  if (!x) return false;
  for (const auto& c : *x)
    if (!is_integer(c)) return false;
  return true;
}

Rat ScaledLattice::norm(const QVec& v) const { return qdot(v, v) * scale; }

QVec ScaledLattice::to_frame(const QVec& reference) const {
  QVec v(reference);
  for (auto& x : v) x *= Rat(frame_den);
  return v;
}

QVec ScaledLattice::to_reference(const QVec& frame_vec) const {
  QVec v(frame_vec);
  for (auto& x : v) x /= Rat(frame_den);
  return v;
}

ScaledLattice make_lattice(ZMat basis, Rat scale, size_t ambient, Int frame_den) {
  ScaledLattice l;
  l.basis = std::move(basis);
  l.scale = std::move(scale);
  l.frame_den = std::move(frame_den);
  l.ambient = ambient;
  return l;
}

ScaledLattice make_lattice_rational(const QMat& rows, const Rat& scale, size_t ambient,
                                    const Int& frame_den) {
  Int mu = 1;
  for (const auto& row : rows)
    for (const auto& x : row) mpz_lcm(mu.get_mpz_t(), mu.get_mpz_t(), x.get_den().get_mpz_t());
  ZMat zrows;
  zrows.reserve(rows.size());
  for (const auto& row : rows) {
    ZVec zr(row.size());
    for (size_t j = 0; j < row.size(); ++j) zr[j] = to_int(row[j] * Rat(mu));
    zrows.push_back(std::move(zr));
  }
  ZMat basis = linalg::hnf(std::move(zrows));
  if (!basis.empty()) basis = linalg::lll(std::move(basis));
  return make_lattice(std::move(basis), scale / Rat(mu * mu), ambient, frame_den * mu);
}

ScaledLattice dual_lattice(const ScaledLattice& l) {
  size_t r = l.rank();
  if (r == 0) return l;
  QMat b = l.qbasis();
  if (linalg::qrank(b) != r) throw std::domain_error("dual_lattice: rank-deficient basis");
  // dual rows solve (d_i, b_j) = delta_ij, i.e. D (B B^T scale) = I
  QMat g = l.gram();
  size_t n = r;
  QMat sys(n, QVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) sys[i][j] = g[i][j];
    sys[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (sys[piv][c] == 0) ++piv;
    std::swap(sys[c], sys[piv]);
    Rat pv = sys[c][c];
    for (auto& x : sys[c]) x /= pv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || sys[i][c] == 0) continue;
      Rat f = sys[i][c];
      for (size_t k = 0; k < 2 * n; ++k) sys[i][k] -= f * sys[c][k];
    }
  }
  QMat duals(n, QVec(l.ambient, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (sys[i][n + j] == 0) continue;
      for (size_t k = 0; k < l.ambient; ++k) duals[i][k] += sys[i][n + j] * Rat(l.basis[j][k]);
    }
  return make_lattice_rational(duals, l.scale, l.ambient, l.frame_den);
}

bool same_lattice(const ScaledLattice& a, const ScaledLattice& b) {
  if (a.rank() != b.rank() || a.ambient != b.ambient) return false;
  if (a.scale * Rat(a.frame_den * a.frame_den) != b.scale * Rat(b.frame_den * b.frame_den))
    return false;
  for (const auto& row : a.basis) {
    QVec ref = a.to_reference(QVec(row.begin(), row.end()));
    if (!b.contains(b.to_frame(ref))) return false;
  }
  for (const auto& row : b.basis) {
    QVec ref = b.to_reference(QVec(row.begin(), row.end()));
    if (!a.contains(a.to_frame(ref))) return false;
  }
  return true;
}

FixedProjection fixed_and_projection(const ScaledLattice& l, const ZMat& a) {
  size_t n = l.ambient;
  // the automorphism must preserve the form: a a^T = 1 on the ambient dot
  ZMat aat = linalg::zmat_mul(a, [&] {
    ZMat t(n, ZVec(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) t[i][j] = a[j][i];
    return t;
  }());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (aat[i][j] != (i == j ? 1 : 0))
        throw std::domain_error("fixed_and_projection: matrix does not preserve the form");
  long m = 1;
  {
    ZMat p = a;
    while (p != linalg::identity(n)) {
      p = linalg::zmat_mul(p, a);
      if (++m > 1000) throw std::domain_error("fixed_and_projection: infinite order");
    }
  }
  // fixed: saturated left kernel of B (a - 1)
  ZMat am = a;
  for (size_t i = 0; i < n; ++i) am[i][i] -= 1;
  ZMat k = linalg::zmat_mul(l.basis, am);
  auto hk = linalg::hnf_with_kernel(k);
  ZMat fixed_rows;
  for (const auto& y : hk.kernel) {
    ZVec row(n, 0);
    for (size_t i = 0; i < l.rank(); ++i)
      for (size_t j = 0; j < n; ++j) row[j] += y[i] * l.basis[i][j];
    fixed_rows.push_back(std::move(row));
  }
  FixedProjection fp;
  ZMat fb = linalg::hnf(std::move(fixed_rows));
  if (!fb.empty()) fb = linalg::lll(std::move(fb));
  fp.fixed = make_lattice(std::move(fb), l.scale, n, l.frame_den);
  // projection pi = (1/m) sum a^i applied to the basis rows
  ZMat psum(n, ZVec(n, 0));
  ZMat p = linalg::identity(n);
  for (long i = 0; i < m; ++i) {
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) psum[r][c] += p[r][c];
    p = linalg::zmat_mul(p, a);
  }
  ZMat bp = linalg::zmat_mul(l.basis, psum);
  QMat proj_rows(l.rank(), QVec(n));
  for (size_t i = 0; i < l.rank(); ++i)
    for (size_t j = 0; j < n; ++j) proj_rows[i][j] = make_rat(bp[i][j], m);
  fp.projected = make_lattice_rational(proj_rows, l.scale, n, l.frame_den);
  return fp;
}

namespace {

// depth-first enumeration over reduced per-level Gram-Schmidt denominators.
// Coefficients, offsets and the ambient accumulator are machine integers with
// overflow guards; the remaining bound is carried exactly as an mpz over a
// fixed common denominator M.
struct Enumerator {
  const std::vector<std::vector<long>>& b;  // reduced basis rows (small)
  size_t r;
  size_t ambient;
  Rat scale;
  long den;                                  // center denominator
  std::vector<long> cden;                    // center * den
  std::vector<long> cdenk;                   // center * den * D_k
  const std::vector<std::vector<long>>& lam; // mu[k][j] D_k, j > k (small)
  std::vector<long> step;                    // D_k * den (small)
  const std::vector<Int>& w;                 // q_k M / (qden_k D_k^2 den^2), den-free part
  Int mtotal;                                // M
  Int total;                                 // floor(bound M)
  std::vector<long> x;
  std::vector<long> yden;  // (x_j + center_j) * den
  std::vector<long> amb;   // running sum of x_j b_j
  const EnumVisitor* visit;
  std::vector<Int> rem_stack, cap_stack, tt_stack;
  ZVec xz, ambz;

  static long checked_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("enumeration overflow");
    return r;
  }
  static long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("enumeration overflow");
    return r;
  }

  void run() {
    rem_stack.assign(r + 1, 0);
    cap_stack.assign(r, 0);
    tt_stack.assign(r, 0);
    xz.assign(r, 0);
    ambz.assign(ambient, 0);
    rem_stack[r] = total;
    descend(static_cast<long>(r) - 1);
  }

  void descend(long k) {
    const Int& rem = rem_stack[k + 1];
    if (k < 0) {
      for (size_t j = 0; j < r; ++j) xz[j] = x[j];
      for (size_t j = 0; j < ambient; ++j) ambz[j] = amb[j];
      (*visit)(xz, ambz, Rat(make_rat(total - rem, mtotal) * scale));
      return;
    }
    // T = t_k D_k den = xi step_k + off; the level contribution is T^2 w_k / M
    long off = cdenk[k];
    for (size_t j = k + 1; j < r; ++j)
      if (lam[k][j] != 0 && yden[j] != 0) off = checked_add(off, checked_mul(lam[k][j], yden[j]));
    Int& cap = cap_stack[k];
    mpz_fdiv_q(cap.get_mpz_t(), rem.get_mpz_t(), w[k].get_mpz_t());
    Int s;
    mpz_sqrt(s.get_mpz_t(), cap.get_mpz_t());
    if (!s.fits_slong_p()) throw std::overflow_error("enumeration overflow");
    long sl = s.get_si();
    long lo = lfloor(-sl - off, step[k]), hi = lfloor(sl - off + step[k] - 1, step[k]);
    long t = checked_add(checked_mul(lo, step[k]), off);
    Int& tt = tt_stack[k];
    for (long xi = lo; xi <= hi; ++xi, t += step[k]) {
      tt = t;
      tt *= t;
      if (tt > cap) continue;
      x[k] = xi;
      yden[k] = checked_add(checked_mul(xi, den), cden[k]);
      if (xi != 0)
        for (size_t j = 0; j < ambient; ++j) amb[j] = checked_add(amb[j], checked_mul(xi, b[k][j]));
      tt *= w[k];
      rem_stack[k] = rem - tt;
      descend(k - 1);
      if (xi != 0)
        for (size_t j = 0; j < ambient; ++j) amb[j] -= xi * b[k][j];
    }
    x[k] = 0;
    yden[k] = 0;
  }

  static long lfloor(long a, long b) {  // floor division, b > 0
    long q = a / b, rr = a % b;
    return rr != 0 && rr < 0 ? q - 1 : q;
  }
};

void cholesky(const QMat& g, QVec& q, QMat& mu) {
  size_t n = g.size();
  QMat a = g;
  q.assign(n, Rat(0));
  mu.assign(n, QVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    q[i] = a[i][i];
    if (q[i] <= 0) throw std::runtime_error("cholesky: form not positive definite");
    for (size_t j = i + 1; j < n; ++j) mu[i][j] = a[i][j] / q[i];
    for (size_t k = i + 1; k < n; ++k)
      for (size_t l = k; l < n; ++l) {
        a[k][l] -= a[i][k] * a[i][l] / q[i];
        a[l][k] = a[k][l];
      }
  }
}

}  // namespace

EnumContext make_enum_context(const ScaledLattice& l) {
  EnumContext ctx;
  ctx.scale = l.scale;
  ctx.r = l.rank();
  ctx.ambient = l.ambient;
  if (ctx.r == 0) return ctx;
  ctx.red = linalg::lll(l.basis);
  ctx.redq = linalg::to_qmat(ctx.red);
  size_t r = ctx.r;
  QMat g(r, QVec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = Rat(zdot(ctx.red[i], ctx.red[j]));
  QVec q;
  QMat mu;
  cholesky(g, q, mu);
  // per-level reduced denominators keep the sibling loop on machine integers
  auto fits = [](const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("enumeration setup overflow");
    return v.get_si();
  };
  ctx.red_l.assign(r, std::vector<long>(ctx.ambient, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < ctx.ambient; ++j) ctx.red_l[i][j] = fits(ctx.red[i][j]);
  ctx.lev_den.assign(r, 1);
  ctx.lam.assign(r, std::vector<long>(r, 0));
  ctx.mbase = 1;
  for (size_t k = 0; k < r; ++k) {
    Int dk = 1;
    for (size_t j = k + 1; j < r; ++j)
      mpz_lcm(dk.get_mpz_t(), dk.get_mpz_t(), mu[k][j].get_den().get_mpz_t());
    ctx.lev_den[k] = fits(dk);
    for (size_t j = k + 1; j < r; ++j) ctx.lam[k][j] = fits(to_int(mu[k][j] * Rat(dk)));
    Int lev = q[k].get_den() * dk * dk;
    mpz_lcm(ctx.mbase.get_mpz_t(), ctx.mbase.get_mpz_t(), lev.get_mpz_t());
  }
  ctx.wbase.assign(r, 0);
  for (size_t k = 0; k < r; ++k)
    ctx.wbase[k] = q[k].get_num() *
                   (ctx.mbase / (q[k].get_den() * Rat(ctx.lev_den[k] * ctx.lev_den[k]).get_num()));
  return ctx;
}

void enumerate_visit(const EnumContext& ctx, const QVec& shift, const Rat& bound,
                     const EnumVisitor& visit) {
  if (bound < 0) throw std::domain_error("enumerate_by_norm: negative bound");
  if (ctx.r == 0) {
    for (const auto& s : shift)
      if (s != 0) throw std::domain_error("enumerate_by_norm: shift outside the span");
    visit(ZVec{}, ZVec(ctx.ambient, 0), Rat(0));
    return;
  }
  auto center = linalg::solve_left(ctx.redq, shift);
  if (!center) throw std::domain_error("enumerate_by_norm: shift outside the span");
  size_t r = ctx.r;
  auto fits = [](const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("enumeration setup overflow");
    return v.get_si();
  };
  Enumerator e{ctx.red_l, r, ctx.ambient, ctx.scale, 1, {}, {}, ctx.lam, {}, ctx.wbase};
  Int den = 1;
  for (const auto& c : *center) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  e.den = fits(den);
  e.cden.assign(r, 0);
  e.cdenk.assign(r, 0);
  e.step.assign(r, 0);
  for (size_t k = 0; k < r; ++k) {
    e.cden[k] = fits(to_int((*center)[k] * Rat(e.den)));
    e.cdenk[k] = Enumerator::checked_mul(e.cden[k], ctx.lev_den[k]);
    e.step[k] = Enumerator::checked_mul(ctx.lev_den[k], e.den);
  }
  e.mtotal = ctx.mbase * den * den;
  e.total = floor_rat(bound / ctx.scale * Rat(e.mtotal));
  e.x.assign(r, 0);
  e.yden.assign(r, 0);
  e.amb.assign(ctx.ambient, 0);
  e.visit = &visit;
  if (e.total >= 0) e.run();
}

void enumerate_visit(const ScaledLattice& l, const QVec& shift, const Rat& bound,
                     const EnumVisitor& visit) {
  enumerate_visit(make_enum_context(l), shift, bound, visit);
}

std::vector<QVec> enumerate_by_norm(const ScaledLattice& l, const QVec& shift, const Rat& bound) {
  std::vector<QVec> out;
  enumerate_visit(l, shift, bound, [&](const ZVec&, const ZVec& amb, const Rat&) {
    QVec v(shift);
    for (size_t j = 0; j < v.size(); ++j) v[j] += Rat(amb[j]);
    out.push_back(std::move(v));
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// branch-and-bound closest-vector search: the bound shrinks to the best
// nonzero norm found so far
struct MinNormSearch {
  const QVec& center;
  const QVec& q;
  const QMat& mu;
  size_t r;
  QVec y;
  Rat best;  // strict upper bound, shrinks to the minimum squared length

  void descend(long k, const Rat& acc) {
    if (k < 0) {
      if (acc != 0 && acc < best) best = acc;
      return;
    }
    Rat off = center[k];
    for (size_t j = k + 1; j < r; ++j)
      if (mu[k][j] != 0 && y[j] != 0) off += mu[k][j] * y[j];
    Int x0 = round_rat(-off);
    // zig-zag outward from the rounded center; q_k t^2 grows monotonically
    for (long dir = 0; dir < 2; ++dir) {
      for (Int xi = x0 + (dir ? -1 : 0);; dir ? --xi : ++xi) {
        Rat t = Rat(xi) + off;
        Rat tt = acc + q[k] * t * t;
        if (tt >= best) break;
        y[k] = Rat(xi) + center[k];
        descend(k - 1, tt);
      }
    }
    y[k] = 0;
  }
};

}  // namespace

Rat coset_min_norm(const ScaledLattice& l, const QVec& shift) {
  if (l.rank() == 0) return 0;
  if (l.contains(shift)) return 0;
  ZMat red = linalg::lll(l.basis);
  QMat b = linalg::to_qmat(red);
  auto center = linalg::solve_left(b, shift);
  if (!center) throw std::domain_error("coset_min_norm: shift outside the span");
  size_t r = l.rank();
  QMat g(r, QVec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = Rat(zdot(red[i], red[j]));
  QVec q;
  QMat mu;
  cholesky(g, q, mu);
  // seed the bound with the Babai nearest-plane candidate (nonzero since the
  // coset misses the lattice)
  QVec y(r, Rat(0));
  Rat babai = 0;
  for (long k = static_cast<long>(r) - 1; k >= 0; --k) {
    Rat off = (*center)[k];
    for (size_t j = k + 1; j < r; ++j) off += mu[k][j] * y[j];
    Int xk = round_rat(-off);
    Rat t = Rat(xk) + off;
    y[k] = Rat(xk) + (*center)[k];
    babai += q[k] * t * t;
  }
  MinNormSearch search{*center, q, mu, r, QVec(r, Rat(0)), babai + 1};
  search.descend(static_cast<long>(r) - 1, Rat(0));
  return search.best * l.scale;
}

RootDecomposition root_system(const ScaledLattice& l) {
  if (!l.is_even()) throw std::domain_error("root_system: lattice is not even");
  std::vector<QVec> roots;
  for (auto& v : enumerate_by_norm(l, QVec(l.ambient, Rat(0)), Rat(2)))
    if (l.norm(v) == 2) roots.push_back(std::move(v));
  size_t nroots = roots.size();
  std::vector<size_t> parent(nroots);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < nroots; ++i)
    for (size_t j = i + 1; j < nroots; ++j)
      if (qdot(roots[i], roots[j]) != 0) parent[find(i)] = find(j);
  std::map<size_t, std::vector<size_t>> comps;
  for (size_t i = 0; i < nroots; ++i) comps[find(i)].push_back(i);
  RootDecomposition dec;
  dec.total_roots = static_cast<long>(nroots);
  for (const auto& [root, members] : comps) {
    QMat mat;
    for (size_t i : members) mat.push_back(roots[i]);
    long rk = static_cast<long>(linalg::qrank(mat));
    long count = static_cast<long>(members.size());
    RootComponent c;
    c.rank = rk;
    c.root_count = count;
    if (rk == 6 && count == 72) {
      c.type = 'E';
      c.coxeter_number = 12;
    } else if (rk == 7 && count == 126) {
      c.type = 'E';
      c.coxeter_number = 18;
    } else if (rk == 8 && count == 240) {
      c.type = 'E';
      c.coxeter_number = 30;
    } else if (count == rk * (rk + 1)) {
      c.type = 'A';
      c.coxeter_number = rk + 1;
    } else if (rk >= 4 && count == 2 * rk * (rk - 1)) {
      c.type = 'D';
      c.coxeter_number = 2 * rk - 2;
    } else {
      throw std::domain_error("root_system: component is not of ADE type");
    }
    dec.components.push_back(c);
  }
  std::sort(dec.components.begin(), dec.components.end(), [](const RootComponent& a, const RootComponent& b) {
    return std::tie(a.type, a.rank) < std::tie(b.type, b.rank);
  });
  return dec;
}

ScaledLattice holy_construction(const ScaledLattice& leech, const QVec& d) {
  QVec df = leech.to_frame(d);
  Rat dd = leech.norm(df);
  if (!is_integer(dd) || mod_euclid(to_int(dd), 2) != 0)
    throw std::domain_error("holy_construction: (d,d) must be an even integer");
  size_t r = leech.rank();
  // (b_i, d) = p_i / q
  QVec u(r);
  Int q = 1;
  for (size_t i = 0; i < r; ++i) {
    u[i] = qdot(QVec(leech.basis[i].begin(), leech.basis[i].end()), df) * leech.scale;
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), u[i].get_den().get_mpz_t());
  }
  // kernel of x -> sum x_i p_i mod q via the column [p_1 .. p_r q]^T
  ZMat col(r + 1, ZVec(1));
  for (size_t i = 0; i < r; ++i) col[i][0] = to_int(u[i] * Rat(q));
  col[r][0] = q;
  auto hk = linalg::hnf_with_kernel(col);
  QMat rows;
  for (const auto& y : hk.kernel) {
    QVec row(leech.ambient, Rat(0));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < leech.ambient; ++j) row[j] += Rat(y[i]) * Rat(leech.basis[i][j]);
    rows.push_back(std::move(row));
  }
  rows.push_back(df);
  ScaledLattice n = make_lattice_rational(rows, leech.scale, leech.ambient, leech.frame_den);
  if (!n.is_even()) throw std::domain_error("holy_construction: result is not even");
  return n;
}

std::string to_text(const ScaledLattice& l) {
  std::ostringstream os;
  os << "lattice rank=" << l.rank() << " ambient=" << l.ambient << " scale=" << l.scale.get_str()
     << " frame=" << l.frame_den.get_str() << "\n";
  for (const auto& row : l.basis) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].get_str();
    os << "\n";
  }
  return os.str();
}

ScaledLattice from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  is >> tag;
  if (tag != "lattice") throw std::runtime_error("from_text: bad header");
  size_t rank = 0, ambient = 0;
  Rat scale;
  Int frame;
  std::string kv;
  while (is >> kv && kv.find('=') != std::string::npos) {
    auto pos = kv.find('=');
    std::string key = kv.substr(0, pos), val = kv.substr(pos + 1);
    if (key == "rank") rank = std::stoul(val);
    else if (key == "ambient") ambient = std::stoul(val);
    else if (key == "scale") scale = parse_rat(val);
    else if (key == "frame") frame = Int(val);
    if (key == "frame") break;
  }
  ZMat basis(rank, ZVec(ambient));
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < ambient; ++j) {
      std::string s;
      is >> s;
      basis[i][j] = Int(s);
    }
  return make_lattice(std::move(basis), scale, ambient, frame);
}

}  // namespace gdh::lattice
