#include "gdh/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdh::linalg {

ZMat identity(size_t n) {
  ZMat m(n, ZVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Int zdot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat qdot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  size_t n = a.size(), m = b.size(), p = b[0].size();
  ZMat r(n, ZVec(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < m; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < p; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), m = b.size(), p = b[0].size();
  QMat r(n, QVec(p, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < m; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < p; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

ZMat zmat_pow(const ZMat& a, long k) {
  ZMat r = identity(a.size());
  for (long i = 0; i < k; ++i) r = zmat_mul(r, a);
  return r;
}

QMat to_qmat(const ZMat& a) {
  QMat q(a.size());
  for (size_t i = 0; i < a.size(); ++i) q[i] = QVec(a[i].begin(), a[i].end());
  return q;
}

static void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

static ZMat hnf_impl(ZMat a, ZMat* transform) {
  a.erase(std::remove_if(a.begin(), a.end(),
                         [](const ZVec& r) {
                           return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
                         }),
          a.end());
  if (transform) {
    // caller passes the square transform pre-initialized to match `a` rows
  }
  if (a.empty()) return a;
  size_t ncols = a[0].size(), nrows = a.size();
  size_t r = 0;
  auto rowop = [&](ZMat& m, size_t i, size_t j, const Int& x, const Int& y, const Int& u, const Int& v) {
    // (row_i, row_j) <- (x row_i + y row_j, -v row_i + u row_j)
    for (size_t k = 0; k < m[i].size(); ++k) {
      Int p = m[i][k], q = m[j][k];
      m[i][k] = x * p + y * q;
      m[j][k] = -v * p + u * q;
    }
  };
  for (size_t c = 0; c < ncols && r < nrows; ++c) {
    size_t piv = r;
    while (piv < nrows && a[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(a[r], a[piv]);
    if (transform) std::swap((*transform)[r], (*transform)[piv]);
    for (size_t i = r + 1; i < nrows; ++i) {
      if (a[i][c] == 0) continue;
      Int g, x, y;
      xgcd(a[r][c], a[i][c], g, x, y);
      Int u = a[r][c] / g, v = a[i][c] / g;
      rowop(a, r, i, x, y, u, v);
      if (transform) rowop(*transform, r, i, x, y, u, v);
    }
    if (a[r][c] < 0) {
      for (auto& t : a[r]) t = -t;
      if (transform)
        for (auto& t : (*transform)[r]) t = -t;
    }
    for (size_t i = 0; i < r; ++i) {
      Int q = fdiv(a[i][c], a[r][c]);
      if (q == 0) continue;
      for (size_t k = 0; k < ncols; ++k) a[i][k] -= q * a[r][k];
      if (transform)
        for (size_t k = 0; k < (*transform)[i].size(); ++k) (*transform)[i][k] -= q * (*transform)[r][k];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

ZMat hnf(ZMat rows) { return hnf_impl(std::move(rows), nullptr); }

HnfResult hnf_with_kernel(const ZMat& a) {
  ZMat u = identity(a.size());
  ZMat work = a;
  // keep zero rows so the transform stays square: do not strip them here
  size_t ncols = a.empty() ? 0 : a[0].size(), nrows = a.size();
  size_t r = 0;
  auto rowop = [&](ZMat& m, size_t i, size_t j, const Int& x, const Int& y, const Int& uu, const Int& v) {
    for (size_t k = 0; k < m[i].size(); ++k) {
      Int p = m[i][k], q = m[j][k];
      m[i][k] = x * p + y * q;
      m[j][k] = -v * p + uu * q;
    }
  };
  for (size_t c = 0; c < ncols && r < nrows; ++c) {
    size_t piv = r;
    while (piv < nrows && work[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(work[r], work[piv]);
    std::swap(u[r], u[piv]);
    for (size_t i = r + 1; i < nrows; ++i) {
      if (work[i][c] == 0) continue;
      Int g, x, y;
      xgcd(work[r][c], work[i][c], g, x, y);
      Int uu = work[r][c] / g, v = work[i][c] / g;
      rowop(work, r, i, x, y, uu, v);
      rowop(u, r, i, x, y, uu, v);
    }
    ++r;
  }
  HnfResult res;
  for (size_t i = 0; i < nrows; ++i) {
    bool zero = std::all_of(work[i].begin(), work[i].end(), [](const Int& x) { return x == 0; });
    if (zero)
      res.kernel.push_back(u[i]);
    else
      res.h.push_back(work[i]);
  }
  return res;
}

Int det(ZMat a) {
  size_t n = a.size();
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

ZMat lll(ZMat b) {
  size_t n = b.size();
  if (n <= 1) return b;
  std::vector<std::vector<Int>> lam(n, std::vector<Int>(n, 0));
  std::vector<Int> d(n + 1, 1);
  auto recompute = [&]() {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j <= i; ++j) {
        Int u = zdot(b[i], b[j]);
        for (size_t k = 0; k < j; ++k) u = (d[k + 1] * u - lam[i][k] * lam[j][k]) / d[k];
        if (j < i)
          lam[i][j] = u;
        else
          d[i + 1] = u;
      }
  };
  recompute();
  auto size_reduce = [&](size_t k, size_t l) {
    if (2 * abs(lam[k][l]) > d[l + 1]) {
      Int q = fdiv(2 * lam[k][l] + d[l + 1], 2 * d[l + 1]);
      for (size_t j = 0; j < b[k].size(); ++j) b[k][j] -= q * b[l][j];
      lam[k][l] -= q * d[l + 1];
      for (size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };
  auto swap_step = [&](size_t k) {
    std::swap(b[k], b[k - 1]);
    for (size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    for (size_t i = k + 1; i < n; ++i) {
      Int t = lam[i][k - 1] * d[k + 1] - lam[i][k] * lam[k][k - 1];
      lam[i][k - 1] = (lam[i][k - 1] * lam[k][k - 1] + lam[i][k] * d[k - 1]) / d[k];
      lam[i][k] = t / d[k];
    }
    d[k] = (d[k - 1] * d[k + 1] + lam[k][k - 1] * lam[k][k - 1]) / d[k];
  };
  size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    if (4 * (d[k - 1] * d[k + 1] + lam[k][k - 1] * lam[k][k - 1]) < 3 * d[k] * d[k]) {
      swap_step(k);
      k = std::max<size_t>(k - 1, 1);
    } else {
      for (size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }
  return b;
}

std::optional<QVec> solve_left(const QMat& a, const QVec& b) {
  size_t n = a.size();
  if (n == 0) {
    for (const auto& x : b)
      if (x != 0) return std::nullopt;
    return QVec{};
  }
  size_t cols = a[0].size();
  // normal equations with the Gram matrix (a has full row rank)
  QMat sys(n, QVec(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) sys[i][j] = qdot(a[i], a[j]);
    sys[i][n] = qdot(a[i], b);
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && sys[piv][c] == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve_left: rank-deficient input");
    std::swap(sys[c], sys[piv]);
    Rat pv = sys[c][c];
    for (auto& x : sys[c]) x /= pv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || sys[r][c] == 0) continue;
      Rat f = sys[r][c];
      for (size_t k = c; k <= n; ++k) sys[r][k] -= f * sys[c][k];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = sys[i][n];
  for (size_t j = 0; j < cols; ++j) {
    Rat s = 0;
    for (size_t i = 0; i < n; ++i) s += x[i] * a[i][j];
    if (s != b[j]) return std::nullopt;
  }
  return x;
}

size_t qrank(QMat a) {
  size_t n = a.size();
  if (n == 0) return 0;
  size_t cols = a[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < n; ++c) {
    size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    for (size_t i = r + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<int>> solve_f2(const std::vector<std::vector<int>>& a0,
                                         const std::vector<int>& rhs) {
  size_t rows = a0.size();
  size_t n = rows ? a0[0].size() : 0;
  std::vector<std::vector<int>> a(rows, std::vector<int>(n + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = a0[i][j] & 1;
    a[i][n] = rhs[i] & 1;
  }
  std::vector<size_t> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < n && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && !a[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (size_t i = 0; i < rows; ++i)
      if (i != r && a[i][c])
        for (size_t k = 0; k <= n; ++k) a[i][k] ^= a[r][k];
    pivcol.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (a[i][n]) return std::nullopt;
  std::vector<int> x(n, 0);
  for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = a[i][n];
  return x;
}

}  // namespace gdh::linalg
