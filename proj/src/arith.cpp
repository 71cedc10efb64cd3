#include "gdh/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace gdh::arith {

long gcd_long(long a, long b) { return std::gcd(a, b); }

std::vector<long> divisors(long n) {
  std::vector<long> small, big;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) big.push_back(n / d);
    }
  }
  for (auto it = big.rbegin(); it != big.rend(); ++it) small.push_back(*it);
  return small;
}

static std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

long mobius(long n) {
  long m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_divisors(n)) r -= r / p;
  return r;
}

MultFunctions mult_functions(long n) {
  if (n < 1) throw std::domain_error("mult_functions: n must be positive");
  MultFunctions f;
  f.phi = euler_phi(n);
  f.mu = mobius(n);
  f.psi = n;
  f.lambda_rad = 1;
  for (long p : prime_divisors(n)) {
    f.psi = f.psi / p * (p + 1);
    f.lambda_rad *= -p;
  }
  return f;
}

Int sigma1(long n) {
  Int s = 0;
  for (long d : divisors(n)) s += d;
  return s;
}

long sigma0(long n) { return static_cast<long>(divisors(n).size()); }

Int sigma_ext(const Rat& x) {
  if (x <= 0) throw std::domain_error("sigma_ext: argument must be positive");
  if (!is_integer(x)) return 0;
  return sigma1(x.get_num().get_si());
}

long ramanujan_sum(long k, long m) {
  if (k < 1) throw std::domain_error("ramanujan_sum: k must be positive");
  long g = std::gcd(k, std::abs(m));
  if (m == 0) g = k;
  long s = 0;
  for (long c : divisors(g))
    if (k % c == 0) s += c * mobius(k / c);
  return s;
}

Rat bernoulli2(const Rat& x) { return x * x - x + make_rat(1, 6); }

CXiTables c_xi_coeffs(long n) {
  if (n < 1) throw std::domain_error("c_xi_coeffs: n must be positive");
  CXiTables t;
  t.c.n = n;
  t.xi.n = n;
  for (long m : divisors(n)) {
    long g = std::gcd(m, n / m);
    Rat common = make_rat(euler_phi(g), g);
    auto fm = mult_functions(m);
    auto fnm = mult_functions(n / m);
    t.c.values[m] = make_rat(fm.lambda_rad, m) * common * fnm.psi;
    t.xi.values[m] = make_rat(fnm.lambda_rad, n / m) * common;
  }
  return t;
}

CoeffTable c_coeffs_oracle(long n) {
  if (n < 1) throw std::domain_error("c_coeffs_oracle: n must be positive");
  auto divs = divisors(n);
  size_t d = divs.size();
  // rows indexed by t, columns by m: sum_m c(m) (t,m) = n/t
  QMat a(d, QVec(d + 1));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) a[i][j] = std::gcd(divs[i], divs[j]);
    a[i][d] = make_rat(n, divs[i]);
  }
  for (size_t c = 0; c < d; ++c) {
    size_t piv = c;
    while (piv < d && a[piv][c] == 0) ++piv;
    if (piv == d) throw std::runtime_error("c_coeffs_oracle: singular gcd system");
    std::swap(a[c], a[piv]);
    Rat pv = a[c][c];
    for (auto& x : a[c]) x /= pv;
    for (size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (size_t k = c; k <= d; ++k) a[r][k] -= f * a[c][k];
    }
  }
  CoeffTable t;
  t.n = n;
  for (size_t j = 0; j < d; ++j) t.values[divs[j]] = a[j][d];
  return t;
}

}  // namespace gdh::arith
