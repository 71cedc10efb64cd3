#include "gdh/qforms.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include "gdh/arith.hpp"
#include "gdh/linalg.hpp"

namespace gdh::qforms {

using arith::divisors;
using arith::euler_phi;
using arith::mobius;
using arith::mult_functions;
using arith::ramanujan_sum;

std::vector<CuspRep> cusps(long n) {
  if (n < 1) throw std::domain_error("cusps: n must be positive");
  std::vector<CuspRep> out;
  for (long c : divisors(n)) {
    long g = std::gcd(c, n / c);
    for (long a = 1; a <= g; ++a) {
      if (std::gcd(a, g) != 1) continue;
      long lifted = a;
      while (std::gcd(lifted, c) != 1) lifted += g;
      out.push_back({c, lifted, n / std::gcd(c * c, n)});
    }
  }
  return out;
}

QSeries e2_series(long prec) {
  if (prec < 1) throw std::domain_error("e2_series: precision must be positive");
  QSeries s = qs_zero(1, Rat(prec));
  s.coeffs[0] = 1;
  for (long m = 1; m < prec; ++m) s.coeffs[m] = Rat(-24) * Rat(arith::sigma1(m));
  return s;
}

QSeries f_special(long n, long prec) {
  if (n <= 1) throw std::domain_error("f_special: n must exceed 1");
  QSeries s = e2_series(prec);
  long phi = euler_phi(n);
  for (long k : divisors(n)) {
    long mu = mobius(n / k);
    if (mu == 0) continue;
    Rat f = make_rat(-mu * k * k, phi);
    // E2(k tau)
    s.add_to(0, f);
    for (long m = 1; m * k < prec; ++m) s.add_to(m * k, f * Rat(-24) * Rat(arith::sigma1(m)));
  }
  return s;
}

QSeries eta_inverse24(long prec) {
  // q^{-1} prod (1-q^m)^{-24}; m a(m) = 24 sum_{k<=m} sigma(k) a(m-k)
  std::vector<Rat> a(prec + 1);
  a[0] = 1;
  for (long m = 1; m <= prec; ++m) {
    Rat s = 0;
    for (long k = 1; k <= m; ++k) s += Rat(arith::sigma1(k)) * a[m - k];
    a[m] = s * make_rat(24, m);
  }
  QSeries out = qs_zero(1, Rat(prec));
  for (long m = 0; m <= prec; ++m)
    if (Rat(m - 1) < out.cutoff) out.coeffs[m - 1] = a[m];
  return out;
}

// largest grid value strictly below the cutoff; norms live on (2/denom) Z
static Rat strict_norm_bound(const Rat& prec, long denom) {
  Rat steps = prec * denom;
  Int k = is_integer(steps) ? Int(to_int(steps) - 1) : floor_rat(steps);
  if (k < 0) return -1;
  return make_rat(2 * k, denom);
}

QSeries theta_coset(const lattice::ScaledLattice& l, const QVec& shift, const Rat& prec,
                    long denom) {
  QSeries s = qs_zero(denom, prec);
  Rat bound = strict_norm_bound(prec, denom);
  if (bound < 0) return s;
  lattice::enumerate_visit(l, shift, bound, [&](const ZVec&, const ZVec&, const Rat& nn) {
    Rat e = nn / 2;
    if (e < prec) s.add_to(e, 1);
  });
  return s;
}

bool is_isotropic(long n, const DiscElem& g) {
  return (static_cast<long long>(mod_long(g.first, n)) * mod_long(g.second, n)) % n == 0;
}

Rat r_gamma(long n, const DiscElem& g) {
  if (is_isotropic(n, g)) throw std::domain_error("r_gamma: isotropic element");
  Rat q = make_rat(static_cast<long>(static_cast<long long>(mod_long(g.first, n)) * mod_long(g.second, n) % n), n);
  return 1 - q;
}

static long inv_mod(long a, long m) {
  if (m == 1) return 0;
  long t = 0, nt = 1, r = m, nr = mod_long(a, m);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  return mod_long(t, m);
}

LiftTable lift_table(long n) {
  if (n <= 1) throw std::domain_error("lift_table: n must exceed 1");
  LiftTable t;
  t.n = n;
  auto divs = divisors(n);
  long phi = euler_phi(n);
  t.f0_at_1 = 24;
  for (long c : divs) {
    long g = std::gcd(c, n / c);
    t.f0_at_1 -= make_rat(24 * euler_phi(g), g);
  }
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      DiscElem gamma{i, j};
      if (is_isotropic(n, gamma)) {
        Rat v = (i == 0 && j == 0) ? Rat(-mult_functions(n).psi) : Rat(0);
        for (long c : divs) {
          if (i % c || j % (n / c)) continue;  // gamma in H_c = {(ci, nj/c)}
          long g = std::gcd(c, n / c);
          v += make_rat(euler_phi(g), g);
        }
        t.const0[gamma] = v;
      } else {
        Rat r = r_gamma(n, gamma);
        Rat v = 0;
        for (long c : divs) {
          if (i % c || j % c) continue;  // gamma in D^c
          long g = std::gcd(c, n / c);
          // q_c(gamma) = c q(mu) for gamma = c mu
          Rat qc = frac_part(make_rat(c * (i / c) * (j / c), n));
          Rat inner = 0;
          for (long k : divs) {
            long mu = mobius(n / k);
            if (mu == 0) continue;
            long kc = std::gcd(k, c);
            Rat arg = r * make_rat(k, kc * kc);
            if (!is_integer(arg) || arg <= 0) continue;
            long w = k / kc;
            long inv = inv_mod((c / kc) % std::max(w, 1L), w);
            Rat y = Rat(g) * (qc + r * make_rat(inv, kc));
            if (!is_integer(y)) throw std::runtime_error("lift_table: non-integral Ramanujan argument");
            inner += Rat(mu * kc * kc) * Rat(arith::sigma1(to_int(arg).get_si())) *
                     Rat(ramanujan_sum(g, mod_euclid(to_int(y), g).get_si()));
          }
          v += inner / g;
        }
        t.fractional[gamma] = v * make_rat(24, phi);
      }
    }
  return t;
}

Rat dtilde(long n, const DiscElem& g) {
  if (is_isotropic(n, g)) throw std::domain_error("dtilde: isotropic element");
  static std::map<long, LiftTable> cache;
  static std::mutex m;
  std::lock_guard lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, lift_table(n)).first;
  return it->second.fractional.at({mod_long(g.first, n), mod_long(g.second, n)});
}

Rat d_coeff(long n, long i, long j) {
  i = mod_long(i, n);
  j = mod_long(j, n);
  if (is_isotropic(n, {i, j})) throw std::domain_error("d_coeff: isotropic element");
  auto xi = arith::c_xi_coeffs(n).xi;
  Rat v = 0;
  for (long m : divisors(std::gcd(i, n))) {
    long nm = n / m;
    if (nm == 1) continue;
    DiscElem g{(i / m) % nm, j % nm};
    if (is_isotropic(nm, g)) continue;
    v += xi.at(nm) * dtilde(nm, g);
  }
  return v;
}

bool d_vanishes(long n, long i, long j) {
  i = mod_long(i, n);
  j = mod_long(j, n);
  if (is_isotropic(n, {i, j})) throw std::domain_error("d_vanishes: isotropic element");
  long g = std::gcd(std::gcd(i, j), n);
  long ceil_q = (i * j + n - 1) / n;
  return ceil_q % g != 0;
}

CharacterMap inner_character_components(const lattice::ScaledLattice& leech, const QVec& h,
                                        long n, const Rat& prec) {
  QVec hf = leech.to_frame(h);
  {
    QVec nh(hf);
    for (auto& x : nh) x *= n;
    if (!leech.contains(nh)) throw std::domain_error("inner characters: n h is not in the lattice");
    if (n > 1) {
      bool smaller = false;
      for (long d : divisors(n))
        if (d < n) {
          QVec dh(hf);
          for (auto& x : dh) x *= d;
          if (leech.contains(dh)) smaller = true;
        }
      if (smaller) throw std::domain_error("inner characters: h has smaller order than n");
    }
  }
  Rat hh = leech.norm(hf);
  QSeries eta = eta_inverse24(static_cast<long>(to_int(ceil_rat(prec)).get_si()) + 1);
  // h as an integer vector over a common denominator, for fast leaf phases
  Int hden = 1;
  for (const auto& x : hf) mpz_lcm(hden.get_mpz_t(), hden.get_mpz_t(), x.get_den().get_mpz_t());
  ZVec hz(hf.size());
  for (size_t k = 0; k < hf.size(); ++k) hz[k] = to_int(hf[k] * Rat(hden));
  CharacterMap out;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) out[{i, j}] = qs_zero(n, prec);
  auto ctx = lattice::make_enum_context(leech);
  // cosets at i and n-i are negatives of each other, so only half are
  // enumerated; alpha -> -alpha sends the eigenvalue index j to -j
  for (long i = 0; 2 * i <= n; ++i) {
    QVec shift(hf);
    for (auto& x : shift) x *= i;
    // collect theta contributions by the eigenvalue index j
    Rat phase0 = linalg::qdot(shift, hf) * leech.scale - Rat(i) * hh / 2;
    Rat unit = leech.scale / Rat(hden);
    std::map<long, QSeries> theta;
    lattice::enumerate_visit(
        ctx, shift, strict_norm_bound(prec + 1, n),
        [&](const ZVec&, const ZVec& amb, const Rat& nn) {
          Int d = 0;
          for (size_t k = 0; k < amb.size(); ++k)
            if (amb[k] != 0 && hz[k] != 0) d += amb[k] * hz[k];
          Rat jn = frac_part(Rat(Rat(d) * unit + phase0)) * n;
          if (!is_integer(jn))
            throw std::runtime_error("inner characters: non-integral grading (type != 0?)");
          long j = to_int(jn).get_si() % n;
          auto it = theta.find(j);
          if (it == theta.end()) it = theta.emplace(j, qs_zero(n, prec + 1)).first;
          Rat e = nn / 2;
          if (e < prec + 1) it->second.add_to(e, 1);
        });
    for (auto& [j, th] : theta) {
      QSeries ch = qs_mul(th, eta);
      if (ch.cutoff < prec) throw std::runtime_error("inner characters: precision shortfall");
      ch.cutoff = prec;
      for (auto it = ch.coeffs.begin(); it != ch.coeffs.end();)
        if (make_rat(it->first, ch.denom) >= prec)
          it = ch.coeffs.erase(it);
        else
          ++it;
      long imir = mod_long(n - i, n);
      if (imir != i) out[{imir, mod_long(n - j, n)}] = ch;
      out[{i, j}] = std::move(ch);
    }
  }
  return out;
}

Rat pairing_constant_term(const CharacterMap& chars, const LiftTable& table) {
  long n = table.n;
  if (chars.size() != static_cast<size_t>(n) * n)
    throw std::domain_error("pairing: need all n^2 character components");
  for (const auto& [g, ch] : chars)
    if (ch.cutoff < make_rat(1, n))
      throw std::domain_error("pairing: insufficient precision");
  Rat total = table.f0_at_1;
  for (const auto& [g, v] : table.const0) total += v * chars.at(g).coeff(0);
  for (const auto& [g, v] : table.fractional) total += v * chars.at(g).coeff(-r_gamma(n, g));
  return total;
}

PrimeCuspLift prime_cusp_lift(long p, const std::vector<Int>& a) {
  if (a.empty() || a[0] != 1) throw std::domain_error("prime_cusp_lift: need a(1) = 1");
  if (static_cast<long>(a.size()) < p) throw std::domain_error("prime_cusp_lift: need coefficients up to a(p)");
  PrimeCuspLift l;
  l.f0_at_1 = make_rat(p - 1, p);
  for (long k = 1; k < p; ++k) l.fractional[k] = make_rat(-a[p - k - 1].get_si(), p);
  return l;
}

bool deligne_check(const std::vector<Int>& a, long max_m) {
  for (long m = 1; m <= max_m && m <= static_cast<long>(a.size()); ++m) {
    Int lhs = a[m - 1] * a[m - 1];
    Int s0 = arith::sigma0(m);
    if (lhs > s0 * s0 * m) return false;
  }
  return true;
}

std::vector<Int> eta_product_level11(long prec) {
  // q prod (1-q^m)^2 (1-q^{11m})^2, coefficients of q^1 .. q^prec
  std::vector<Int> poly(prec, 0);
  poly[0] = 1;  // holds coefficients of q^0..q^{prec-1} for the product without the leading q
  auto mul_factor = [&](long m) {
    // multiply by (1 - q^m)
    for (long d = prec - 1; d >= m; --d) poly[d] -= poly[d - m];
  };
  for (long m = 1; m < prec; ++m) {
    mul_factor(m);
    mul_factor(m);
    if (11 * m < prec) {
      mul_factor(11 * m);
      mul_factor(11 * m);
    }
  }
  std::vector<Int> a(prec);
  for (long k = 1; k <= prec; ++k) a[k - 1] = poly[k - 1];
  return a;
}

}  // namespace gdh::qforms
