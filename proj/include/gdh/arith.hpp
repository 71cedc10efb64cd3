#pragma once

#include <map>
#include <vector>

#include "gdh/rational.hpp"

namespace gdh::arith {

long gcd_long(long a, long b);
std::vector<long> divisors(long n);
long mobius(long n);
long euler_phi(long n);

struct MultFunctions {
  long phi;
  long mu;
  long psi;         // n * prod_{p|n} (1 + 1/p)
  long lambda_rad;  // prod_{p|n} (-p)
};

MultFunctions mult_functions(long n);

// sigma extended to positive rationals: sigma(x) for integral x, 0 otherwise
Int sigma_ext(const Rat& x);
Int sigma1(long n);
long sigma0(long n);

// Ramanujan sum C_k(m) = sum_{c | (k,m)} c mu(k/c)
long ramanujan_sum(long k, long m);

// second Bernoulli polynomial x^2 - x + 1/6
Rat bernoulli2(const Rat& x);

// values indexed by the divisors of n, ascending
struct CoeffTable {
  long n;
  std::map<long, Rat> values;
  const Rat& at(long m) const { return values.at(m); }
};

struct CXiTables {
  CoeffTable c;
  CoeffTable xi;
};

// closed forms c_n(m) = (lambda(m)/m)(phi((m,n/m))/(m,n/m)) psi(n/m),
// xi_n(m) = (lambda(n/m)/(n/m))(phi((m,n/m))/(m,n/m))
CXiTables c_xi_coeffs(long n);

// independent oracle: solve sum_{m|n} c(m) (t,m) = n/t exactly
CoeffTable c_coeffs_oracle(long n);

}  // namespace gdh::arith
