#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdh {

// All arithmetic in this library is exact. Rat is always canonical:
// lowest terms, positive denominator (GMP maintains this).
using Int = mpz_class;
using Rat = mpq_class;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using ZMat = std::vector<ZVec>;
using QMat = std::vector<QVec>;

// the two-argument mpq_class constructor does not reduce; always build
// rationals with an explicit numerator/denominator through this helper
template <typename A, typename B>
inline Rat make_rat(const A& num, const B& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int to_int(const Rat& x) {
  if (!is_integer(x)) throw std::domain_error("expected integer, got " + x.get_str());
  return x.get_num();
}

// floor(a/b) for exact integers
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& x) { return fdiv(x.get_num(), x.get_den()); }
inline Int ceil_rat(const Rat& x) { return -fdiv(-x.get_num(), x.get_den()); }

// round to nearest, ties toward floor; used by lattice reduction
inline Int round_rat(const Rat& x) { return floor_rat(x + make_rat(1, 2)); }

inline Int mod_euclid(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline long mod_long(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline Rat frac_part(const Rat& x) { return x - Rat(floor_rat(x)); }

inline Rat parse_rat(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace gdh
