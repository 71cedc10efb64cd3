#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gdh/lattice.hpp"
#include "gdh/qseries.hpp"

namespace gdh::qforms {

// element (i,j) of the discriminant form Z_n x Z_n with q((i,j)) = ij/n
using DiscElem = std::pair<long, long>;

struct CuspRep {
  long c;      // divisor of n
  long a;      // unit residue mod (c, n/c), lifted coprime to c
  long width;  // n/(c^2, n)
};

std::vector<CuspRep> cusps(long n);

QSeries e2_series(long prec);
// E2(tau) - (1/phi(n)) sum_{k|n} k^2 mu(n/k) E2(k tau); constant term 1 - psi(n)
QSeries f_special(long n, long prec);

QSeries eta_inverse24(long prec);
QSeries theta_coset(const lattice::ScaledLattice& l, const QVec& shift, const Rat& prec,
                    long denom);

bool is_isotropic(long n, const DiscElem& g);
Rat r_gamma(long n, const DiscElem& g);

// lowest Fourier coefficients of the Eisenstein lift for the dual Weil
// representation of II_{1,1}(n)
struct LiftTable {
  long n;
  std::map<DiscElem, Rat> const0;      // [F_gamma](0), isotropic gamma
  Rat f0_at_1;                         // [F_0](1)
  std::map<DiscElem, Rat> fractional;  // [F_gamma](r_gamma), non-isotropic gamma
};

LiftTable lift_table(long n);

Rat dtilde(long n, const DiscElem& g);
Rat d_coeff(long n, long i, long j);
bool d_vanishes(long n, long i, long j);

using CharacterMap = std::map<DiscElem, QSeries>;

// characters of the n^2 irreducible modules for an inner automorphism sigma_h
// of the Leech lattice VOA; h in reference coordinates, n h in Lambda
CharacterMap inner_character_components(const lattice::ScaledLattice& leech, const QVec& h,
                                        long n, const Rat& prec);

Rat pairing_constant_term(const CharacterMap& chars, const LiftTable& table);

struct PrimeCuspLift {
  Rat f0_at_1;                  // 1 - 1/p
  std::map<long, Rat> fractional;  // q(gamma) = k/p  ->  -a(p-k)/p
};

PrimeCuspLift prime_cusp_lift(long p, const std::vector<Int>& a);
bool deligne_check(const std::vector<Int>& a, long max_m);

// coefficients a(1..prec) of q prod (1-q^m)^2 (1-q^{11m})^2
std::vector<Int> eta_product_level11(long prec);

}  // namespace gdh::qforms
