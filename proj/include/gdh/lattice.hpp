#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gdh/rational.hpp"

namespace gdh::lattice {

// extended binary Golay code in the 4x6 array frame (index = row*6 + col,
// row 0 on top); words as 24-bit masks
struct GolayCode {
  std::vector<uint32_t> basis;  // 12 generators
  bool contains(uint32_t w) const;
  std::vector<uint32_t> all_words() const;  // 4096 words
};

GolayCode golay_code();

// Lattice with integer basis rows; the bilinear form on integer coordinates is
// (u,v) = (u.v) * scale. frame_den relates integer coordinates to the ambient
// reference frame: integer coords = frame_den * reference coords, so that
// scale * frame_den^2 is the reference form constant (1/8 for the Leech family).
struct ScaledLattice {
  ZMat basis;
  Rat scale{1};
  Int frame_den{1};
  size_t ambient = 0;

  size_t rank() const { return basis.size(); }
  QMat qbasis() const;
  QMat gram() const;
  Rat gram_det() const;
  bool is_integral() const;
  bool is_even() const;
  // coefficients of v (in this lattice's integer frame) if v lies in the span
  std::optional<QVec> coords_in_span(const QVec& v) const;
  bool contains(const QVec& v) const;
  Rat norm(const QVec& v) const;  // (v,v) in this frame
  QVec to_frame(const QVec& reference) const;
  QVec to_reference(const QVec& frame_vec) const;
};

ScaledLattice make_lattice(ZMat basis, Rat scale, size_t ambient, Int frame_den = 1);
// lattice generated by rational rows (basis extracted via HNF; denominators
// folded into frame_den/scale)
ScaledLattice make_lattice_rational(const QMat& rows, const Rat& scale, size_t ambient,
                                    const Int& frame_den = 1);

// Leech lattice, scaled coordinates (vectors carry a factor sqrt(8); scale 1/8)
ScaledLattice leech_lattice();

// dual within the rational span of L (same reference form)
ScaledLattice dual_lattice(const ScaledLattice& l);

// equality as subsets of the reference space, form included
bool same_lattice(const ScaledLattice& a, const ScaledLattice& b);

// fixed sublattice L^nu and projection pi_nu(L); a acts on row vectors v -> v a
struct FixedProjection {
  ScaledLattice fixed;
  ScaledLattice projected;
};
FixedProjection fixed_and_projection(const ScaledLattice& l, const ZMat& a);

// all v in L+shift with (v,v) <= bound, lexicographically sorted; shift is in
// the lattice's integer frame
std::vector<QVec> enumerate_by_norm(const ScaledLattice& l, const QVec& shift, const Rat& bound);

// streaming form: visit(coeffs, x*B, (v,v)) for v = x*B + shift, no ordering
// guarantee; the middle argument omits the shift
using EnumVisitor = std::function<void(const ZVec&, const ZVec&, const Rat&)>;
void enumerate_visit(const ScaledLattice& l, const QVec& shift, const Rat& bound,
                     const EnumVisitor& visit);

// reusable reduction + integral Gram-Schmidt data for repeated enumerations
// of the same lattice
struct EnumContext {
  ZMat red;
  QMat redq;
  Rat scale;
  size_t r = 0;
  size_t ambient = 0;
  std::vector<std::vector<long>> red_l;  // red with machine-integer entries
  std::vector<long> lev_den;             // per-level lcm of mu-row denominators
  std::vector<std::vector<long>> lam;    // mu[k][j] lev_den[k]
  std::vector<Int> wbase;                // q_k M / (qden_k lev_den_k^2)
  Int mbase;                             // M
};
EnumContext make_enum_context(const ScaledLattice& l);
void enumerate_visit(const EnumContext& ctx, const QVec& shift, const Rat& bound,
                     const EnumVisitor& visit);

// minimum of (v,v) over L+shift (0 iff shift in L)
Rat coset_min_norm(const ScaledLattice& l, const QVec& shift);

struct RootComponent {
  char type;  // 'A', 'D' or 'E'
  long rank;
  long coxeter_number;
  long root_count;
};

struct RootDecomposition {
  std::vector<RootComponent> components;
  long total_roots = 0;
};

// decompose the norm-2 vectors of an even lattice into irreducible ADE systems
RootDecomposition root_system(const ScaledLattice& l);

// span_Z{ L^d, d } with L^d = { a in L : (a,d) in Z }; d in reference coords
ScaledLattice holy_construction(const ScaledLattice& leech, const QVec& d);

std::string to_text(const ScaledLattice& l);
ScaledLattice from_text(const std::string& text);

}  // namespace gdh::lattice
