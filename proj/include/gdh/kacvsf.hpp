#pragma once

#include <string>
#include <vector>

#include "gdh/rational.hpp"

namespace gdh::kacvsf {

// finite-dimensional simple Lie algebra, bilinear form normalized so that
// long roots have norm 2
struct SimpleAlgebra {
  char family;
  long rank;
  std::vector<std::vector<long>> cartan;  // A_ij = 2(a_i,a_j)/(a_i,a_i)
  QVec root_norm_half;                    // d_i = (a_i,a_i)/2
  std::vector<ZVec> roots;                // in simple-root coordinates
  ZVec marks;                             // a_1..a_l (a_0 = 1)
  long dual_coxeter;
  QVec weyl_vector;  // rho in simple-root coordinates
  long lacing;

  long dim() const { return static_cast<long>(roots.size()) + rank; }
  // (u, v) for vectors in simple-root coordinates
  Rat form(const QVec& u, const QVec& v) const;
  QVec lambda_of(const std::vector<long>& s, long n) const;  // (a_i, lambda) = s_i/n
};

SimpleAlgebra build_algebra(char family, long rank);
SimpleAlgebra build_algebra(const std::string& label);  // e.g. "E8", "A2"

struct KacCoords {
  std::vector<long> s;  // s_0 .. s_l
  long n;               // sum a_i s_i
};

KacCoords make_coords(const SimpleAlgebra& g, std::vector<long> s);

// dim of the e(j/n)-eigenspace for j = 0..n-1
std::vector<long> eigenspace_dims(const SimpleAlgebra& g, const KacCoords& s);

struct VsfResult {
  Rat b;    // (1/4) sum B2(j/n) dim g_(j)
  Rat lhs;  // (h^dual/2) |lambda_s - rho/h^dual|^2
};
VsfResult b_and_vsf(const SimpleAlgebra& g, const KacCoords& s);

// Kac coordinates of sigma_s^i for (i,n)=1 via alcove reduction
KacCoords power_coords(const SimpleAlgebra& g, const KacCoords& s, long i);

struct AveragedVsfResult {
  Rat a;    // (1/phi(n)) sum_{i in Z_n^*} B(sigma^i)
  Rat rhs;  // (1/24n) sum_{m|n} c_n(m) dim g^{sigma^m}
};
AveragedVsfResult averaged_vsf(const SimpleAlgebra& g, const KacCoords& s);

KacCoords sigma_rho_coords(const SimpleAlgebra& g);

// all coprime Kac coordinate tuples with sum a_i s_i = n
std::vector<KacCoords> coords_with_order(const SimpleAlgebra& g, long n);

}  // namespace gdh::kacvsf
