#pragma once

#include <optional>

#include "gdh/rational.hpp"

namespace gdh::linalg {

ZMat identity(size_t n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
QMat qmat_mul(const QMat& a, const QMat& b);
ZMat zmat_pow(const ZMat& a, long k);
QMat to_qmat(const ZMat& a);
Int zdot(const ZVec& a, const ZVec& b);
Rat qdot(const QVec& a, const QVec& b);

// row-style Hermite normal form of the lattice generated by the rows
ZMat hnf(ZMat rows);

// hnf with unimodular transform: returns {H (nonzero rows), K} where the rows
// of K form a basis of the saturated left kernel {y : y A = 0}
struct HnfResult {
  ZMat h;
  ZMat kernel;
};
HnfResult hnf_with_kernel(const ZMat& a);

// exact integer determinant (Bareiss)
Int det(ZMat a);

// all-integer LLL (de Weger) on basis rows with the standard dot product
ZMat lll(ZMat basis);

// solve x A = b over the rationals, where A has full row rank; returns
// nullopt when b is outside the row span
std::optional<QVec> solve_left(const QMat& a, const QVec& b);

// rank over Q
size_t qrank(QMat a);

// solve a x = rhs over F2 (entries taken mod 2); any solution or nullopt
std::optional<std::vector<int>> solve_f2(const std::vector<std::vector<int>>& a,
                                         const std::vector<int>& rhs);

}  // namespace gdh::linalg
