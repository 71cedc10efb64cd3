#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "gdh/lattice.hpp"

namespace gdh::autgroup {

// finite-order isometry of the Leech lattice acting on ambient row vectors
struct LatticeAut {
  ZMat matrix;  // v -> v * matrix
  long order = 0;
};

LatticeAut make_aut(const lattice::ScaledLattice& leech, ZMat matrix);
LatticeAut identity_aut();

// formal product prod t^{b_t}; negative exponents occur for frame shapes
struct CycleShape {
  std::map<long, long> exponents;
  long trace_weight() const;  // sum t * b_t
};

CycleShape cycle_shape(const LatticeAut& nu);
Rat vacuum_anomaly(const CycleShape& shape);
bool order_doubling(const lattice::ScaledLattice& leech, const LatticeAut& nu);

// automorphism nu-hat sigma_h of the lattice VOA, nu-hat a standard lift.
// All the twisted-module data needed by the verifier hangs off this object.
class OrbifoldCandidate {
 public:
  OrbifoldCandidate(lattice::ScaledLattice leech, LatticeAut nu, QVec h_reference);

  const lattice::ScaledLattice& leech() const { return leech_; }
  const LatticeAut& nu() const { return nu_; }
  const QVec& h() const { return h_; }  // pi_nu-projected, reference coords
  long nu_order() const { return nu_.order; }

  CycleShape shape_of_power(long c) const;
  const lattice::FixedProjection& fixed_projection(long c) const;

  // defect f_k with nu-hat^k = (standard lift of nu^k) sigma_{f_k}, mod Lambda
  QVec lift_power_shift(long k) const;

  long order() const;
  Rat twisted_conformal_weight(long c) const;
  long type() const;

  // eta of the chosen standard lift evaluated on a lattice vector (0/1 exponent)
  int eta_on(const QVec& reference_vec) const;

 private:
  struct EtaData;
  const EtaData& eta_std(long k) const;
  int h_value(const EtaData& e, const ZVec& coeffs) const;

  lattice::ScaledLattice leech_;
  LatticeAut nu_;
  QVec h_;
  ZMat gram_;                       // integral Gram of the Leech basis
  ZMat nu_coeff_;                   // nu in basis coordinates
  mutable std::mutex mu_;
  mutable std::map<long, lattice::FixedProjection> fixproj_;
  mutable std::map<long, std::shared_ptr<EtaData>> eta_;
  mutable std::map<long, QVec> fk_;
  mutable long order_ = 0;
};

}  // namespace gdh::autgroup
