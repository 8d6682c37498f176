#pragma once

#include "qlb/double.hpp"

namespace qlb {

// x + xi in D.
struct DoubleElement {
  Multivector x;
  Multivector xi;

  // Basis vector k of D (0..n-1 are e_k, n..2n-1 are xi^k).
  static DoubleElement basis(int n, int k);
  static DoubleElement from_double(const Multivector& u);
  Multivector to_double() const;
};

// Coefficients of the two scalar terms and of the phi term. Tests override them to check that the
// representation law really depends on them.
struct RepWeights {
  Scalar xi_mu = Scalar(-1, 2);
  Scalar x_gamma = Scalar(1, 2);
  Scalar phi = -1;  // in front of (i_xi phi) ^ Y
};

Multivector rep_action(const QuasiLieBialgebra& q, const DoubleElement& u, const Multivector& y,
                       const RepWeights& w = {});
EndoMatrix rep_matrix(const QuasiLieBialgebra& q, const DoubleElement& u, const RepWeights& w = {});

// [R_u, R_v] = R_[u,v] over all basis pairs, grouped by pair kind.
ValidationReport verify_representation(const QuasiLieBialgebra& q, const RepWeights& w = {});

// R_u T - T R_u.
EndoMatrix gamma_action(const QuasiLieBialgebra& q, const DoubleElement& u, const EndoMatrix& t);

// 1 + r + r^r/2! + ... for the canonical r of D.
Multivector exp_r(const DoubleAlgebra& d);

// Q(U)(Y) = sum_j X_j ^ i_{rev A_j} Y where i_{exp r} U = sum_j X_j ^ A_j.
EndoMatrix q_map(const QuasiLieBialgebra& q, const Multivector& u);

// Columns are the flattened Q(U) over the blades U of the exterior algebra of D.
Matrix q_matrix(const QuasiLieBialgebra& q);
// Same map as the composite of i_{exp r} on the exterior algebra of D with X^A -> X ^ i_{rev A}.
Matrix q_matrix_composed(const QuasiLieBialgebra& q);

ValidationReport verify_q_isomorphism(const QuasiLieBialgebra& q);

}  // namespace qlb
