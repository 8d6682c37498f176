#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qlb/quasi_bialgebra.hpp"

namespace qlb {

class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// D = G + G* with e_1..e_n first, xi^1..xi^n second.
struct DoubleAlgebra {
  int n = 0;
  BracketTable bracket{double_space(0)};
  // Hyperbolic form <xi + x, y + eta> = xi(y) + eta(x); fixed, never user supplied.
  Matrix pairing;
  std::vector<std::string> basis;  // 2n names
};

Matrix hyperbolic_pairing(int n);

// Bracket of D from (mu, gamma, phi) with no validity check.
DoubleAlgebra assemble_double(const QuasiLieBialgebra& q);
// Same, but throws InvalidStructure unless validate(q) passes.
DoubleAlgebra build_double(const QuasiLieBialgebra& q);

struct InvarianceResult {
  bool ok = true;
  int u = -1, v = -1, w = -1;  // first failing basis triple
  explicit operator bool() const { return ok; }
};

// <[u,v], w> + <v, [u,w]> = 0 over all basis triples.
InvarianceResult verify_invariance(const DoubleAlgebra& d);

// Subspace of D spanned by the rows of basis (each of length 2n).
struct ManinPairWitness {
  Matrix basis;
  bool closed = false;
  bool isotropic = false;
  bool maximal = false;
};

ManinPairWitness primal_subspace(int n);
ManinPairWitness dual_subspace(int n);

// Fills the three flags and reports each with its first counterexample.
ValidationReport verify_manin_pair(const DoubleAlgebra& d, ManinPairWitness& w);

// 1/2 sum_i e_i ^ xi^i.
Multivector canonical_r(const DoubleAlgebra& d);

// Exact structure of (D, canonical_r) on the 2n-dimensional algebra D.
QuasiLieBialgebra double_qlb(const DoubleAlgebra& d);

// Structure on G read off from an isotropic complement of G (rows, n x 2n).
QuasiLieBialgebra from_manin_pair(const DoubleAlgebra& d, const Matrix& complement);

}  // namespace qlb
