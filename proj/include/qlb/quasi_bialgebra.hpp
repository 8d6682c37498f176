#pragma once
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlb/lie.hpp"
#include "qlb/report.hpp"
#include "qlb/tensor.hpp"

namespace qlb {

class NotLieError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvarianceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (G, mu, gamma, phi). gamma is stored as the bracket it induces on G*:
// <gamma(x), xi^eta> = -<x, gamma(xi, eta)>. phi is the 3-vector of the
// co-Jacobi axiom, so that the exact structure of r has phi = -1/2 [r, r].
struct QuasiLieBialgebra {
  QuasiLieBialgebra(std::vector<std::string> basis, BracketTable mu, BracketTable gamma, Multivector phi);

  int n;
  std::vector<std::string> basis;
  BracketTable mu;
  BracketTable gamma;
  Multivector phi;

  SpaceId primal() const { return primal_space(n); }
  SpaceId dual() const { return dual_space(n); }
};

// Default basis names e1..en.
std::vector<std::string> default_names(int n);

// gamma(x) in the second exterior power of G.
Multivector cobracket(const QuasiLieBialgebra& q, const Multivector& x);
// Dual bracket table from the cocycle values gamma(e_k).
BracketTable dual_table_from_cocycle(int n, const std::vector<Multivector>& values);

// The 3-vector entering the double bracket, the representation and the
// operator identities. With the contraction conventions used here it is -phi.
Multivector bracket_phi(const QuasiLieBialgebra& q);
// G-component of [xi, eta] in the double.
Multivector phi_pair(const QuasiLieBialgebra& q, const Multivector& xi, const Multivector& eta);

// ad*_x xi (mu coadjoint) and ad^{gamma*}_xi x, both for grade-1 arguments.
Multivector coad_mu(const QuasiLieBialgebra& q, const Multivector& x, const Multivector& xi);
Multivector coad_gamma(const QuasiLieBialgebra& q, const Multivector& xi, const Multivector& x);

struct Characters {
  Multivector xi_mu;    // over G*
  Multivector x_gamma;  // over G
};

Characters characters(const QuasiLieBialgebra& q);

ValidationReport validate(const QuasiLieBialgebra& q);
ValidationReport relations_suite(const QuasiLieBialgebra& q);

// boundary_mu d_gamma + d_gamma boundary_mu on the exterior algebra of G.
EndoMatrix laplacian(const QuasiLieBialgebra& q);
ValidationReport laplacian_suite(const QuasiLieBialgebra& q);

// gamma(x) = [x, r], phi = -1/2 [r, r]. No Lie check.
QuasiLieBialgebra exact_structure(const BracketTable& mu, const Multivector& r,
                                  std::vector<std::string> names = {});
// As above, but throws NotLieError when mu fails Jacobi.
QuasiLieBialgebra from_r_matrix(const BracketTable& mu, const Multivector& r, std::vector<std::string> names = {});

// Antisymmetric 3-vector whose full embedding is twice the classical
// Yang-Baxter expression of t (agrees with [a, a] for antisymmetric a).
Multivector yang_baxter_bracket(const BracketTable& mu, const Tensor& t);

// gamma = delta a, phi = -1/2([a,a] + [s,s]) for r = a + s. Requires s invariant.
QuasiLieBialgebra from_quasitriangular(const BracketTable& mu, const Tensor& r, std::vector<std::string> names = {});

struct BvStructure {
  Multivector x0;                 // gamma(x0) = boundary_mu(phi)
  std::vector<Multivector> kernel;  // basis of ker gamma (all solutions are x0 + kernel)
  EndoMatrix delta_op;            // boundary_gamma + i_{x0} on the exterior algebra of G*
  EndoMatrix differential;        // d_mu
  EndoMatrix phi_op;              // contraction by bracket_phi
};

std::optional<BvStructure> bv_prerequisite(const QuasiLieBialgebra& q);
bool solves_bv_equation(const QuasiLieBialgebra& q, const Multivector& x0);

}  // namespace qlb
