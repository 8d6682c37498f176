#pragma once
#include <map>
#include <vector>

#include "qlb/exterior.hpp"

namespace qlb {

// Structure constants c^k_ij of a skew bracket on the vectors of a space.
// Only i < j is stored; (j, i) is the negative.
class BracketTable {
 public:
  explicit BracketTable(SpaceId space);

  SpaceId space() const { return space_; }
  int dim() const { return space_.dim(); }

  Multivector operator()(int i, int j) const;
  Scalar constant(int i, int j, int k) const;
  void set(int i, int j, const Multivector& value);
  void set_constant(int i, int j, int k, const Scalar& c);

  // Bilinear extension to grade-1 arguments.
  Multivector apply(const Multivector& x, const Multivector& y) const;
  bool is_zero() const;
  // Same constants, relabelled space of equal dimension.
  BracketTable retagged(SpaceId to) const;

  friend bool operator==(const BracketTable& a, const BracketTable& b) {
    return a.space_ == b.space_ && a.upper_ == b.upper_;
  }

 private:
  std::size_t slot(int i, int j) const { return static_cast<std::size_t>(i) * dim() + j; }

  SpaceId space_;
  std::vector<Multivector> upper_;
};

struct JacobiDefect {
  int i, j, k;
  Multivector value;
};

// Nonzero cyclic sums b(b(x_i,x_j),x_k) + cyc over i<j<k; empty iff Lie.
std::vector<JacobiDefect> jacobi_defect(const BracketTable& b);

// Vector-level y -> b(x, y); x of grade 1 over b.space().
Matrix ad_action(const BracketTable& b, const Multivector& x);
// Vector-level action on the dual: <ad*_x xi, y> = -<xi, b(x,y)>.
Matrix coad_action(const BracketTable& b, const Multivector& x);

// Extend a linear map of vectors to the exterior algebra as a derivation.
Multivector derive(const Matrix& on_vectors, const Multivector& x);
EndoMatrix derivation_extension(SpaceId space, const Matrix& on_vectors);

// ad_x as a derivation of the exterior algebra of b.space(): equals [x, .].
EndoMatrix ad_extended(const BracketTable& b, const Multivector& x);
// ad*_x as a derivation of the exterior algebra of the dual space.
EndoMatrix coad_extended(const BracketTable& b, const Multivector& x);

// Graded extension of b to multivectors (biderivation).
Multivector schouten(const BracketTable& b, const Multivector& x, const Multivector& y);

// sum_{i<j} (-1)^{i+j} b(x_i, x_j) ^ (rest), 1-based positions.
Multivector boundary(const BracketTable& b, const Multivector& x);
EndoMatrix boundary_operator(const BracketTable& b);
// Transpose of the boundary: lives on the exterior algebra of the dual.
EndoMatrix d_operator(const BracketTable& b);

// Dimensions of H^0 .. H^dim with trivial coefficients.
std::vector<std::size_t> cohomology_dimensions(const BracketTable& b);

// ---- Chevalley-Eilenberg cochains with coefficients ------------------------

struct CoefficientModule {
  enum class Kind { Trivial, Adjoint, Coadjoint };
  Kind kind = Kind::Trivial;
  // Values lie in the power-th exterior power (Adjoint: of the space, Coadjoint: of its dual).
  int power = 0;
};

struct CochainSpace {
  int degree = 0;
  CoefficientModule module;
};

// Alternating map; values stored on ascending argument tuples.
struct Cochain {
  CochainSpace shape;
  SpaceId value_space;
  std::map<Blade, Multivector> values;

  Multivector evaluate(const std::vector<int>& args) const;
};

Cochain zero_cochain(const BracketTable& b, CochainSpace shape);
Multivector module_action(const BracketTable& b, const CoefficientModule& m, int x, const Multivector& v);
Cochain ce_differential(const BracketTable& b, const Cochain& alpha);

}  // namespace qlb
