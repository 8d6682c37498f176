#pragma once

#include <ostream>
#include <random>

#include "qlb/quasi_bialgebra.hpp"

namespace qlb {

inline void PrintTo(const Multivector& m, std::ostream* os) { *os << format(m, {}); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << to_string(s); }

}  // namespace qlb

namespace fx {

using namespace qlb;

inline Multivector vec(SpaceId s, int i) { return Multivector::basis(s, i); }

// h = 0, e = 1, f = 2.
inline BracketTable sl2() {
  BracketTable b(primal_space(3));
  b.set_constant(0, 1, 1, 2);
  b.set_constant(0, 2, 2, -2);
  b.set_constant(1, 2, 0, 1);
  return b;
}

inline std::vector<std::string> sl2_names() { return {"h", "e", "f"}; }

inline BracketTable heisenberg() {
  BracketTable b(primal_space(3));
  b.set_constant(0, 1, 2, 1);
  return b;
}

// Solvable, not unimodular: [1,2]=2, [1,3]=3, [2,3]=4, [1,4]=2*4.
inline BracketTable alg4() {
  BracketTable b(primal_space(4));
  b.set_constant(0, 1, 1, 1);
  b.set_constant(0, 2, 2, 1);
  b.set_constant(1, 2, 3, 1);
  b.set_constant(0, 3, 3, 2);
  return b;
}

inline Multivector blade2(SpaceId s, int i, int j, const Scalar& c = 1) {
  return Multivector::from_blade(s, make_blade({i, j}), c);
}

inline Multivector random_bivector(SpaceId s, std::mt19937& rng, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  Multivector r(s);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) r.add_term(make_blade({i, j}), d(rng));
  return r;
}

inline QuasiLieBialgebra sl2_exact() { return from_r_matrix(sl2(), blade2(primal_space(3), 1, 2), sl2_names()); }

// gamma of r = e^f / 2 with phi dropped: the standard r-matrix e(x)f + h(x)h/4.
inline QuasiLieBialgebra sl2_bialgebra() {
  auto q = from_r_matrix(sl2(), blade2(primal_space(3), 1, 2, Scalar(1, 2)), sl2_names());
  q.phi = Multivector(q.primal());
  return q;
}

}  // namespace fx
