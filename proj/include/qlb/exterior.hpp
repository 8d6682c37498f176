#pragma once
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlb/linalg.hpp"
#include "qlb/scalar.hpp"

namespace qlb {

enum class SpaceKind { Primal, Dual, Double };

// G, G* or D = G + G*. In D, indices 0..n-1 are e_i and n..2n-1 are xi^i.
struct SpaceId {
  SpaceKind kind = SpaceKind::Primal;
  int n = 0;

  int dim() const { return kind == SpaceKind::Double ? 2 * n : n; }
  bool operator==(const SpaceId&) const = default;
};

inline SpaceId primal_space(int n) { return {SpaceKind::Primal, n}; }
inline SpaceId dual_space(int n) { return {SpaceKind::Dual, n}; }
inline SpaceId double_space(int n) { return {SpaceKind::Double, n}; }

// G <-> G*; D is its own dual through the hyperbolic pairing.
SpaceId dual_of(SpaceId s);
std::string describe(SpaceId s);

inline constexpr int max_dimension = 30;

class SpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ascending index set stored as a bitmask.
struct Blade {
  std::uint32_t bits = 0;

  int grade() const { return std::popcount(bits); }
  bool has(int i) const { return (bits >> i) & 1u; }
  auto operator<=>(const Blade&) const = default;
};

Blade make_blade(std::initializer_list<int> indices);
std::vector<int> indices_of(Blade b);

// Sign of e_a ^ e_b relative to e_{a|b}, for disjoint a, b.
int reorder_sign(std::uint32_t a, std::uint32_t b);

class Multivector {
 public:
  using Terms = std::map<Blade, Scalar>;

  explicit Multivector(SpaceId space);

  static Multivector unit(SpaceId space, const Scalar& c = 1);
  static Multivector basis(SpaceId space, int i);
  static Multivector from_blade(SpaceId space, Blade b, const Scalar& c = 1);

  SpaceId space() const { return space_; }
  const Terms& terms() const { return terms_; }

  Scalar coeff(Blade b) const;
  Scalar scalar_part() const { return coeff(Blade{}); }
  bool is_zero() const { return terms_.empty(); }
  // Grade if nonzero and homogeneous.
  std::optional<int> grade() const;
  bool is_homogeneous(int k) const;
  Multivector grade_part(int k) const;

  void add_term(Blade b, const Scalar& c);

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Scalar& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Scalar(-1); }
  friend Multivector operator*(Multivector a, const Scalar& s) { return a *= s; }
  friend Multivector operator*(const Scalar& s, Multivector a) { return a *= s; }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

 private:
  void check_blade(Blade b) const;

  SpaceId space_;
  Terms terms_;
};

// Readable form, e.g. "2*e^h - 1/2*x*^y*". Basis names indexed by the space's
// own indices; dual names get a trailing '*'. In D the second half is dual.
std::string format(const Multivector& m, const std::vector<std::string>& names);

// Operator on the exterior algebra of a space, in canonical blade order.
class EndoMatrix {
 public:
  explicit EndoMatrix(SpaceId space);
  EndoMatrix(SpaceId space, Matrix m);

  static EndoMatrix identity(SpaceId space);
  // Column b is f(e_b).
  template <class F>
  static EndoMatrix from_map(SpaceId space, F&& f) {
    EndoMatrix out(space);
    const std::uint32_t count = 1u << space.dim();
    for (std::uint32_t c = 0; c < count; ++c) {
      Multivector image = f(Multivector::from_blade(space, Blade{c}));
      if (!(image.space() == space)) throw SpaceMismatch("EndoMatrix::from_map: image space");
      for (const auto& [b, v] : image.terms()) out.m_(b.bits, c) = v;
    }
    return out;
  }

  SpaceId space() const { return space_; }
  const Matrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  bool is_zero() const { return m_.is_zero(); }

  Multivector apply(const Multivector& x) const;
  // Matrix of the transposed operator, living on the dual algebra.
  EndoMatrix transpose() const;

  EndoMatrix& operator+=(const EndoMatrix& o);
  EndoMatrix& operator-=(const EndoMatrix& o);
  EndoMatrix& operator*=(const Scalar& s);

  friend EndoMatrix operator+(EndoMatrix a, const EndoMatrix& b) { return a += b; }
  friend EndoMatrix operator-(EndoMatrix a, const EndoMatrix& b) { return a -= b; }
  friend EndoMatrix operator*(EndoMatrix a, const Scalar& s) { return a *= s; }
  friend EndoMatrix operator*(const Scalar& s, EndoMatrix a) { return a *= s; }
  // Composition a∘b.
  friend EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b);
  friend bool operator==(const EndoMatrix& a, const EndoMatrix& b) {
    return a.space_ == b.space_ && a.m_ == b.m_;
  }

 private:
  SpaceId space_;
  Matrix m_;
};

EndoMatrix commutator(const EndoMatrix& a, const EndoMatrix& b);
EndoMatrix anticommutator(const EndoMatrix& a, const EndoMatrix& b);

Multivector wedge(const Multivector& a, const Multivector& b);

// <A, X> for A over G*, X over G: determinant pairing, zero across grades.
Scalar pair(const Multivector& a, const Multivector& x);

// Y -> X^Y.
EndoMatrix eps(const Multivector& x);

// i_X A over G*, defined by <i_X A, Y> = <A, X^Y>.
Multivector contract_by_primal(const Multivector& x, const Multivector& a);
// i_A X over G, defined by <B, i_A X> = <A^B, X>.
Multivector contract_by_dual(const Multivector& a, const Multivector& x);

// Swaps e_i <-> xi^i in D (an algebra automorphism of the exterior algebra).
Multivector swap_halves(const Multivector& u);
// <U, V> on the exterior algebra of D induced by the hyperbolic pairing.
Scalar pair_double(const Multivector& u, const Multivector& v);
// i_U V on the exterior algebra of D: <i_U V, W> = <V, U^W>.
Multivector contract_double(const Multivector& u, const Multivector& v);

// (-1)^{k(k-1)/2} on grade k.
Multivector reverse_hat(const Multivector& a);

// Embeddings G -> D, G* -> D and back.
Multivector lift_primal(const Multivector& x);
Multivector lift_dual(const Multivector& a);

using TensorSplit = std::vector<std::pair<Multivector, Multivector>>;

// U over D as sum of X_j (G part, first) wedge A_j (G* part).
TensorSplit split_double(const Multivector& u);
Multivector join_split(const TensorSplit& parts, int n);

// Same coefficients, different space tag (dimensions must agree).
Multivector retag(const Multivector& m, SpaceId to);

}  // namespace qlb
