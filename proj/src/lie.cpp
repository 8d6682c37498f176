#include "qlb/lie.hpp"

#include <stdexcept>

namespace qlb {

namespace {

void require_vector(const Multivector& x, SpaceId space, const char* what) {
  if (!(x.space() == space)) throw SpaceMismatch(std::string(what) + ": wrong space " + describe(x.space()));
  if (!x.is_homogeneous(1)) throw std::invalid_argument(std::string(what) + ": expected a grade-1 element");
}

int index_of(Blade b) { return std::countr_zero(b.bits); }

Multivector blade_without(SpaceId s, const std::vector<int>& idx, int skip_a, int skip_b = -1) {
  Blade b;
  for (int t = 0; t < static_cast<int>(idx.size()); ++t)
    if (t != skip_a && t != skip_b) b.bits |= 1u << idx[t];
  return Multivector::from_blade(s, b);
}

}  // namespace

BracketTable::BracketTable(SpaceId space)
    : space_(space), upper_(static_cast<std::size_t>(space.dim()) * space.dim(), Multivector(space)) {}

Multivector BracketTable::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim() || j >= dim()) throw std::out_of_range("bracket index out of range");
  if (i == j) return Multivector(space_);
  if (i < j) return upper_[slot(i, j)];
  return -upper_[slot(j, i)];
}

Scalar BracketTable::constant(int i, int j, int k) const { return (*this)(i, j).coeff(Blade{1u << k}); }

void BracketTable::set(int i, int j, const Multivector& value) {
  if (i < 0 || j < 0 || i >= dim() || j >= dim()) throw std::out_of_range("bracket index out of range");
  if (!(value.space() == space_)) throw SpaceMismatch("BracketTable::set: value space");
  if (!value.is_homogeneous(1)) throw std::invalid_argument("BracketTable::set: value must be grade 1");
  if (i == j) {
    if (!value.is_zero()) throw std::invalid_argument("BracketTable::set: b(x,x) must vanish");
    return;
  }
  if (i < j)
    upper_[slot(i, j)] = value;
  else
    upper_[slot(j, i)] = -value;
}

void BracketTable::set_constant(int i, int j, int k, const Scalar& c) {
  if (k < 0 || k >= dim()) throw std::out_of_range("bracket index out of range");
  Multivector v = (*this)(i, j);
  Scalar delta = c - v.coeff(Blade{1u << k});
  v.add_term(Blade{1u << k}, delta);
  set(i, j, v);
}

Multivector BracketTable::apply(const Multivector& x, const Multivector& y) const {
  require_vector(x, space_, "bracket");
  require_vector(y, space_, "bracket");
  Multivector out(space_);
  for (const auto& [a, u] : x.terms())
    for (const auto& [b, v] : y.terms()) out += (*this)(index_of(a), index_of(b)) * (u * v);
  return out;
}

bool BracketTable::is_zero() const {
  for (const auto& v : upper_)
    if (!v.is_zero()) return false;
  return true;
}

BracketTable BracketTable::retagged(SpaceId to) const {
  if (to.dim() != dim()) throw SpaceMismatch("BracketTable::retagged: dimension");
  BracketTable out(to);
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j) out.set(i, j, retag((*this)(i, j), to));
  return out;
}

std::vector<JacobiDefect> jacobi_defect(const BracketTable& b) {
  std::vector<JacobiDefect> out;
  const SpaceId s = b.space();
  auto e = [&](int i) { return Multivector::basis(s, i); };
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j)
      for (int k = j + 1; k < b.dim(); ++k) {
        Multivector J = b.apply(b(i, j), e(k)) + b.apply(b(j, k), e(i)) + b.apply(b(k, i), e(j));
        if (!J.is_zero()) out.push_back({i, j, k, J});
      }
  return out;
}

Matrix ad_action(const BracketTable& b, const Multivector& x) {
  require_vector(x, b.space(), "ad_action");
  Matrix m(b.dim(), b.dim());
  for (int j = 0; j < b.dim(); ++j) {
    Multivector col = b.apply(x, Multivector::basis(b.space(), j));
    for (const auto& [bl, v] : col.terms()) m(index_of(bl), j) = v;
  }
  return m;
}

Matrix coad_action(const BracketTable& b, const Multivector& x) {
  return ad_action(b, x).transpose() * Scalar(-1);
}

Multivector derive(const Matrix& on_vectors, const Multivector& x) {
  const SpaceId s = x.space();
  if (on_vectors.rows() != static_cast<std::size_t>(s.dim()) || on_vectors.cols() != on_vectors.rows())
    throw std::invalid_argument("derive: matrix does not match space");
  Multivector out(s);
  for (const auto& [bl, c] : x.terms()) {
    // D(x_1^...^x_k) = sum_t x_1^..^D(x_t)^..^x_k; replacing x_t by e_r in place.
    for (int t : indices_of(bl)) {
      std::uint32_t rest = bl.bits & ~(1u << t);
      for (int r = 0; r < s.dim(); ++r) {
        const Scalar& v = on_vectors(r, t);
        if (sgn(v) == 0 || (rest >> r & 1u)) continue;
        // Moving e_r from position of t: sign relative to the blade with t.
        int sign = reorder_sign(1u << t, rest) * reorder_sign(1u << r, rest);
        out.add_term(Blade{rest | (1u << r)}, sign * v * c);
      }
    }
  }
  return out;
}

EndoMatrix derivation_extension(SpaceId space, const Matrix& on_vectors) {
  return EndoMatrix::from_map(space, [&](const Multivector& y) { return derive(on_vectors, y); });
}

EndoMatrix ad_extended(const BracketTable& b, const Multivector& x) {
  return derivation_extension(b.space(), ad_action(b, x));
}

EndoMatrix coad_extended(const BracketTable& b, const Multivector& x) {
  return derivation_extension(dual_of(b.space()), coad_action(b, x));
}

Multivector schouten(const BracketTable& b, const Multivector& x, const Multivector& y) {
  const SpaceId s = b.space();
  if (!(x.space() == s) || !(y.space() == s)) throw SpaceMismatch("schouten: operand space");
  Multivector out(s);
  for (const auto& [xb, u] : x.terms()) {
    if (xb.bits == 0) continue;
    auto xs = indices_of(xb);
    for (const auto& [yb, v] : y.terms()) {
      if (yb.bits == 0) continue;
      auto ys = indices_of(yb);
      for (int i = 0; i < static_cast<int>(xs.size()); ++i)
        for (int j = 0; j < static_cast<int>(ys.size()); ++j) {
          Multivector br = b(xs[i], ys[j]);
          if (br.is_zero()) continue;
          Multivector term = wedge(wedge(br, blade_without(s, xs, i)), blade_without(s, ys, j));
          out += term * (((i + j) % 2 ? -1 : 1) * u * v);
        }
    }
  }
  return out;
}

Multivector boundary(const BracketTable& b, const Multivector& x) {
  const SpaceId s = b.space();
  if (!(x.space() == s)) throw SpaceMismatch("boundary: operand space");
  Multivector out(s);
  for (const auto& [xb, u] : x.terms()) {
    auto xs = indices_of(xb);
    for (int i = 0; i < static_cast<int>(xs.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(xs.size()); ++j) {
        Multivector br = b(xs[i], xs[j]);
        if (br.is_zero()) continue;
        out += wedge(br, blade_without(s, xs, i, j)) * (((i + j) % 2 ? -1 : 1) * u);
      }
  }
  return out;
}

EndoMatrix boundary_operator(const BracketTable& b) {
  return EndoMatrix::from_map(b.space(), [&](const Multivector& x) { return boundary(b, x); });
}

EndoMatrix d_operator(const BracketTable& b) { return boundary_operator(b).transpose(); }

std::vector<std::size_t> cohomology_dimensions(const BracketTable& b) {
  const int n = b.dim();
  EndoMatrix d = d_operator(b);
  std::vector<std::vector<std::uint32_t>> by_grade(n + 2);
  for (std::uint32_t m = 0; m < (1u << n); ++m) by_grade[std::popcount(m)].push_back(m);
  auto block_rank = [&](int k) -> std::size_t {
    if (k < 0 || k >= n) return 0;
    const auto& src = by_grade[k];
    const auto& dst = by_grade[k + 1];
    Matrix blk(dst.size(), src.size());
    for (std::size_t r = 0; r < dst.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) blk(r, c) = d.matrix()(dst[r], src[c]);
    return rank(blk);
  };
  std::vector<std::size_t> h(n + 1);
  for (int k = 0; k <= n; ++k) h[k] = by_grade[k].size() - block_rank(k) - block_rank(k - 1);
  return h;
}

// ---- cochains ----------------------------------------------------------------

namespace {

SpaceId value_space_for(const BracketTable& b, const CoefficientModule& m) {
  return m.kind == CoefficientModule::Kind::Coadjoint ? dual_of(b.space()) : b.space();
}

}  // namespace

Multivector Cochain::evaluate(const std::vector<int>& args) const {
  Blade b;
  for (int a : args) {
    if (b.has(a)) return Multivector(value_space);
    b.bits |= 1u << a;
  }
  // Sign of sorting args into ascending order.
  int sign = 1;
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = i + 1; j < args.size(); ++j)
      if (args[i] > args[j]) sign = -sign;
  auto it = values.find(b);
  if (it == values.end()) return Multivector(value_space);
  return it->second * Scalar(sign);
}

Cochain zero_cochain(const BracketTable& b, CochainSpace shape) {
  if (shape.degree < 0 || shape.degree > b.dim()) throw std::invalid_argument("cochain degree out of range");
  return Cochain{shape, value_space_for(b, shape.module), {}};
}

Multivector module_action(const BracketTable& b, const CoefficientModule& m, int x, const Multivector& v) {
  Multivector ex = Multivector::basis(b.space(), x);
  switch (m.kind) {
    case CoefficientModule::Kind::Trivial: return Multivector(v.space());
    case CoefficientModule::Kind::Adjoint: return schouten(b, ex, v);
    case CoefficientModule::Kind::Coadjoint: return derive(coad_action(b, ex), v);
  }
  return Multivector(v.space());
}

Cochain ce_differential(const BracketTable& b, const Cochain& alpha) {
  const int k = alpha.shape.degree;
  if (k + 1 > b.dim()) throw std::invalid_argument("ce_differential: degree overflow");
  Cochain out = zero_cochain(b, {k + 1, alpha.shape.module});
  const int n = b.dim();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k + 1) continue;
    auto xs = indices_of(Blade{mask});
    Multivector val(out.value_space);
    for (int i = 0; i <= k; ++i) {
      std::vector<int> rest;
      for (int t = 0; t <= k; ++t)
        if (t != i) rest.push_back(xs[t]);
      Multivector term = module_action(b, alpha.shape.module, xs[i], alpha.evaluate(rest));
      val += term * Scalar(i % 2 ? -1 : 1);
    }
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        Multivector br = b(xs[i], xs[j]);
        for (const auto& [bl, c] : br.terms()) {
          std::vector<int> args{index_of(bl)};
          for (int t = 0; t <= k; ++t)
            if (t != i && t != j) args.push_back(xs[t]);
          val += alpha.evaluate(args) * (((i + j) % 2 ? -1 : 1) * c);
        }
      }
    if (!val.is_zero()) out.values.emplace(Blade{mask}, val);
  }
  return out;
}

}  // namespace qlb
