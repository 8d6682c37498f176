#include "qlb/exterior.hpp"

#include <sstream>

namespace qlb {

SpaceId dual_of(SpaceId s) {
  switch (s.kind) {
    case SpaceKind::Primal: return dual_space(s.n);
    case SpaceKind::Dual: return primal_space(s.n);
    case SpaceKind::Double: return s;
  }
  return s;
}

std::string describe(SpaceId s) {
  switch (s.kind) {
    case SpaceKind::Primal: return "G(" + std::to_string(s.n) + ")";
    case SpaceKind::Dual: return "G*(" + std::to_string(s.n) + ")";
    case SpaceKind::Double: return "D(" + std::to_string(s.n) + ")";
  }
  return "?";
}

Blade make_blade(std::initializer_list<int> indices) {
  Blade b;
  for (int i : indices) {
    if (i < 0 || i >= max_dimension) throw std::out_of_range("blade index out of range");
    if (b.has(i)) throw std::invalid_argument("repeated index in blade");
    b.bits |= 1u << i;
  }
  return b;
}

std::vector<int> indices_of(Blade b) {
  std::vector<int> out;
  for (std::uint32_t m = b.bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t m = b; m; m &= m - 1) {
    int j = std::countr_zero(m);
    swaps += std::popcount(j + 1 >= 32 ? 0u : a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

// ---- Multivector ----------------------------------------------------------

Multivector::Multivector(SpaceId space) : space_(space) {
  if (space.n < 0 || space.dim() > max_dimension)
    throw std::invalid_argument("unsupported dimension for " + describe(space));
}

Multivector Multivector::unit(SpaceId space, const Scalar& c) {
  Multivector m(space);
  m.add_term(Blade{}, c);
  return m;
}

Multivector Multivector::basis(SpaceId space, int i) {
  if (i < 0 || i >= space.dim()) throw std::out_of_range("basis index out of range");
  return from_blade(space, Blade{1u << i});
}

Multivector Multivector::from_blade(SpaceId space, Blade b, const Scalar& c) {
  Multivector m(space);
  m.add_term(b, c);
  return m;
}

void Multivector::check_blade(Blade b) const {
  if (space_.dim() < 32 && (b.bits >> space_.dim()) != 0)
    throw std::out_of_range("blade outside " + describe(space_));
}

Scalar Multivector::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> Multivector::grade() const {
  if (terms_.empty()) return std::nullopt;
  int g = terms_.begin()->first.grade();
  for (const auto& [b, v] : terms_)
    if (b.grade() != g) return std::nullopt;
  return g;
}

bool Multivector::is_homogeneous(int k) const {
  for (const auto& [b, v] : terms_)
    if (b.grade() != k) return false;
  return true;
}

Multivector Multivector::grade_part(int k) const {
  Multivector out(space_);
  for (const auto& [b, v] : terms_)
    if (b.grade() == k) out.terms_.emplace(b, v);
  return out;
}

void Multivector::add_term(Blade b, const Scalar& c) {
  check_blade(b);
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(b, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (!(space_ == o.space_)) throw SpaceMismatch("add: " + describe(space_) + " vs " + describe(o.space_));
  for (const auto& [b, v] : o.terms_) add_term(b, v);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (!(space_ == o.space_)) throw SpaceMismatch("sub: " + describe(space_) + " vs " + describe(o.space_));
  for (const auto& [b, v] : o.terms_) add_term(b, -v);
  return *this;
}

Multivector& Multivector::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= s;
  return *this;
}

std::string format(const Multivector& m, const std::vector<std::string>& names) {
  if (m.is_zero()) return "0";
  const SpaceId s = m.space();
  auto name = [&](int i) -> std::string {
    int base = i;
    bool starred = s.kind == SpaceKind::Dual;
    if (s.kind == SpaceKind::Double && i >= s.n) {
      base = i - s.n;
      starred = true;
    }
    std::string nm = base < static_cast<int>(names.size()) ? names[base] : "e" + std::to_string(base + 1);
    return starred ? nm + "*" : nm;
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, v] : m.terms()) {
    Scalar mag = abs(v);
    if (first) {
      if (sgn(v) < 0) os << "-";
    } else {
      os << (sgn(v) < 0 ? " - " : " + ");
    }
    first = false;
    if (b.bits == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    bool lead = true;
    for (int i : indices_of(b)) {
      if (!lead) os << "^";
      os << name(i);
      lead = false;
    }
  }
  return os.str();
}

// ---- EndoMatrix -----------------------------------------------------------

namespace {

std::size_t algebra_size(SpaceId s) {
  if (s.dim() > 20) throw std::invalid_argument("exterior algebra too large for dense matrices");
  return std::size_t{1} << s.dim();
}

}  // namespace

EndoMatrix::EndoMatrix(SpaceId space) : space_(space), m_(algebra_size(space), algebra_size(space)) {}

EndoMatrix::EndoMatrix(SpaceId space, Matrix m) : space_(space), m_(std::move(m)) {
  if (m_.rows() != algebra_size(space) || m_.cols() != m_.rows())
    throw std::invalid_argument("EndoMatrix: wrong shape for " + describe(space));
}

EndoMatrix EndoMatrix::identity(SpaceId space) {
  return EndoMatrix(space, Matrix::identity(algebra_size(space)));
}

Multivector EndoMatrix::apply(const Multivector& x) const {
  if (!(x.space() == space_)) throw SpaceMismatch("EndoMatrix::apply: " + describe(x.space()) + " vs " + describe(space_));
  Multivector out(space_);
  for (const auto& [b, v] : x.terms())
    for (std::size_t r = 0; r < m_.rows(); ++r)
      if (sgn(m_(r, b.bits)) != 0) out.add_term(Blade{static_cast<std::uint32_t>(r)}, m_(r, b.bits) * v);
  return out;
}

EndoMatrix EndoMatrix::transpose() const { return EndoMatrix(dual_of(space_), m_.transpose()); }

EndoMatrix& EndoMatrix::operator+=(const EndoMatrix& o) {
  if (!(space_ == o.space_)) throw SpaceMismatch("EndoMatrix add");
  m_ += o.m_;
  return *this;
}

EndoMatrix& EndoMatrix::operator-=(const EndoMatrix& o) {
  if (!(space_ == o.space_)) throw SpaceMismatch("EndoMatrix sub");
  m_ -= o.m_;
  return *this;
}

EndoMatrix& EndoMatrix::operator*=(const Scalar& s) {
  m_ *= s;
  return *this;
}

EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b) {
  if (!(a.space_ == b.space_)) throw SpaceMismatch("EndoMatrix compose");
  return EndoMatrix(a.space_, a.m_ * b.m_);
}

EndoMatrix commutator(const EndoMatrix& a, const EndoMatrix& b) { return a * b - b * a; }
EndoMatrix anticommutator(const EndoMatrix& a, const EndoMatrix& b) { return a * b + b * a; }

// ---- products and contractions ---------------------------------------------

namespace {

void require_same(const Multivector& a, const Multivector& b, const char* what) {
  if (!(a.space() == b.space()))
    throw SpaceMismatch(std::string(what) + ": " + describe(a.space()) + " vs " + describe(b.space()));
}

void require_dual(const Multivector& a, const Multivector& x, const char* what) {
  if (a.space().kind != SpaceKind::Dual || x.space().kind != SpaceKind::Primal || a.space().n != x.space().n)
    throw SpaceMismatch(std::string(what) + ": expected G* and G, got " + describe(a.space()) + ", " +
                        describe(x.space()));
}

// e_I contracted into e_J: sign(I, J\I) e_{J\I} when I is inside J.
Multivector left_contract(const Multivector& by, const Multivector& on, SpaceId out_space) {
  Multivector out(out_space);
  for (const auto& [i, u] : by.terms())
    for (const auto& [j, v] : on.terms()) {
      if (i.bits & ~j.bits) continue;
      std::uint32_t rest = j.bits & ~i.bits;
      out.add_term(Blade{rest}, reorder_sign(i.bits, rest) * u * v);
    }
  return out;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) {
  require_same(a, b, "wedge");
  Multivector out(a.space());
  for (const auto& [x, u] : a.terms())
    for (const auto& [y, v] : b.terms()) {
      if (x.bits & y.bits) continue;
      out.add_term(Blade{x.bits | y.bits}, reorder_sign(x.bits, y.bits) * u * v);
    }
  return out;
}

Scalar pair(const Multivector& a, const Multivector& x) {
  require_dual(a, x, "pair");
  Scalar s = 0;
  for (const auto& [b, v] : a.terms()) {
    auto it = x.terms().find(b);
    if (it != x.terms().end()) s += v * it->second;
  }
  return s;
}

EndoMatrix eps(const Multivector& x) {
  return EndoMatrix::from_map(x.space(), [&](const Multivector& y) { return wedge(x, y); });
}

Multivector contract_by_primal(const Multivector& x, const Multivector& a) {
  require_dual(a, x, "contract_by_primal");
  return left_contract(retag(x, a.space()), a, a.space());
}

Multivector contract_by_dual(const Multivector& a, const Multivector& x) {
  require_dual(a, x, "contract_by_dual");
  return left_contract(retag(a, x.space()), x, x.space());
}

Multivector swap_halves(const Multivector& u) {
  if (u.space().kind != SpaceKind::Double) throw SpaceMismatch("swap_halves: expected D");
  const int n = u.space().n;
  const std::uint32_t low = (1u << n) - 1;
  Multivector out(u.space());
  for (const auto& [b, v] : u.terms()) {
    std::uint32_t lo = b.bits & low, hi = b.bits >> n;
    out.add_term(Blade{(lo << n) | hi}, reorder_sign(lo << n, hi) * v);
  }
  return out;
}

Scalar pair_double(const Multivector& u, const Multivector& v) {
  require_same(u, v, "pair_double");
  if (u.space().kind != SpaceKind::Double) throw SpaceMismatch("pair_double: expected D");
  Multivector t = swap_halves(u);
  Scalar s = 0;
  for (const auto& [b, c] : t.terms()) s += c * v.coeff(b);
  return s;
}

Multivector contract_double(const Multivector& u, const Multivector& v) {
  require_same(u, v, "contract_double");
  if (u.space().kind != SpaceKind::Double) throw SpaceMismatch("contract_double: expected D");
  return left_contract(swap_halves(u), v, v.space());
}

Multivector reverse_hat(const Multivector& a) {
  Multivector out(a.space());
  for (const auto& [b, v] : a.terms()) {
    int k = b.grade();
    out.add_term(b, ((k * (k - 1) / 2) % 2) ? Scalar(-v) : v);
  }
  return out;
}

Multivector lift_primal(const Multivector& x) {
  if (x.space().kind != SpaceKind::Primal) throw SpaceMismatch("lift_primal: expected G");
  Multivector out(double_space(x.space().n));
  for (const auto& [b, v] : x.terms()) out.add_term(b, v);
  return out;
}

Multivector lift_dual(const Multivector& a) {
  if (a.space().kind != SpaceKind::Dual) throw SpaceMismatch("lift_dual: expected G*");
  const int n = a.space().n;
  Multivector out(double_space(n));
  for (const auto& [b, v] : a.terms()) out.add_term(Blade{b.bits << n}, v);
  return out;
}

TensorSplit split_double(const Multivector& u) {
  if (u.space().kind != SpaceKind::Double) throw SpaceMismatch("split_double: expected D");
  const int n = u.space().n;
  const std::uint32_t low = (1u << n) - 1;
  TensorSplit out;
  // Ascending order already lists G indices before G* indices: no sign.
  for (const auto& [b, v] : u.terms())
    out.emplace_back(Multivector::from_blade(primal_space(n), Blade{b.bits & low}),
                     Multivector::from_blade(dual_space(n), Blade{b.bits >> n}, v));
  return out;
}

Multivector join_split(const TensorSplit& parts, int n) {
  Multivector out(double_space(n));
  for (const auto& [x, a] : parts) out += wedge(lift_primal(x), lift_dual(a));
  return out;
}

Multivector retag(const Multivector& m, SpaceId to) {
  if (m.space().dim() != to.dim()) throw SpaceMismatch("retag: dimension mismatch");
  Multivector out(to);
  for (const auto& [b, v] : m.terms()) out.add_term(b, v);
  return out;
}

}  // namespace qlb
