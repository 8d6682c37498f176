#include "qlb/representation.hpp"

namespace qlb {

DoubleElement DoubleElement::basis(int n, int k) {
  return from_double(Multivector::basis(double_space(n), k));
}

DoubleElement DoubleElement::from_double(const Multivector& u) {
  const SpaceId s = u.space();
  if (s.kind != SpaceKind::Double || !(u.is_zero() || u.is_homogeneous(1)))
    throw std::invalid_argument("DoubleElement: expected a vector of D");
  auto parts = split_double(u);
  DoubleElement out{Multivector(primal_space(s.n)), Multivector(dual_space(s.n))};
  for (const auto& [x, a] : parts) {
    if (x.is_homogeneous(1))
      out.x += x * a.scalar_part();
    else
      out.xi += a * x.scalar_part();
  }
  return out;
}

Multivector DoubleElement::to_double() const { return lift_primal(x) + lift_dual(xi); }

Multivector rep_action(const QuasiLieBialgebra& q, const DoubleElement& u, const Multivector& y, const RepWeights& w) {
  if (!(y.space() == q.primal())) throw SpaceMismatch("rep_action: Y must live over G");
  const Characters ch = characters(q);
  Multivector out(q.primal());
  if (!u.x.is_zero()) {
    out += wedge(cobracket(q, u.x), y);
    out += derive(ad_action(q.mu, u.x), y);
    out += y * (w.xi_mu * pair(ch.xi_mu, u.x));
  }
  if (!u.xi.is_zero()) {
    Multivector dxi = d_operator(q.mu).apply(u.xi);
    out -= contract_by_dual(dxi, y);
    out += derive(coad_action(q.gamma, u.xi), y);
    out += wedge(contract_by_dual(u.xi, bracket_phi(q)), y) * w.phi;
    out += y * (w.x_gamma * pair(u.xi, ch.x_gamma));
  }
  return out;
}

namespace {

// Matrices of R on basis vectors of D, computed once per structure.
class RepCache {
 public:
  RepCache(const QuasiLieBialgebra& q, const RepWeights& w) : q_(q) {
    const Characters ch = characters(q);
    const EndoMatrix dmu = d_operator(q.mu);
    const Multivector phiP = bracket_phi(q);
    const SpaceId G = q.primal();
    for (int k = 0; k < q.n; ++k) {
      Multivector x = Multivector::basis(G, k);
      EndoMatrix m = eps(cobracket(q, x)) + ad_extended(q.mu, x) +
                     EndoMatrix::identity(G) * (w.xi_mu * pair(ch.xi_mu, x));
      mats_.push_back(std::move(m));
    }
    for (int k = 0; k < q.n; ++k) {
      Multivector xi = Multivector::basis(q.dual(), k);
      Multivector dxi = dmu.apply(xi);
      EndoMatrix contract =
          EndoMatrix::from_map(G, [&](const Multivector& y) { return contract_by_dual(dxi, y); });
      EndoMatrix m = derivation_extension(G, coad_action(q.gamma, xi)) - contract -
                     eps(contract_by_dual(xi, phiP)) * (-w.phi) +
                     EndoMatrix::identity(G) * (w.x_gamma * pair(xi, ch.x_gamma));
      mats_.push_back(std::move(m));
    }
  }

  // R_u for u a vector of D, by linearity.
  EndoMatrix of(const Multivector& u) const {
    EndoMatrix out(q_.primal());
    for (const auto& [b, c] : u.terms()) out += mats_[std::countr_zero(b.bits)] * c;
    return out;
  }
  const EndoMatrix& basis(int k) const { return mats_[k]; }

 private:
  const QuasiLieBialgebra& q_;
  std::vector<EndoMatrix> mats_;
};

std::string element_name(const DoubleAlgebra& d, int k) { return d.basis[k]; }

}  // namespace

EndoMatrix rep_matrix(const QuasiLieBialgebra& q, const DoubleElement& u, const RepWeights& w) {
  return RepCache(q, w).of(u.to_double());
}

ValidationReport verify_representation(const QuasiLieBialgebra& q, const RepWeights& w) {
  const DoubleAlgebra d = assemble_double(q);
  const RepCache rep(q, w);
  const int n = q.n;
  ValidationReport r;
  r.title = "representation";
  CheckBuilder xx("representation-vector-pairs", "[R_x, R_y] = R_[x,y] for x, y in G", q.basis);
  CheckBuilder xf("representation-mixed-pairs", "[R_x, R_xi] = R_[x,xi] for x in G, xi in G*", q.basis);
  CheckBuilder ff("representation-covector-pairs", "[R_xi, R_eta] = R_[xi,eta] for xi, eta in G*", q.basis);
  for (int u = 0; u < 2 * n; ++u)
    for (int v = u + 1; v < 2 * n; ++v) {
      CheckBuilder& ck = v < n ? xx : (u < n ? xf : ff);
      ck.expect(commutator(rep.basis(u), rep.basis(v)), rep.of(d.bracket(u, v)),
                [&] { return "u=" + element_name(d, u) + ", v=" + element_name(d, v); });
    }
  r.items.push_back(std::move(xx).finish());
  r.items.push_back(std::move(xf).finish());
  r.items.push_back(std::move(ff).finish());

  CheckBuilder ga("induced-action-on-endomorphisms", "Gamma_u(id) = 0 and Gamma_u(R_v) = R_[u,v]", q.basis);
  for (int u = 0; u < 2 * n; ++u) {
    ga.expect(commutator(rep.basis(u), EndoMatrix::identity(q.primal())), EndoMatrix(q.primal()),
              [&] { return "u=" + element_name(d, u) + ", T=id"; });
    for (int v = 0; v < 2 * n; ++v)
      ga.expect(commutator(rep.basis(u), rep.basis(v)), rep.of(d.bracket(u, v)),
                [&] { return "u=" + element_name(d, u) + ", T=R_" + element_name(d, v); });
  }
  r.items.push_back(std::move(ga).finish());
  return r;
}

EndoMatrix gamma_action(const QuasiLieBialgebra& q, const DoubleElement& u, const EndoMatrix& t) {
  return commutator(rep_matrix(q, u), t);
}

Multivector exp_r(const DoubleAlgebra& d) {
  const Multivector r = canonical_r(d);
  Multivector term = Multivector::unit(double_space(d.n));
  Multivector out = term;
  for (int k = 1; k <= d.n; ++k) {
    term = wedge(term, r) * Scalar(1, k);
    out += term;
  }
  return out;
}

namespace {

EndoMatrix split_to_operator(const QuasiLieBialgebra& q, const Multivector& v) {
  EndoMatrix out(q.primal());
  for (const auto& [x, a] : split_double(v)) {
    Multivector ra = reverse_hat(a);
    out += EndoMatrix::from_map(q.primal(), [&](const Multivector& y) { return wedge(x, contract_by_dual(ra, y)); });
  }
  return out;
}

void put_column(Matrix& m, std::size_t col, const EndoMatrix& op) {
  const Matrix& a = op.matrix();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r * a.cols() + c, col) = a(r, c);
}

}  // namespace

EndoMatrix q_map(const QuasiLieBialgebra& q, const Multivector& u) {
  if (!(u.space() == double_space(q.n))) throw SpaceMismatch("q_map: U must live over D");
  const DoubleAlgebra shell{q.n, BracketTable(double_space(q.n)), hyperbolic_pairing(q.n), {}};
  return split_to_operator(q, contract_double(exp_r(shell), u));
}

Matrix q_matrix(const QuasiLieBialgebra& q) {
  const std::size_t blades = std::size_t{1} << (2 * q.n);
  const DoubleAlgebra shell{q.n, BracketTable(double_space(q.n)), hyperbolic_pairing(q.n), {}};
  const Multivector e = exp_r(shell);
  Matrix m(blades, blades);
  for (std::uint32_t b = 0; b < blades; ++b)
    put_column(m, b, split_to_operator(q, contract_double(e, Multivector::from_blade(double_space(q.n), Blade{b}))));
  return m;
}

Matrix q_matrix_composed(const QuasiLieBialgebra& q) {
  const std::size_t blades = std::size_t{1} << (2 * q.n);
  const SpaceId D = double_space(q.n);
  const DoubleAlgebra shell{q.n, BracketTable(D), hyperbolic_pairing(q.n), {}};
  const Multivector e = exp_r(shell);
  Matrix contraction(blades, blades), assemble(blades, blades);
  for (std::uint32_t b = 0; b < blades; ++b) {
    Multivector u = Multivector::from_blade(D, Blade{b});
    const Multivector image = contract_double(e, u);
    for (const auto& [c, v] : image.terms()) contraction(c.bits, b) = v;
    put_column(assemble, b, split_to_operator(q, u));
  }
  return assemble * contraction;
}

ValidationReport verify_q_isomorphism(const QuasiLieBialgebra& q) {
  const int n = q.n;
  const SpaceId G = q.primal(), D = double_space(n);
  const DoubleAlgebra d = assemble_double(q);
  const RepCache rep(q, {});
  const std::uint32_t blades = 1u << (2 * n);
  std::vector<EndoMatrix> images;
  for (std::uint32_t b = 0; b < blades; ++b) images.push_back(q_map(q, Multivector::from_blade(D, Blade{b})));
  auto image_of = [&](const Multivector& u) {
    EndoMatrix out(G);
    for (const auto& [b, c] : u.terms()) out += images[b.bits] * c;
    return out;
  };

  ValidationReport r;
  r.title = "module isomorphism";
  CheckBuilder unit("q-unit", "Q(1) = identity", q.basis);
  unit.expect(images[0], EndoMatrix::identity(G), [] { return std::string("U=1"); });
  r.items.push_back(std::move(unit).finish());

  CheckBuilder wedge_ck("q-on-vectors", "Q(X) = X ^ . for X in the exterior algebra of G", q.basis);
  CheckBuilder contr_ck("q-on-covectors", "Q(A) = i_{rev A} for A in the exterior algebra of G*", q.basis);
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    Multivector x = Multivector::from_blade(G, Blade{b});
    wedge_ck.expect(images[b], eps(x), [&] { return "X=" + format(x, q.basis); });
    Multivector a = Multivector::from_blade(q.dual(), Blade{b});
    Multivector ra = reverse_hat(a);
    contr_ck.expect(images[b << n],
                    EndoMatrix::from_map(G, [&](const Multivector& y) { return contract_by_dual(ra, y); }),
                    [&] { return "A=" + format(a, q.basis); });
  }
  r.items.push_back(std::move(wedge_ck).finish());
  r.items.push_back(std::move(contr_ck).finish());

  CheckBuilder inter("q-intertwining", "Gamma_u(Q(U)) = Q(ad_u U) for u in D and U in the exterior algebra of D",
                     d.basis);
  for (int k = 0; k < 2 * n; ++k) {
    Multivector u = Multivector::basis(D, k);
    for (std::uint32_t b = 0; b < blades; ++b) {
      Multivector big = Multivector::from_blade(D, Blade{b});
      inter.expect(commutator(rep.basis(k), images[b]), image_of(schouten(d.bracket, u, big)),
                   [&] { return "u=" + d.basis[k] + ", U=" + format(big, d.basis); });
    }
  }
  r.items.push_back(std::move(inter).finish());

  const Matrix qm = q_matrix(q);
  CheckBuilder rk("q-full-rank", "rank of Q over the blade bases is 4^n", q.basis);
  const std::size_t qm_rank = rank(qm);
  r.measurements["q_rank"] = std::to_string(qm_rank);
  rk.expect(Scalar(static_cast<long>(qm_rank)), Scalar(static_cast<long>(blades)),
            [] { return std::string("rank"); });
  r.items.push_back(std::move(rk).finish());

  CheckBuilder comp("q-composition", "Q agrees with the composite of i_{exp r} and X^A -> X ^ i_{rev A}", q.basis);
  comp.expect_true(qm == q_matrix_composed(q), [] { return std::string("matrix comparison"); },
                   [] { return std::string("matrices differ"); });
  r.items.push_back(std::move(comp).finish());
  return r;
}

}  // namespace qlb
