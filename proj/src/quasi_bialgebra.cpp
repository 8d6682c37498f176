#include "qlb/quasi_bialgebra.hpp"

#include <functional>
#include <optional>

namespace qlb {

QuasiLieBialgebra::QuasiLieBialgebra(std::vector<std::string> basis_names, BracketTable mu_, BracketTable gamma_,
                                     Multivector phi_)
    : n(mu_.dim()), basis(std::move(basis_names)), mu(std::move(mu_)), gamma(std::move(gamma_)),
      phi(std::move(phi_)) {
  if (basis.empty()) basis = default_names(n);
  if (static_cast<int>(basis.size()) != n) throw std::invalid_argument("basis names do not match dimension");
  if (!(mu.space() == primal_space(n))) throw SpaceMismatch("mu must be a bracket on G");
  if (!(gamma.space() == dual_space(n))) throw SpaceMismatch("gamma must be stored as a bracket on G*");
  if (!(phi.space() == primal_space(n))) throw SpaceMismatch("phi must live in the exterior algebra of G");
  if (!phi.is_homogeneous(3)) throw std::invalid_argument("phi must be homogeneous of grade 3");
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

Multivector cobracket(const QuasiLieBialgebra& q, const Multivector& x) {
  if (!(x.space() == q.primal()) || !x.is_homogeneous(1)) throw std::invalid_argument("cobracket: expected x in G");
  Multivector out(q.primal());
  for (const auto& [bx, c] : x.terms()) {
    int k = std::countr_zero(bx.bits);
    for (int i = 0; i < q.n; ++i)
      for (int j = i + 1; j < q.n; ++j) {
        Scalar g = q.gamma.constant(i, j, k);
        if (sgn(g) != 0) out.add_term(Blade{(1u << i) | (1u << j)}, -g * c);
      }
  }
  return out;
}

BracketTable dual_table_from_cocycle(int n, const std::vector<Multivector>& values) {
  if (static_cast<int>(values.size()) != n) throw std::invalid_argument("dual_table_from_cocycle: need n values");
  BracketTable t(dual_space(n));
  for (int k = 0; k < n; ++k) {
    if (!values[k].is_homogeneous(2)) throw std::invalid_argument("cocycle values must be grade 2");
    for (const auto& [b, v] : values[k].terms()) {
      auto ij = indices_of(b);
      t.set_constant(ij[0], ij[1], k, t.constant(ij[0], ij[1], k) - v);
    }
  }
  return t;
}

Multivector bracket_phi(const QuasiLieBialgebra& q) { return -q.phi; }

Multivector phi_pair(const QuasiLieBialgebra& q, const Multivector& xi, const Multivector& eta) {
  return contract_by_dual(wedge(xi, eta), bracket_phi(q));
}

Multivector coad_mu(const QuasiLieBialgebra& q, const Multivector& x, const Multivector& xi) {
  return derive(coad_action(q.mu, x), xi);
}

Multivector coad_gamma(const QuasiLieBialgebra& q, const Multivector& xi, const Multivector& x) {
  return derive(coad_action(q.gamma, xi), x);
}

Characters characters(const QuasiLieBialgebra& q) {
  Characters c{Multivector(q.dual()), Multivector(q.primal())};
  for (int i = 0; i < q.n; ++i) {
    Scalar tm = 0, tg = 0;
    for (int j = 0; j < q.n; ++j) {
      tm += q.mu.constant(i, j, j);
      tg += q.gamma.constant(i, j, j);
    }
    c.xi_mu.add_term(Blade{1u << i}, tm);
    c.x_gamma.add_term(Blade{1u << i}, tg);
  }
  return c;
}

// ---- shared evaluation context ----------------------------------------------

namespace {

class Ctx {
 public:
  explicit Ctx(const QuasiLieBialgebra& q)
      : q(q), n(q.n), G(q.primal()), Gs(q.dual()), phiP(bracket_phi(q)) {
    for (int i = 0; i < n; ++i) {
      am.push_back(coad_action(q.mu, e(i)));
      ag.push_back(coad_action(q.gamma, f(i)));
    }
  }

  const QuasiLieBialgebra& q;
  int n;
  SpaceId G, Gs;
  Multivector phiP;
  std::vector<Matrix> am;  // ad*_{e_i} on G*
  std::vector<Matrix> ag;  // ad^{gamma*}_{xi^i} on G

  Multivector e(int i) const { return Multivector::basis(G, i); }
  Multivector f(int i) const { return Multivector::basis(Gs, i); }
  Multivector blade(Blade b) const { return Multivector::from_blade(G, b); }
  Multivector dual_blade(Blade b) const { return Multivector::from_blade(Gs, b); }

  Matrix am_of(const Multivector& x) const { return combine(am, x); }
  Matrix ag_of(const Multivector& xi) const { return combine(ag, xi); }

  Multivector AM(const Multivector& x, const Multivector& xi) const { return derive(am_of(x), xi); }
  Multivector AG(const Multivector& xi, const Multivector& x) const { return derive(ag_of(xi), x); }
  Multivector PHI(const Multivector& xi, const Multivector& eta) const {
    return contract_by_dual(wedge(xi, eta), phiP);
  }
  Multivector mu(const Multivector& x, const Multivector& y) const { return q.mu.apply(x, y); }
  Multivector gam(const Multivector& xi, const Multivector& eta) const { return q.gamma.apply(xi, eta); }

  const EndoMatrix& d_mu() const { return lazy(d_mu_, [&] { return d_operator(q.mu); }); }
  const EndoMatrix& bd_mu() const { return lazy(bd_mu_, [&] { return boundary_operator(q.mu); }); }
  const EndoMatrix& d_gam() const { return lazy(d_gam_, [&] { return d_operator(q.gamma); }); }
  const EndoMatrix& bd_gam() const { return lazy(bd_gam_, [&] { return boundary_operator(q.gamma); }); }

  EndoMatrix contract_on_primal(const Multivector& a) const {
    return EndoMatrix::from_map(G, [&](const Multivector& y) { return contract_by_dual(a, y); });
  }
  EndoMatrix contract_on_dual(const Multivector& x) const {
    return EndoMatrix::from_map(Gs, [&](const Multivector& b) { return contract_by_primal(x, b); });
  }

  std::string g(int i) const { return q.basis[i]; }
  std::string gs(int i) const { return q.basis[i] + "*"; }
  std::string show(const Multivector& m) const { return format(m, q.basis); }

 private:
  Matrix combine(const std::vector<Matrix>& ms, const Multivector& v) const {
    Matrix out(n, n);
    for (const auto& [b, c] : v.terms()) {
      if (b.grade() != 1) throw std::invalid_argument("expected a grade-1 element");
      out += ms[std::countr_zero(b.bits)] * c;
    }
    return out;
  }

  template <class F>
  static const EndoMatrix& lazy(std::optional<EndoMatrix>& slot, F&& make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }

  mutable std::optional<EndoMatrix> d_mu_, bd_mu_, d_gam_, bd_gam_;
};

Multivector omit(const Ctx& c, Blade b, int pos, bool dual = false) {
  auto idx = indices_of(b);
  Blade r;
  for (int t = 0; t < static_cast<int>(idx.size()); ++t)
    if (t != pos) r.bits |= 1u << idx[t];
  return dual ? c.dual_blade(r) : c.blade(r);
}

Scalar sign_of(int parity) { return parity % 2 ? Scalar(-1) : Scalar(1); }

std::uint32_t all_blades(int n) { return 1u << n; }

// ---- axioms -----------------------------------------------------------------

CheckItem check_jacobi(const Ctx& c) {
  CheckBuilder ck("mu-jacobi", "the bracket on G satisfies the Jacobi identity", c.q.basis);
  auto defects = jacobi_defect(c.q.mu);
  ck.expect_true(defects.empty(),
                 [&] {
                   const auto& d = defects.front();
                   return "(" + c.g(d.i) + "," + c.g(d.j) + "," + c.g(d.k) + ")";
                 },
                 [&] { return c.show(defects.front().value); });
  return std::move(ck).finish();
}

CheckItem check_cocycle(const Ctx& c) {
  CheckBuilder ck("gamma-cocycle", "gamma(mu(x,y)) = [x,gamma(y)] - [y,gamma(x)]", c.q.basis);
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j) {
      Multivector lhs = cobracket(c.q, c.mu(c.e(i), c.e(j)));
      Multivector rhs = schouten(c.q.mu, c.e(i), cobracket(c.q, c.e(j))) -
                        schouten(c.q.mu, c.e(j), cobracket(c.q, c.e(i)));
      ck.expect(lhs, rhs, [&] { return "x=" + c.g(i) + ", y=" + c.g(j); });
    }
  return std::move(ck).finish();
}

CheckItem check_cocycle_ce(const Ctx& c) {
  CheckBuilder ck("gamma-cocycle-ce", "the Chevalley-Eilenberg coboundary of gamma vanishes", c.q.basis);
  Cochain g = zero_cochain(c.q.mu, {1, {CoefficientModule::Kind::Adjoint, 2}});
  for (int k = 0; k < c.n; ++k) {
    Multivector v = cobracket(c.q, c.e(k));
    if (!v.is_zero()) g.values.emplace(Blade{1u << k}, v);
  }
  Cochain dg = ce_differential(c.q.mu, g);
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j)
      ck.expect(dg.evaluate({i, j}), Multivector(c.G), [&] { return "x=" + c.g(i) + ", y=" + c.g(j); });
  return std::move(ck).finish();
}

// Apply gamma (as G -> G(x)G through the antisymmetric embedding) to slot 0.
Tensor gamma_first_slot(const Ctx& c, const Tensor& t) {
  Tensor out(c.n, t.rank() + 1);
  std::vector<Tensor> images;
  for (int p = 0; p < c.n; ++p) images.push_back(embed(cobracket(c.q, c.e(p)), 2));
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (sgn(t[flat]) == 0) continue;
    auto idx = t.unflatten(flat);
    const Tensor& img = images[idx[0]];
    for (std::size_t g = 0; g < img.size(); ++g) {
      if (sgn(img[g]) == 0) continue;
      auto ab = img.unflatten(g);
      std::vector<int> slot{ab[0], ab[1]};
      slot.insert(slot.end(), idx.begin() + 1, idx.end());
      out.at(slot) += img[g] * t[flat];
    }
  }
  return out;
}

CheckItem check_cojacobi(const Ctx& c) {
  CheckBuilder ck("cojacobi-controlled-by-phi", "1/2 Alt(gamma (x) 1) gamma(x) = [x, phi] for every x", c.q.basis);
  for (int k = 0; k < c.n; ++k) {
    Tensor lhs = alt(gamma_first_slot(c, embed(cobracket(c.q, c.e(k)), 2)));
    lhs *= Scalar(1, 2);
    Tensor rhs = embed(schouten(c.q.mu, c.e(k), c.q.phi), 3);
    ck.expect(lhs, rhs, [&] { return "x=" + c.g(k); });
  }
  return std::move(ck).finish();
}

CheckItem check_phi_alt(const Ctx& c) {
  CheckBuilder ck("phi-alt-closed", "Alt(gamma (x) 1 (x) 1)(phi) = 0", c.q.basis);
  Tensor lhs = alt(gamma_first_slot(c, embed(c.q.phi, 3)));
  ck.expect(lhs, Tensor(c.n, 4), [] { return std::string("phi"); });
  return std::move(ck).finish();
}

// ---- relations on vectors ----------------------------------------------------

CheckItem rel_coad_mu_hom(const Ctx& c) {
  CheckBuilder ck("coad-mu-homomorphism", "ad*_{mu(x,y)} = [ad*_x, ad*_y]", c.q.basis);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      for (int k = 0; k < c.n; ++k) {
        auto x = c.e(i), y = c.e(j), xi = c.f(k);
        ck.expect(c.AM(c.mu(x, y), xi), c.AM(x, c.AM(y, xi)) - c.AM(y, c.AM(x, xi)),
                  [&] { return "x=" + c.g(i) + ", y=" + c.g(j) + ", xi=" + c.gs(k); });
      }
  return std::move(ck).finish();
}

CheckItem rel_gamma_coad_on_mu(const Ctx& c) {
  CheckBuilder ck("gamma-coad-on-mu",
                  "ad^g*_xi mu(x,y) = mu(ad^g*_xi x, y) + mu(x, ad^g*_xi y) + ad^g*_{ad*_y xi} x - ad^g*_{ad*_x xi} y",
                  c.q.basis);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      for (int k = 0; k < c.n; ++k) {
        auto x = c.e(i), y = c.e(j), xi = c.f(k);
        Multivector rhs = c.mu(c.AG(xi, x), y) + c.mu(x, c.AG(xi, y)) + c.AG(c.AM(y, xi), x) - c.AG(c.AM(x, xi), y);
        ck.expect(c.AG(xi, c.mu(x, y)), rhs, [&] { return "x=" + c.g(i) + ", y=" + c.g(j) + ", xi=" + c.gs(k); });
      }
  return std::move(ck).finish();
}

CheckItem rel_gamma_coad_on_gamma(const Ctx& c) {
  CheckBuilder ck("gamma-coad-on-gamma",
                  "ad^g*_{gamma(xi,eta)} x = [ad^g*_xi, ad^g*_eta] x + [x, phi(xi,eta)] - phi(ad*_x xi, eta) - "
                  "phi(xi, ad*_x eta)",
                  c.q.basis);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      for (int k = 0; k < c.n; ++k) {
        auto x = c.e(i), xi = c.f(j), eta = c.f(k);
        Multivector rhs = c.AG(xi, c.AG(eta, x)) - c.AG(eta, c.AG(xi, x)) + c.mu(x, c.PHI(xi, eta)) -
                          c.PHI(c.AM(x, xi), eta) - c.PHI(xi, c.AM(x, eta));
        ck.expect(c.AG(c.gam(xi, eta), x), rhs,
                  [&] { return "x=" + c.g(i) + ", xi=" + c.gs(j) + ", eta=" + c.gs(k); });
      }
  return std::move(ck).finish();
}

CheckItem rel_mu_coad_on_gamma(const Ctx& c) {
  CheckBuilder ck("mu-coad-on-gamma",
                  "ad*_x gamma(xi,eta) = gamma(ad*_x xi, eta) + gamma(xi, ad*_x eta) + ad*_{ad^g*_eta x} xi - "
                  "ad*_{ad^g*_xi x} eta",
                  c.q.basis);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      for (int k = 0; k < c.n; ++k) {
        auto x = c.e(i), xi = c.f(j), eta = c.f(k);
        Multivector rhs = c.gam(c.AM(x, xi), eta) + c.gam(xi, c.AM(x, eta)) + c.AM(c.AG(eta, x), xi) -
                          c.AM(c.AG(xi, x), eta);
        ck.expect(c.AM(x, c.gam(xi, eta)), rhs,
                  [&] { return "x=" + c.g(i) + ", xi=" + c.gs(j) + ", eta=" + c.gs(k); });
      }
  return std::move(ck).finish();
}

template <class F>
Multivector cyclic(const Multivector& a, const Multivector& b, const Multivector& z, F&& f) {
  return f(a, b, z) + f(b, z, a) + f(z, a, b);
}

CheckItem rel_cojacobi_cyclic(const Ctx& c) {
  CheckBuilder ck("cojacobi-cyclic", "cyclic sum of gamma(gamma(xi,eta),zeta) = -cyclic sum of ad*_{phi(xi,eta)} zeta",
                  c.q.basis);
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j)
      for (int k = j + 1; k < c.n; ++k) {
        auto a = c.f(i), b = c.f(j), z = c.f(k);
        Multivector lhs = cyclic(a, b, z, [&](auto& u, auto& v, auto& w) { return c.gam(c.gam(u, v), w); });
        Multivector rhs = -cyclic(a, b, z, [&](auto& u, auto& v, auto& w) { return c.AM(c.PHI(u, v), w); });
        ck.expect(lhs, rhs, [&] { return "xi=" + c.gs(i) + ", eta=" + c.gs(j) + ", zeta=" + c.gs(k); });
      }
  return std::move(ck).finish();
}

CheckItem rel_phi_cyclic(const Ctx& c) {
  CheckBuilder ck("phi-cyclic",
                  "cyclic sum of phi(gamma(xi,eta),zeta) = cyclic sum of ad^g*_zeta phi(xi,eta)", c.q.basis);
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j)
      for (int k = j + 1; k < c.n; ++k) {
        auto a = c.f(i), b = c.f(j), z = c.f(k);
        Multivector lhs = cyclic(a, b, z, [&](auto& u, auto& v, auto& w) { return c.PHI(c.gam(u, v), w); });
        Multivector rhs = cyclic(a, b, z, [&](auto& u, auto& v, auto& w) { return c.AG(w, c.PHI(u, v)); });
        ck.expect(lhs, rhs, [&] { return "xi=" + c.gs(i) + ", eta=" + c.gs(j) + ", zeta=" + c.gs(k); });
      }
  return std::move(ck).finish();
}

// ---- extensions to multivectors ---------------------------------------------

CheckItem rel_gamma_coad_on_schouten(const Ctx& c) {
  CheckBuilder ck("gamma-coad-on-schouten",
                  "ad^g*_xi [X,Y] = [ad^g*_xi X, Y] + [X, ad^g*_xi Y] + correction sums over the factors",
                  c.q.basis);
  for (int k = 0; k < c.n; ++k) {
    auto xi = c.f(k);
    Matrix agx = c.ag_of(xi);
    std::vector<Matrix> shifted;  // ad^g*_{ad*_{e_t} xi}
    for (int t = 0; t < c.n; ++t) shifted.push_back(c.ag_of(c.AM(c.e(t), xi)));
    for (std::uint32_t xm = 1; xm < all_blades(c.n); ++xm)
      for (std::uint32_t ym = 1; ym < all_blades(c.n); ++ym) {
        Multivector X = c.blade(Blade{xm}), Y = c.blade(Blade{ym});
        Multivector lhs = derive(agx, schouten(c.q.mu, X, Y));
        Multivector rhs = schouten(c.q.mu, derive(agx, X), Y) + schouten(c.q.mu, X, derive(agx, Y));
        auto ys = indices_of(Blade{ym});
        for (int t = 0; t < static_cast<int>(ys.size()); ++t)
          rhs += wedge(derive(shifted[ys[t]], X), omit(c, Blade{ym}, t)) * sign_of(t);
        auto xs = indices_of(Blade{xm});
        Scalar outer = sign_of(static_cast<int>(xs.size()));
        for (int t = 0; t < static_cast<int>(xs.size()); ++t)
          rhs += wedge(omit(c, Blade{xm}, t), derive(shifted[xs[t]], Y)) * (outer * sign_of(t));
        ck.expect(lhs, rhs, [&] { return "xi=" + c.gs(k) + ", X=" + c.show(X) + ", Y=" + c.show(Y); });
      }
  }
  return std::move(ck).finish();
}

CheckItem rel_gamma_coad_bracket(const Ctx& c) {
  CheckBuilder ck("gamma-coad-bracket-on-multivectors",
                  "ad^g*_{gamma(xi,eta)} X = [ad^g*_xi, ad^g*_eta] X - [phi(xi,eta), X] + sum over factors",
                  c.q.basis);
  for (int j = 0; j < c.n; ++j)
    for (int k = 0; k < c.n; ++k) {
      auto xi = c.f(j), eta = c.f(k);
      Matrix a = c.ag_of(xi), b = c.ag_of(eta), g = c.ag_of(c.gam(xi, eta));
      Multivector ph = c.PHI(xi, eta);
      for (std::uint32_t xm = 0; xm < all_blades(c.n); ++xm) {
        Multivector X = c.blade(Blade{xm});
        Multivector lhs = derive(g, X);
        Multivector rhs = derive(a, derive(b, X)) - derive(b, derive(a, X)) - schouten(c.q.mu, ph, X);
        auto xs = indices_of(Blade{xm});
        for (int t = 0; t < static_cast<int>(xs.size()); ++t) {
          auto xt = c.e(xs[t]);
          Multivector w = c.PHI(c.AM(xt, xi), eta) + c.PHI(xi, c.AM(xt, eta));
          rhs += wedge(w, omit(c, Blade{xm}, t)) * sign_of(t + 1);
        }
        ck.expect(lhs, rhs, [&] { return "xi=" + c.gs(j) + ", eta=" + c.gs(k) + ", X=" + c.show(X); });
      }
    }
  return std::move(ck).finish();
}

// ---- operator identities ---------------------------------------------------

CheckItem rel_coad_graded_commutator(const Ctx& c) {
  CheckBuilder ck("coad-as-graded-commutator", "ad*_x = d_mu i_x + i_x d_mu on the dual exterior algebra",
                  c.q.basis);
  for (int i = 0; i < c.n; ++i) {
    EndoMatrix ix = c.contract_on_dual(c.e(i));
    ck.expect(derivation_extension(c.Gs, c.am[i]), anticommutator(c.d_mu(), ix), [&] { return "x=" + c.g(i); });
  }
  return std::move(ck).finish();
}

CheckItem rel_d_mu_commutes_coad(const Ctx& c) {
  CheckBuilder ck("d-mu-commutes-with-coad", "[d_mu, ad*_x] = 0", c.q.basis);
  for (int i = 0; i < c.n; ++i)
    ck.expect(commutator(c.d_mu(), derivation_extension(c.Gs, c.am[i])), EndoMatrix(c.Gs),
              [&] { return "x=" + c.g(i); });
  return std::move(ck).finish();
}

CheckItem rel_contraction_d_mu_coad(const Ctx& c) {
  CheckBuilder ck("contraction-by-d-mu-coad", "i_{d_mu(ad*_x xi)} = [ad_x, i_{d_mu xi}]", c.q.basis);
  for (int i = 0; i < c.n; ++i) {
    EndoMatrix adx = ad_extended(c.q.mu, c.e(i));
    for (int j = 0; j < c.n; ++j) {
      EndoMatrix lhs = c.contract_on_primal(c.d_mu().apply(c.AM(c.e(i), c.f(j))));
      EndoMatrix rhs = commutator(adx, c.contract_on_primal(c.d_mu().apply(c.f(j))));
      ck.expect(lhs, rhs, [&] { return "x=" + c.g(i) + ", xi=" + c.gs(j); });
    }
  }
  return std::move(ck).finish();
}

CheckItem rel_d_gamma_coad(const Ctx& c) {
  CheckBuilder ck("d-gamma-of-gamma-coad",
                  "d_gamma(ad^g*_xi x) = ad^g*_xi d_gamma(x) + [x, i_xi phi] - i_{ad*_x xi} phi", c.q.basis);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) {
      auto x = c.e(i), xi = c.f(j);
      Multivector lhs = c.d_gam().apply(c.AG(xi, x));
      Multivector rhs = derive(c.ag_of(xi), c.d_gam().apply(x)) +
                        schouten(c.q.mu, x, contract_by_dual(xi, c.phiP)) - contract_by_dual(c.AM(x, xi), c.phiP);
      ck.expect(lhs, rhs, [&] { return "x=" + c.g(i) + ", xi=" + c.gs(j); });
    }
  return std::move(ck).finish();
}

CheckItem rel_phi_contraction_gamma(const Ctx& c) {
  CheckBuilder ck("phi-contraction-by-gamma",
                  "i_{gamma(xi,eta)} phi = ad^g*_xi i_eta phi - ad^g*_eta i_xi phi + d_gamma(phi(xi,eta))", c.q.basis);
  for (int j = 0; j < c.n; ++j)
    for (int k = 0; k < c.n; ++k) {
      auto xi = c.f(j), eta = c.f(k);
      Multivector lhs = contract_by_dual(c.gam(xi, eta), c.phiP);
      Multivector rhs = derive(c.ag_of(xi), contract_by_dual(eta, c.phiP)) -
                        derive(c.ag_of(eta), contract_by_dual(xi, c.phiP)) + c.d_gam().apply(c.PHI(xi, eta));
      ck.expect(lhs, rhs, [&] { return "xi=" + c.gs(j) + ", eta=" + c.gs(k); });
    }
  return std::move(ck).finish();
}

// Right-hand side shared by the two contraction expansions:
// i_w(P ^ Y) - (i_w P) Y - P ^ i_w Y for P of grade 2.
Multivector contraction_defect(const Multivector& w, const Multivector& p, const Multivector& y) {
  Multivector full = contract_by_dual(w, p);
  return contract_by_dual(w, wedge(p, y)) - y * full.scalar_part() - wedge(p, contract_by_dual(w, y));
}

CheckItem rel_cocycle_contraction_expansion(const Ctx& c) {
  CheckBuilder ck("cocycle-contraction-expansion",
                  "sum_i (-1)^(i+1) ad^g*_{ad*_{y_i} xi} x ^ Y_i = i_w(d_gamma x ^ Y) - (i_w d_gamma x) Y - d_gamma x ^ "
                  "i_w Y, w = d_mu xi",
                  c.q.basis);
  for (int i = 0; i < c.n; ++i) {
    Multivector dx = c.d_gam().apply(c.e(i));
    for (int j = 0; j < c.n; ++j) {
      auto xi = c.f(j);
      Multivector w = c.d_mu().apply(xi);
      for (std::uint32_t ym = 0; ym < all_blades(c.n); ++ym) {
        Multivector Y = c.blade(Blade{ym});
        Multivector lhs(c.G);
        auto ys = indices_of(Blade{ym});
        for (int t = 0; t < static_cast<int>(ys.size()); ++t)
          lhs += wedge(c.AG(c.AM(c.e(ys[t]), xi), c.e(i)), omit(c, Blade{ym}, t)) * sign_of(t);
        ck.expect(lhs, contraction_defect(w, dx, Y),
                  [&] { return "x=" + c.g(i) + ", xi=" + c.gs(j) + ", Y=" + c.show(Y); });
      }
    }
  }
  return std::move(ck).finish();
}

CheckItem rel_phi_contraction_expansion(const Ctx& c) {
  CheckBuilder ck("phi-contraction-expansion",
                  "sum_i (-1)^i phi(ad*_{y_i} xi, eta) ^ Y_i = i_w(i_eta phi ^ Y) - (i_w i_eta phi) Y - i_eta phi ^ "
                  "i_w Y, w = d_mu xi",
                  c.q.basis);
  for (int j = 0; j < c.n; ++j) {
    auto xi = c.f(j);
    Multivector w = c.d_mu().apply(xi);
    for (int k = 0; k < c.n; ++k) {
      auto eta = c.f(k);
      Multivector ie = contract_by_dual(eta, c.phiP);
      for (std::uint32_t ym = 0; ym < all_blades(c.n); ++ym) {
        Multivector Y = c.blade(Blade{ym});
        Multivector lhs(c.G);
        auto ys = indices_of(Blade{ym});
        for (int t = 0; t < static_cast<int>(ys.size()); ++t)
          lhs += wedge(c.PHI(c.AM(c.e(ys[t]), xi), eta), omit(c, Blade{ym}, t)) * sign_of(t + 1);
        ck.expect(lhs, contraction_defect(w, ie, Y),
                  [&] { return "xi=" + c.gs(j) + ", eta=" + c.gs(k) + ", Y=" + c.show(Y); });
      }
    }
  }
  return std::move(ck).finish();
}

CheckItem rel_boundary_gamma_square(const Ctx& c) {
  CheckBuilder ck("boundary-gamma-square", "boundary_gamma^2 + d_mu i_phi + i_phi d_mu - i_{boundary_mu phi} = 0",
                  c.q.basis);
  EndoMatrix iphi = c.contract_on_dual(c.phiP);
  EndoMatrix lhs = c.bd_gam() * c.bd_gam() + anticommutator(c.d_mu(), iphi) -
                   c.contract_on_dual(c.bd_mu().apply(c.phiP));
  ck.expect(lhs, EndoMatrix(c.Gs), [] { return std::string("operator identity"); });
  return std::move(ck).finish();
}

CheckItem rel_boundary_gamma_phi(const Ctx& c) {
  CheckBuilder ck("boundary-gamma-anticommutes-with-phi", "boundary_gamma i_phi + i_phi boundary_gamma = 0",
                  c.q.basis);
  ck.expect(anticommutator(c.bd_gam(), c.contract_on_dual(c.phiP)), EndoMatrix(c.Gs),
            [] { return std::string("operator identity"); });
  return std::move(ck).finish();
}

CheckItem rel_boundary_gamma_vector(const Ctx& c) {
  CheckBuilder ck("boundary-gamma-with-vector", "boundary_gamma i_x + i_x boundary_gamma = i_{gamma(x)}", c.q.basis);
  for (int i = 0; i < c.n; ++i)
    ck.expect(anticommutator(c.bd_gam(), c.contract_on_dual(c.e(i))), c.contract_on_dual(cobracket(c.q, c.e(i))),
              [&] { return "x=" + c.g(i); });
  return std::move(ck).finish();
}

// ---- characters ----------------------------------------------------------------

CheckItem rel_xi_mu_invariant(const Ctx& c, const Characters& ch) {
  CheckBuilder ck("xi-mu-invariant", "ad*_x xi_mu = 0 and d_mu xi_mu = 0", c.q.basis);
  for (int i = 0; i < c.n; ++i)
    ck.expect(c.AM(c.e(i), ch.xi_mu), Multivector(c.Gs), [&] { return "x=" + c.g(i); });
  ck.expect(c.d_mu().apply(ch.xi_mu), Multivector(c.Gs), [] { return std::string("d_mu xi_mu"); });
  return std::move(ck).finish();
}

CheckItem rel_x_gamma_coboundary(const Ctx& c, const Characters& ch) {
  CheckBuilder ck("x-gamma-coboundary", "d_gamma(x_gamma) = -i_{xi_mu} phi - 2 boundary_mu phi", c.q.basis);
  Multivector rhs = -contract_by_dual(ch.xi_mu, c.phiP) - c.bd_mu().apply(c.phiP) * Scalar(2);
  ck.expect(c.d_gam().apply(ch.x_gamma), rhs, [] { return std::string("x_gamma"); });
  return std::move(ck).finish();
}

CheckItem rel_x_gamma_pairing(const Ctx& c, const Characters& ch) {
  CheckBuilder ck("x-gamma-pairing",
                  "<x_gamma, gamma(xi,eta)> = <xi_mu, phi(xi,eta)> + 2 i_{d_mu xi} i_eta phi - 2 i_{d_mu eta} i_xi phi",
                  c.q.basis);
  for (int j = 0; j < c.n; ++j)
    for (int k = 0; k < c.n; ++k) {
      auto xi = c.f(j), eta = c.f(k);
      Scalar lhs = pair(c.gam(xi, eta), ch.x_gamma);
      Scalar rhs = pair(ch.xi_mu, c.PHI(xi, eta)) + 2 * pair(c.d_mu().apply(xi), contract_by_dual(eta, c.phiP)) -
                   2 * pair(c.d_mu().apply(eta), contract_by_dual(xi, c.phiP));
      ck.expect(lhs, rhs, [&] { return "xi=" + c.gs(j) + ", eta=" + c.gs(k); });
    }
  return std::move(ck).finish();
}

CheckItem rel_x_gamma_mixed(const Ctx& c, const Characters& ch) {
  CheckBuilder ck("x-gamma-mixed", "<x_gamma, ad*_x xi> = -<xi_mu, ad^g*_xi x> + 2 <d_mu xi, d_gamma x>",
                  c.q.basis);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) {
      auto x = c.e(i), xi = c.f(j);
      Scalar lhs = pair(c.AM(x, xi), ch.x_gamma);
      Scalar rhs = -pair(ch.xi_mu, c.AG(xi, x)) + 2 * pair(c.d_mu().apply(xi), c.d_gam().apply(x));
      ck.expect(lhs, rhs, [&] { return "x=" + c.g(i) + ", xi=" + c.gs(j); });
    }
  return std::move(ck).finish();
}

// ---- Leibniz rules for the trivial-coefficient operators ----------------------

CheckItem rel_d_mu_leibniz(const Ctx& c) {
  CheckBuilder ck("d-mu-leibniz", "d_mu(A^B) = d_mu A ^ B + (-1)^|A| A ^ d_mu B", c.q.basis);
  for (std::uint32_t a = 0; a < all_blades(c.n); ++a)
    for (std::uint32_t b = 0; b < all_blades(c.n); ++b) {
      Multivector A = c.dual_blade(Blade{a}), B = c.dual_blade(Blade{b});
      Multivector rhs = wedge(c.d_mu().apply(A), B) + wedge(A, c.d_mu().apply(B)) * sign_of(std::popcount(a));
      ck.expect(c.d_mu().apply(wedge(A, B)), rhs, [&] { return "A=" + c.show(A) + ", B=" + c.show(B); });
    }
  return std::move(ck).finish();
}

CheckItem rel_boundary_mu_leibniz(const Ctx& c) {
  CheckBuilder ck("boundary-mu-leibniz",
                  "boundary(X^Y) = boundary X ^ Y + (-1)^|X| X ^ boundary Y + (-1)^|X| [X,Y]", c.q.basis);
  for (std::uint32_t a = 0; a < all_blades(c.n); ++a)
    for (std::uint32_t b = 0; b < all_blades(c.n); ++b) {
      Multivector X = c.blade(Blade{a}), Y = c.blade(Blade{b});
      Scalar s = sign_of(std::popcount(a));
      Multivector rhs = wedge(c.bd_mu().apply(X), Y) + wedge(X, c.bd_mu().apply(Y)) * s + schouten(c.q.mu, X, Y) * s;
      ck.expect(c.bd_mu().apply(wedge(X, Y)), rhs, [&] { return "X=" + c.show(X) + ", Y=" + c.show(Y); });
    }
  return std::move(ck).finish();
}

CheckItem rel_boundary_mu_schouten(const Ctx& c) {
  CheckBuilder ck("boundary-mu-derivation-of-schouten",
                  "boundary[X,Y] = [boundary X, Y] + (-1)^(|X|-1) [X, boundary Y]", c.q.basis);
  for (std::uint32_t a = 0; a < all_blades(c.n); ++a)
    for (std::uint32_t b = 0; b < all_blades(c.n); ++b) {
      Multivector X = c.blade(Blade{a}), Y = c.blade(Blade{b});
      Multivector rhs = schouten(c.q.mu, c.bd_mu().apply(X), Y) +
                        schouten(c.q.mu, X, c.bd_mu().apply(Y)) * sign_of(std::popcount(a) - 1 + 2);
      ck.expect(c.bd_mu().apply(schouten(c.q.mu, X, Y)), rhs, [&] { return "X=" + c.show(X) + ", Y=" + c.show(Y); });
    }
  return std::move(ck).finish();
}

CheckItem rel_d_gamma_derivation(const Ctx& c) {
  CheckBuilder ck("d-gamma-derivation-of-schouten",
                  "d_gamma[X,Y] = [d_gamma X, Y] + (-1)^(|X|-1) [X, d_gamma Y]", c.q.basis);
  for (std::uint32_t a = 0; a < all_blades(c.n); ++a)
    for (std::uint32_t b = 0; b < all_blades(c.n); ++b) {
      Multivector X = c.blade(Blade{a}), Y = c.blade(Blade{b});
      Multivector rhs = schouten(c.q.mu, c.d_gam().apply(X), Y) +
                        schouten(c.q.mu, X, c.d_gam().apply(Y)) * sign_of(std::popcount(a) + 1);
      ck.expect(c.d_gam().apply(schouten(c.q.mu, X, Y)), rhs, [&] { return "X=" + c.show(X) + ", Y=" + c.show(Y); });
    }
  return std::move(ck).finish();
}

CheckItem rel_d_mu_derivation(const Ctx& c) {
  CheckBuilder ck("d-mu-derivation-of-dual-schouten",
                  "d_mu[A,B]_gamma = [d_mu A, B]_gamma + (-1)^(|A|-1) [A, d_mu B]_gamma", c.q.basis);
  for (std::uint32_t a = 0; a < all_blades(c.n); ++a)
    for (std::uint32_t b = 0; b < all_blades(c.n); ++b) {
      Multivector A = c.dual_blade(Blade{a}), B = c.dual_blade(Blade{b});
      Multivector rhs = schouten(c.q.gamma, c.d_mu().apply(A), B) +
                        schouten(c.q.gamma, A, c.d_mu().apply(B)) * sign_of(std::popcount(a) + 1);
      ck.expect(c.d_mu().apply(schouten(c.q.gamma, A, B)), rhs,
                [&] { return "A=" + c.show(A) + ", B=" + c.show(B); });
    }
  return std::move(ck).finish();
}

bool is_bialgebra(const QuasiLieBialgebra& q) { return q.phi.is_zero(); }

}  // namespace

// ---- public suites -----------------------------------------------------------------

ValidationReport validate(const QuasiLieBialgebra& q) {
  Ctx c(q);
  ValidationReport r;
  r.title = "axioms";
  r.items.push_back(check_jacobi(c));
  r.items.push_back(check_cocycle(c));
  r.items.push_back(check_cocycle_ce(c));
  r.items.push_back(check_cojacobi(c));
  r.items.push_back(check_phi_alt(c));

  // The co-Jacobi axiom and the phi axiom are equivalent to relations read off
  // the Jacobi identity of the double; only meaningful once mu is Lie and
  // gamma a cocycle.
  const bool base_ok = r.items[0].pass && r.items[1].pass;
  auto cross = [&](std::string id, std::string statement, bool axiom, std::vector<CheckItem> rel) {
    CheckItem it;
    it.id = std::move(id);
    it.statement = std::move(statement);
    it.evaluated = base_ok;
    if (!base_ok) return it;
    bool rel_ok = true;
    for (const auto& x : rel) rel_ok = rel_ok && x.pass;
    it.cases = 1;
    if (rel_ok != axiom) {
      it.pass = false;
      it.witness = "axiom and relations disagree";
      it.lhs = axiom ? "axiom holds" : "axiom fails";
      it.rhs = rel_ok ? "relations hold" : "relations fail";
    }
    return it;
  };
  r.items.push_back(cross("cojacobi-matches-double-relations",
                          "co-Jacobi axiom holds iff gamma-coad-on-gamma and cojacobi-cyclic hold", r.items[3].pass,
                          {rel_gamma_coad_on_gamma(c), rel_cojacobi_cyclic(c)}));
  r.items.push_back(
      cross("phi-alt-matches-cyclic", "phi axiom holds iff phi-cyclic holds", r.items[4].pass, {rel_phi_cyclic(c)}));
  return r;
}

ValidationReport relations_suite(const QuasiLieBialgebra& q) {
  Ctx c(q);
  Characters ch = characters(q);
  ValidationReport r;
  r.title = "relations";
  r.items.push_back(rel_coad_mu_hom(c));
  r.items.push_back(rel_gamma_coad_on_mu(c));
  r.items.push_back(rel_gamma_coad_on_gamma(c));
  r.items.push_back(rel_mu_coad_on_gamma(c));
  r.items.push_back(rel_cojacobi_cyclic(c));
  r.items.push_back(rel_phi_cyclic(c));
  r.items.push_back(rel_gamma_coad_on_schouten(c));
  r.items.push_back(rel_gamma_coad_bracket(c));
  r.items.push_back(rel_coad_graded_commutator(c));
  r.items.push_back(rel_d_mu_commutes_coad(c));
  r.items.push_back(rel_contraction_d_mu_coad(c));
  r.items.push_back(rel_d_gamma_coad(c));
  r.items.push_back(rel_phi_contraction_gamma(c));
  r.items.push_back(rel_cocycle_contraction_expansion(c));
  r.items.push_back(rel_phi_contraction_expansion(c));
  r.items.push_back(rel_boundary_gamma_square(c));
  r.items.push_back(rel_boundary_gamma_phi(c));
  r.items.push_back(rel_boundary_gamma_vector(c));
  r.items.push_back(rel_xi_mu_invariant(c, ch));
  r.items.push_back(rel_x_gamma_coboundary(c, ch));
  r.items.push_back(rel_x_gamma_pairing(c, ch));
  r.items.push_back(rel_x_gamma_mixed(c, ch));
  r.items.push_back(rel_d_mu_leibniz(c));
  r.items.push_back(rel_boundary_mu_leibniz(c));
  r.items.push_back(rel_boundary_mu_schouten(c));
  r.items.push_back(rel_d_gamma_derivation(c));
  r.items.push_back(rel_d_mu_derivation(c));
  if (is_bialgebra(q)) {
    CheckBuilder b1("boundary-gamma-squares-to-zero", "phi = 0: boundary_gamma^2 = 0", q.basis);
    b1.expect(c.bd_gam() * c.bd_gam(), EndoMatrix(c.Gs), [] { return std::string("operator identity"); });
    r.items.push_back(std::move(b1).finish());
    CheckBuilder b2("d-gamma-squares-to-zero", "phi = 0: d_gamma^2 = 0", q.basis);
    b2.expect(c.d_gam() * c.d_gam(), EndoMatrix(c.G), [] { return std::string("operator identity"); });
    r.items.push_back(std::move(b2).finish());
  }
  return r;
}

EndoMatrix laplacian(const QuasiLieBialgebra& q) {
  EndoMatrix bd = boundary_operator(q.mu);
  EndoMatrix dg = d_operator(q.gamma);
  return anticommutator(bd, dg);
}

ValidationReport laplacian_suite(const QuasiLieBialgebra& q) {
  Ctx c(q);
  ValidationReport r;
  r.title = "laplacian";
  EndoMatrix L = anticommutator(c.bd_mu(), c.d_gam());
  EndoMatrix Ls = anticommutator(c.d_mu(), c.bd_gam());

  CheckBuilder grade("laplacian-preserves-grade", "L maps each exterior power into itself", q.basis);
  for (std::uint32_t col = 0; col < all_blades(c.n); ++col)
    for (std::uint32_t row = 0; row < all_blades(c.n); ++row)
      if (std::popcount(row) != std::popcount(col))
        grade.expect(L.matrix()(row, col), Scalar(0), [&] {
          return "row " + c.show(c.blade(Blade{row})) + ", column " + c.show(c.blade(Blade{col}));
        });
  r.items.push_back(std::move(grade).finish());

  CheckBuilder w("laplacian-derivation-wedge", "L(X^Y) = LX ^ Y + X ^ LY", q.basis);
  CheckBuilder s("laplacian-derivation-schouten", "L[X,Y] = [LX,Y] + [X,LY]", q.basis);
  CheckBuilder ws("dual-laplacian-derivation-wedge", "L*(A^B) = L*A ^ B + A ^ L*B", q.basis);
  for (std::uint32_t a = 0; a < all_blades(c.n); ++a)
    for (std::uint32_t b = 0; b < all_blades(c.n); ++b) {
      Multivector X = c.blade(Blade{a}), Y = c.blade(Blade{b});
      auto wit = [&] { return "X=" + c.show(X) + ", Y=" + c.show(Y); };
      w.expect(L.apply(wedge(X, Y)), wedge(L.apply(X), Y) + wedge(X, L.apply(Y)), wit);
      s.expect(L.apply(schouten(q.mu, X, Y)), schouten(q.mu, L.apply(X), Y) + schouten(q.mu, X, L.apply(Y)), wit);
      Multivector A = c.dual_blade(Blade{a}), B = c.dual_blade(Blade{b});
      ws.expect(Ls.apply(wedge(A, B)), wedge(Ls.apply(A), B) + wedge(A, Ls.apply(B)),
                [&] { return "A=" + c.show(A) + ", B=" + c.show(B); });
    }
  r.items.push_back(std::move(w).finish());
  r.items.push_back(std::move(s).finish());
  r.items.push_back(std::move(ws).finish());

  CheckBuilder cm("laplacian-commutes-with-boundary", "[L, boundary_mu] = 0", q.basis);
  cm.expect(commutator(L, c.bd_mu()), EndoMatrix(c.G), [] { return std::string("operator identity"); });
  r.items.push_back(std::move(cm).finish());
  CheckBuilder cd("dual-laplacian-commutes-with-d", "[L*, d_mu] = 0", q.basis);
  cd.expect(commutator(Ls, c.d_mu()), EndoMatrix(c.Gs), [] { return std::string("operator identity"); });
  r.items.push_back(std::move(cd).finish());

  if (is_bialgebra(q)) {
    Characters ch = characters(q);
    CheckBuilder cf("laplacian-character-formula", "phi = 0: L = 1/2 (ad_{x_gamma} - ad^g*_{xi_mu})", q.basis);
    EndoMatrix rhs = (ad_extended(q.mu, ch.x_gamma) - derivation_extension(c.G, c.ag_of(ch.xi_mu))) * Scalar(1, 2);
    cf.expect(L, rhs, [] { return std::string("operator identity"); });
    r.items.push_back(std::move(cf).finish());
  }
  return r;
}

// ---- constructions ---------------------------------------------------------------

QuasiLieBialgebra exact_structure(const BracketTable& mu, const Multivector& r, std::vector<std::string> names) {
  const int n = mu.dim();
  if (!(mu.space() == primal_space(n))) throw SpaceMismatch("exact_structure: mu must be a bracket on G");
  if (!(r.space() == mu.space())) throw SpaceMismatch("exact_structure: r must live over G");
  if (!r.is_homogeneous(2)) throw std::invalid_argument("exact_structure: r must be of grade 2");
  std::vector<Multivector> values;
  for (int k = 0; k < n; ++k) values.push_back(schouten(mu, Multivector::basis(mu.space(), k), r));
  Multivector phi = schouten(mu, r, r) * Scalar(-1, 2);
  return QuasiLieBialgebra(std::move(names), mu, dual_table_from_cocycle(n, values), phi);
}

QuasiLieBialgebra from_r_matrix(const BracketTable& mu, const Multivector& r, std::vector<std::string> names) {
  auto defects = jacobi_defect(mu);
  if (!defects.empty())
    throw NotLieError("bracket is not Lie: Jacobi defect at (" + std::to_string(defects[0].i + 1) + "," +
                      std::to_string(defects[0].j + 1) + "," + std::to_string(defects[0].k + 1) + ")");
  return exact_structure(mu, r, std::move(names));
}

Multivector yang_baxter_bracket(const BracketTable& mu, const Tensor& t) {
  const int n = mu.dim();
  if (t.rank() != 2 || t.dim() != n) throw std::invalid_argument("yang_baxter_bracket: need a rank-2 tensor on G");
  Tensor cyb(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& tij = t.at({i, j});
      if (sgn(tij) == 0) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Scalar& tkl = t.at({k, l});
          if (sgn(tkl) == 0) continue;
          Scalar w = tij * tkl;
          const Multivector ik = mu(i, k), jk = mu(j, k), jl = mu(j, l);
          for (const auto& [b, v] : ik.terms()) cyb.at({std::countr_zero(b.bits), j, l}) += w * v;
          for (const auto& [b, v] : jk.terms()) cyb.at({i, std::countr_zero(b.bits), l}) += w * v;
          for (const auto& [b, v] : jl.terms()) cyb.at({i, k, std::countr_zero(b.bits)}) += w * v;
        }
    }
  cyb *= Scalar(2);
  auto m = antisymmetric_part_as_multivector(cyb, mu.space());
  if (!m) throw std::invalid_argument("yang_baxter_bracket: Yang-Baxter expression is not antisymmetric");
  return *m;
}

namespace {

bool invariant_tensor(const BracketTable& mu, const Tensor& t, int* witness) {
  const int n = mu.dim();
  for (int x = 0; x < n; ++x) {
    Matrix ad = ad_action(mu, Multivector::basis(mu.space(), x));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar v = 0;
        for (int p = 0; p < n; ++p) v += ad(i, p) * t.at({p, j}) + ad(j, p) * t.at({i, p});
        if (sgn(v) != 0) {
          if (witness) *witness = x;
          return false;
        }
      }
  }
  return true;
}

}  // namespace

QuasiLieBialgebra from_quasitriangular(const BracketTable& mu, const Tensor& r, std::vector<std::string> names) {
  const int n = mu.dim();
  if (r.rank() != 2 || r.dim() != n) throw std::invalid_argument("from_quasitriangular: need a rank-2 tensor on G");
  if (!jacobi_defect(mu).empty()) throw NotLieError("from_quasitriangular: bracket is not Lie");
  Tensor sym(n, 2), skew(n, 2);
  Multivector a(mu.space());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      sym.at({i, j}) = (r.at({i, j}) + r.at({j, i})) / 2;
      skew.at({i, j}) = (r.at({i, j}) - r.at({j, i})) / 2;
      if (i < j) a.add_term(Blade{(1u << i) | (1u << j)}, skew.at({i, j}));
    }
  int bad = -1;
  if (!invariant_tensor(mu, sym, &bad)) {
    std::string msg = "symmetric part is not ad-invariant (fails for basis element " + std::to_string(bad + 1) + ")";
    if (invariant_tensor(mu, skew, nullptr))
      msg += "; only the antisymmetric part is invariant, which does not give a quasi-Lie bialgebra";
    throw InvarianceError(msg);
  }
  QuasiLieBialgebra q = exact_structure(mu, a, std::move(names));
  q.phi = (schouten(mu, a, a) + yang_baxter_bracket(mu, sym)) * Scalar(-1, 2);
  return q;
}

bool solves_bv_equation(const QuasiLieBialgebra& q, const Multivector& x0) {
  return cobracket(q, x0) == boundary(q.mu, q.phi);
}

std::optional<BvStructure> bv_prerequisite(const QuasiLieBialgebra& q) {
  const int n = q.n;
  std::vector<std::uint32_t> rows;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == 2) rows.push_back(m);
  Matrix a(rows.size(), n);
  for (int k = 0; k < n; ++k) {
    Multivector g = cobracket(q, Multivector::basis(q.primal(), k));
    for (std::size_t r = 0; r < rows.size(); ++r) a(r, k) = g.coeff(Blade{rows[r]});
  }
  Multivector target = boundary(q.mu, q.phi);
  std::vector<Scalar> rhs(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) rhs[r] = target.coeff(Blade{rows[r]});
  auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;

  auto as_vector = [&](const std::vector<Scalar>& v) {
    Multivector x(q.primal());
    for (int k = 0; k < n; ++k) x.add_term(Blade{1u << k}, v[k]);
    return x;
  };
  Multivector x0 = as_vector(*sol);
  if (!solves_bv_equation(q, x0)) return std::nullopt;
  std::vector<Multivector> kernel;
  for (const auto& v : nullspace(a)) kernel.push_back(as_vector(v));

  const SpaceId Gs = q.dual();
  auto contraction = [&](const Multivector& x) {
    return EndoMatrix::from_map(Gs, [&](const Multivector& b) { return contract_by_primal(x, b); });
  };
  EndoMatrix delta_op = boundary_operator(q.gamma) + contraction(x0);
  return BvStructure{x0, std::move(kernel), std::move(delta_op), d_operator(q.mu), contraction(bracket_phi(q))};
}

}  // namespace qlb
