#include "qlb/double.hpp"

namespace qlb {

Matrix hyperbolic_pairing(int n) {
  Matrix p(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    p(i, n + i) = 1;
    p(n + i, i) = 1;
  }
  return p;
}

DoubleAlgebra assemble_double(const QuasiLieBialgebra& q) {
  const int n = q.n;
  DoubleAlgebra d;
  d.n = n;
  d.bracket = BracketTable(double_space(n));
  d.pairing = hyperbolic_pairing(n);
  d.basis = q.basis;
  for (int i = 0; i < n; ++i) d.basis.push_back(q.basis[i] + "*");

  const Multivector phiP = bracket_phi(q);
  auto e = [&](int i) { return Multivector::basis(q.primal(), i); };
  auto f = [&](int i) { return Multivector::basis(q.dual(), i); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.bracket.set(i, j, lift_primal(q.mu(i, j)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // [x, xi] = -ad^g*_xi x + ad*_x xi
      Multivector v = lift_dual(coad_mu(q, e(i), f(j))) - lift_primal(coad_gamma(q, f(j), e(i)));
      d.bracket.set(i, n + j, v);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Multivector v = lift_primal(contract_by_dual(wedge(f(i), f(j)), phiP)) + lift_dual(q.gamma(i, j));
      d.bracket.set(n + i, n + j, v);
    }
  return d;
}

DoubleAlgebra build_double(const QuasiLieBialgebra& q) {
  auto report = validate(q);
  if (const auto* bad = report.first_failure())
    throw InvalidStructure("not a Lie quasi-bialgebra: " + bad->id + " fails at " + bad->witness);
  return assemble_double(q);
}

namespace {

Scalar form(const DoubleAlgebra& d, const Multivector& a, const Multivector& b) {
  Scalar s = 0;
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms())
      s += ca * cb * d.pairing(std::countr_zero(ba.bits), std::countr_zero(bb.bits));
  return s;
}

Multivector row_vector(const DoubleAlgebra& d, const Matrix& m, std::size_t r) {
  Multivector v(double_space(d.n));
  for (int c = 0; c < 2 * d.n; ++c) v.add_term(Blade{1u << c}, m(r, c));
  return v;
}

Matrix stack(const Matrix& a, const std::vector<Multivector>& extra, int width) {
  Matrix out(a.rows() + extra.size(), width);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (int c = 0; c < width; ++c) out(r, c) = a(r, c);
  for (std::size_t k = 0; k < extra.size(); ++k)
    for (int c = 0; c < width; ++c) out(a.rows() + k, c) = extra[k].coeff(Blade{1u << c});
  return out;
}

}  // namespace

InvarianceResult verify_invariance(const DoubleAlgebra& d) {
  const int m = 2 * d.n;
  const SpaceId D = double_space(d.n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w) {
        Scalar s = form(d, d.bracket(u, v), Multivector::basis(D, w)) +
                   form(d, Multivector::basis(D, v), d.bracket(u, w));
        if (sgn(s) != 0) return {false, u, v, w};
      }
  return {};
}

ManinPairWitness primal_subspace(int n) {
  ManinPairWitness w;
  w.basis = Matrix(n, 2 * n);
  for (int i = 0; i < n; ++i) w.basis(i, i) = 1;
  return w;
}

ManinPairWitness dual_subspace(int n) {
  ManinPairWitness w;
  w.basis = Matrix(n, 2 * n);
  for (int i = 0; i < n; ++i) w.basis(i, n + i) = 1;
  return w;
}

ValidationReport verify_manin_pair(const DoubleAlgebra& d, ManinPairWitness& w) {
  ValidationReport rep;
  rep.title = "manin pair";
  if (static_cast<int>(w.basis.cols()) != 2 * d.n) throw std::invalid_argument("subspace rows must have length 2n");
  const std::size_t k = w.basis.rows();
  std::vector<Multivector> rows;
  for (std::size_t r = 0; r < k; ++r) rows.push_back(row_vector(d, w.basis, r));
  const std::size_t base_rank = rank(w.basis);

  CheckBuilder closed("subspace-closed", "the bracket of two basis vectors stays in the subspace", d.basis);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Multivector br = d.bracket.apply(rows[a], rows[b]);
      bool inside = rank(stack(w.basis, {br}, 2 * d.n)) == base_rank;
      closed.expect_true(inside, [&] { return "rows " + std::to_string(a + 1) + "," + std::to_string(b + 1); },
                         [&] { return format(br, d.basis); });
    }
  rep.items.push_back(std::move(closed).finish());

  CheckBuilder iso("subspace-isotropic", "the pairing vanishes on the subspace", d.basis);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b)
      iso.expect(form(d, rows[a], rows[b]), Scalar(0),
                 [&] { return "rows " + std::to_string(a + 1) + "," + std::to_string(b + 1); });
  rep.items.push_back(std::move(iso).finish());

  CheckBuilder dim("subspace-maximal", "the subspace has dimension n", d.basis);
  dim.expect(Scalar(static_cast<long>(base_rank)), Scalar(d.n), [] { return std::string("rank of basis"); });
  rep.items.push_back(std::move(dim).finish());

  w.closed = rep.items[0].pass;
  w.isotropic = rep.items[1].pass;
  w.maximal = rep.items[2].pass;
  return rep;
}

Multivector canonical_r(const DoubleAlgebra& d) {
  Multivector r(double_space(d.n));
  for (int i = 0; i < d.n; ++i) r.add_term(Blade{(1u << i) | (1u << (d.n + i))}, Scalar(1, 2));
  return r;
}

QuasiLieBialgebra double_qlb(const DoubleAlgebra& d) {
  const SpaceId flat = primal_space(2 * d.n);
  return from_r_matrix(d.bracket.retagged(flat), retag(canonical_r(d), flat), d.basis);
}

QuasiLieBialgebra from_manin_pair(const DoubleAlgebra& d, const Matrix& complement) {
  const int n = d.n;
  if (static_cast<int>(complement.rows()) != n || static_cast<int>(complement.cols()) != 2 * n)
    throw std::invalid_argument("complement must be an n x 2n matrix");
  std::vector<Multivector> rows;
  for (int r = 0; r < n; ++r) rows.push_back(row_vector(d, complement, r));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (sgn(form(d, rows[a], rows[b])) != 0)
        throw std::invalid_argument("complement is not isotropic: rows " + std::to_string(a + 1) + " and " +
                                    std::to_string(b + 1) + " pair to " + to_string(form(d, rows[a], rows[b])));

  // Normalise so that row k pairs with e_j to delta_kj: c^k = xi^k + sum_j t_kj e_j.
  Matrix m(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) m(k, j) = complement(k, n + j);
  if (rank(m) != static_cast<std::size_t>(n))
    throw std::invalid_argument("complement meets G: it is not complementary");
  Matrix minv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> rhs(n);
    rhs[j] = 1;
    auto col = solve(m.transpose(), rhs);
    for (int k = 0; k < n; ++k) minv(j, k) = (*col)[k];
  }
  Matrix norm = minv * complement;
  Matrix t(n, n);
  std::vector<Multivector> c;
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) t(k, j) = norm(k, j);
    c.push_back(row_vector(d, norm, k));
  }

  const SpaceId G = primal_space(n);
  BracketTable mu(G), gamma(dual_space(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Multivector v = d.bracket(i, j);
      for (int k = 0; k < n; ++k) {
        if (sgn(v.coeff(Blade{1u << (n + k)})) != 0) throw InvalidStructure("G is not a subalgebra of D");
        mu.set_constant(i, j, k, v.coeff(Blade{1u << k}));
      }
    }

  // [c^i, c^j] = sum_m b_m c^m + a with a in G; b is gamma, a is phi(xi^i, xi^j).
  std::vector<std::vector<Multivector>> a(n, std::vector<Multivector>(n, Multivector(G)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Multivector v = d.bracket.apply(c[i], c[j]);
      for (int k = 0; k < n; ++k) {
        Scalar b = v.coeff(Blade{1u << (n + k)});
        gamma.set_constant(i, j, k, b);
      }
      for (int k = 0; k < n; ++k) {
        Scalar s = v.coeff(Blade{1u << k});
        for (int m2 = 0; m2 < n; ++m2) s -= gamma.constant(i, j, m2) * t(m2, k);
        a[i][j].add_term(Blade{1u << k}, s);
      }
      a[j][i] = -a[i][j];
    }

  Multivector phiP(G);
  const SpaceId Gs = dual_space(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Blade ijk{(1u << i) | (1u << j) | (1u << k)};
        Multivector probe = contract_by_dual(wedge(Multivector::basis(Gs, i), Multivector::basis(Gs, j)),
                                             Multivector::from_blade(G, ijk));
        phiP.add_term(ijk, a[i][j].coeff(Blade{1u << k}) / probe.coeff(Blade{1u << k}));
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j &&
          contract_by_dual(wedge(Multivector::basis(Gs, i), Multivector::basis(Gs, j)), phiP) != a[i][j])
        throw InvalidStructure("bracket of the complement does not come from a 3-vector");

  std::vector<std::string> names(d.basis.begin(), d.basis.begin() + n);
  return QuasiLieBialgebra(std::move(names), std::move(mu), std::move(gamma), -phiP);
}

}  // namespace qlb
