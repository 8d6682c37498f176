// One line per acceptance criterion. Pass labels as arguments to run a subset.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qlb/cli_io.hpp"
#include "qlb/double.hpp"
#include "qlb/representation.hpp"

using namespace qlb;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string label;
  double budget_s;
  std::function<Verdict()> run;
};

struct Fixture {
  std::string name;
  InputDocument doc;
  QuasiLieBialgebra q;
};

std::vector<Fixture> catalog() {
  std::vector<Fixture> out;
  for (const auto& name : catalog_names()) {
    auto doc = example_catalog(name);
    out.push_back({name, doc, to_structure(doc)});
  }
  return out;
}

const Fixture& fixture(const std::vector<Fixture>& all, const std::string& name) {
  for (const auto& f : all)
    if (f.name == name) return f;
  throw std::logic_error("no fixture " + name);
}

std::string failure_of(const ValidationReport& r) {
  const CheckItem* it = r.first_failure();
  if (!it) return "";
  return it->id + " at " + it->witness + (it->lhs.empty() ? "" : " (" + it->lhs + " vs " + it->rhs + ")");
}

bool double_is_lie_and_invariant(const QuasiLieBialgebra& q) {
  auto d = assemble_double(q);
  return jacobi_defect(d.bracket).empty() && verify_invariance(d).ok;
}

// ---- axioms against the double ---------------------------------------------------

Verdict axioms_match_double(const std::vector<Fixture>& fx) {
  Verdict v;
  for (const auto& f : fx) {
    auto rep = validate(f.q);
    if (!rep.ok()) return {false, f.name + ": " + failure_of(rep)};
    auto d = build_double(f.q);
    if (!jacobi_defect(d.bracket).empty()) return {false, f.name + ": double fails Jacobi"};
    if (!verify_invariance(d).ok) return {false, f.name + ": pairing not invariant"};
  }
  v.detail = std::to_string(fx.size()) + " fixtures valid, doubles Lie and invariant";
  return v;
}

enum class Slot { Mu, Gamma, Phi };

std::vector<QuasiLieBialgebra> single_corruptions(const QuasiLieBialgebra& q, Slot slot) {
  std::vector<QuasiLieBialgebra> out;
  const int n = q.n;
  if (slot == Slot::Phi) {
    for (std::uint32_t b = 0; b < (1u << n); ++b)
      if (std::popcount(b) == 3) {
        auto c = q;
        c.phi.add_term(Blade{b}, 1);
        out.push_back(c);
      }
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto c = q;
        BracketTable& t = slot == Slot::Mu ? c.mu : c.gamma;
        t.set_constant(i, j, k, t.constant(i, j, k) + 1);
        out.push_back(c);
      }
  return out;
}

struct CorruptionTally {
  std::size_t tried = 0, detected = 0, disagreements = 0;
};

CorruptionTally tally(const QuasiLieBialgebra& q, Slot slot) {
  CorruptionTally t;
  for (const auto& c : single_corruptions(q, slot)) {
    ++t.tried;
    bool axioms = validate(c).ok();
    bool dbl = double_is_lie_and_invariant(c);
    if (axioms != dbl) ++t.disagreements;
    if (!axioms && !dbl) ++t.detected;
  }
  return t;
}

std::string undetectable_reason(const QuasiLieBialgebra& q, Slot slot) {
  if (slot == Slot::Phi && q.n < 3) return "no 3-vectors in dimension " + std::to_string(q.n);
  if (slot == Slot::Phi)
    return "dimension 3 with unimodular bracket: every 3-vector is invariant and Alt vanishes on the fourth "
           "tensor power";
  if (q.n == 2) return "dimension 2: every bracket is Lie and the cocycle condition is empty against a zero partner";
  return "no single-entry change alters validity";
}

Verdict corruption_detected(const std::vector<Fixture>& fx, Slot slot) {
  Verdict v;
  std::vector<std::string> blind;
  std::size_t tried = 0, detected = 0;
  for (const auto& f : fx) {
    auto t = tally(f.q, slot);
    tried += t.tried;
    detected += t.detected;
    if (t.disagreements)
      return {false, f.name + ": " + std::to_string(t.disagreements) + " corruptions judged differently by axioms and double"};
    if (t.detected == 0) blind.push_back(f.name + " (" + undetectable_reason(f.q, slot) + ")");
  }
  std::ostringstream os;
  os << detected << "/" << tried << " corruptions fail both sides, none judged inconsistently";
  if (!blind.empty()) {
    v.pass = false;
    os << "; no detectable corruption on:";
    for (const auto& b : blind) os << " " << b << ";";
  }
  if (slot == Slot::Phi) {
    // Same test on a non-unimodular 4-dim structure, where phi is constrained.
    BracketTable mu(primal_space(4));
    mu.set_constant(0, 1, 1, 1);
    mu.set_constant(0, 2, 2, 1);
    mu.set_constant(1, 2, 3, 1);
    mu.set_constant(0, 3, 3, 2);
    Multivector r(primal_space(4));
    r.add_term(make_blade({0, 1}), 1);
    r.add_term(make_blade({1, 2}), -2);
    r.add_term(make_blade({2, 3}), 1);
    r.add_term(make_blade({0, 3}), 1);
    auto t = tally(exact_structure(mu, r), slot);
    os << " auxiliary 4-dim structure: " << t.detected << "/" << t.tried << " detected, " << t.disagreements
       << " inconsistent";
  }
  v.detail = os.str();
  return v;
}

// ---- suites ------------------------------------------------------------------------

Verdict relations_on_sl2(const std::vector<Fixture>& fx) {
  std::size_t cases = 0, items = 0;
  for (const char* name : {"sl2-exact-r", "sl2-quasitriangular"}) {
    auto rep = relations_suite(fixture(fx, name).q);
    if (!rep.ok()) return {false, std::string(name) + ": " + failure_of(rep)};
    for (const auto& it : rep.items) {
      if (it.cases == 0) return {false, std::string(name) + ": " + it.id + " checked nothing"};
      cases += it.cases;
    }
    items += rep.items.size();
  }
  return {true, std::to_string(items) + " identities, " + std::to_string(cases) + " cases"};
}

Verdict laplacian_identities(const std::vector<Fixture>& fx) {
  for (const auto& f : fx) {
    auto rep = laplacian_suite(f.q);
    for (const char* id : {"laplacian-derivation-wedge", "laplacian-derivation-schouten",
                           "laplacian-commutes-with-boundary"})
      if (!rep.find(id)) return {false, f.name + ": " + id + " missing"};
    if (!rep.ok()) return {false, f.name + ": " + failure_of(rep)};
  }
  auto rep = laplacian_suite(fixture(fx, "sl2-bialgebra").q);
  const CheckItem* formula = rep.find("laplacian-character-formula");
  if (!formula || !formula->pass) return {false, "sl2-bialgebra: character formula missing or failing"};
  return {true, "derivation and commutation on all fixtures; closed form on sl2-bialgebra"};
}

Verdict double_is_exact(const std::vector<Fixture>& fx) {
  for (const auto& f : fx) {
    auto qd = double_qlb(build_double(f.q));
    if (qd.n != 2 * f.q.n) return {false, f.name + ": wrong dimension"};
    auto rep = validate(qd);
    if (!rep.ok()) return {false, f.name + ": " + failure_of(rep)};
  }
  return {true, "every double validates as an exact structure of twice the dimension"};
}

Verdict representation_law(const std::vector<Fixture>& fx) {
  std::size_t pairs = 0;
  for (const auto& f : fx) {
    auto rep = verify_representation(f.q);
    if (!rep.ok()) return {false, f.name + ": " + failure_of(rep)};
    for (const auto& it : rep.items)
      if (it.id.rfind("representation-", 0) == 0) pairs += it.cases;
  }
  return {true, std::to_string(pairs) + " basis pairs"};
}

Verdict q_isomorphism(const std::vector<Fixture>& fx) {
  std::ostringstream os;
  for (const auto& f : fx) {
    auto rep = verify_q_isomorphism(f.q);
    for (const char* id : {"q-unit", "q-on-vectors", "q-on-covectors", "q-intertwining", "q-full-rank"})
      if (!rep.find(id)) return {false, f.name + ": " + id + " missing"};
    if (!rep.ok()) return {false, f.name + ": " + failure_of(rep)};
    os << f.name << " rank " << rep.measurements.at("q_rank") << "; ";
  }
  return {true, os.str()};
}

Verdict bialgebra_degeneration(const std::vector<Fixture>& fx) {
  const auto& q = fixture(fx, "sl2-bialgebra").q;
  if (!q.phi.is_zero()) return {false, "fixture has nonzero phi"};
  auto rel = relations_suite(q);
  for (const char* id : {"boundary-gamma-squares-to-zero", "d-gamma-squares-to-zero"}) {
    const CheckItem* it = rel.find(id);
    if (!it || !it->pass) return {false, std::string(id) + " missing or failing"};
  }
  RepWeights without_phi;
  without_phi.phi = 0;
  for (int k = 0; k < 2 * q.n; ++k) {
    auto u = DoubleElement::basis(q.n, k);
    if (!(rep_matrix(q, u) == rep_matrix(q, u, without_phi))) return {false, "phi term contributes"};
  }
  auto rep = verify_representation(q, without_phi);
  if (!rep.ok()) return {false, failure_of(rep)};
  auto iso = verify_q_isomorphism(q);
  if (!iso.ok()) return {false, failure_of(iso)};
  return {true, "both squares vanish; representation and Q hold with the phi term removed"};
}

Verdict sl2_oracles(const std::vector<Fixture>& fx) {
  const auto& q = fixture(fx, "sl2-exact-r").q;
  const SpaceId G = q.primal();
  auto e = [&](int i) { return Multivector::basis(G, i); };
  const auto c = oracle::sl2();
  const auto r = oracle::skew(3, {{1, 2, 1}});
  auto from_tensor = [&](const oracle::Mat& t) {
    Multivector m(G);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) m.add_term(make_blade({a, b}), t[a][b]);
    return m;
  };
  const char* names[] = {"h", "e", "f"};
  for (int k = 0; k < 3; ++k) {
    auto lib = cobracket(q, e(k));
    if (lib != from_tensor(oracle::act(c, k, r)))
      return {false, std::string("gamma(") + names[k] + ") = " + format(lib, q.basis) + " disagrees with tensor action"};
  }
  if (cobracket(q, e(1)) != wedge(e(1), e(0)) || cobracket(q, e(2)) != wedge(e(2), e(0)) ||
      !cobracket(q, e(0)).is_zero())
    return {false, "cobracket differs from e^h, f^h, 0"};
  auto cyb = oracle::yang_baxter(c, r);
  Multivector phi_oracle = Multivector::from_blade(G, make_blade({0, 1, 2}), -cyb[0][1][2]);
  if (q.phi != phi_oracle) return {false, "phi " + format(q.phi, q.basis) + " vs oracle " + format(phi_oracle, q.basis)};
  if (q.phi != -wedge(wedge(e(1), e(2)), e(0))) return {false, "phi is not -e^f^h"};
  std::vector<oracle::Mat> g;
  for (int k = 0; k < 3; ++k) g.push_back(oracle::act(c, k, r));
  auto xg = oracle::traces(oracle::dual_bracket(g));
  auto xm = oracle::traces(c);
  auto ch = characters(q);
  for (int k = 0; k < 3; ++k)
    if (ch.x_gamma.coeff(Blade{1u << k}) != xg[k] || ch.xi_mu.coeff(Blade{1u << k}) != xm[k])
      return {false, "characters disagree with trace oracle"};
  if (ch.x_gamma != e(0) * Scalar(2) || !ch.xi_mu.is_zero()) return {false, "characters differ from 2h and 0"};
  return {true, "gamma(e) = e^h, gamma(f) = f^h, gamma(h) = 0, phi = -e^f^h, x_gamma = 2h, xi_mu = 0"};
}

Verdict bv_solvable(const std::vector<Fixture>& fx) {
  std::ostringstream os;
  for (const auto& f : fx) {
    if (!f.doc.exact()) continue;
    auto bv = bv_prerequisite(f.q);
    if (!bv) return {false, f.name + ": no solution"};
    if (cobracket(f.q, bv->x0) != boundary(f.q.mu, f.q.phi)) return {false, f.name + ": solution does not verify"};
    os << f.name << " x0 = " << format(bv->x0, f.q.basis) << "; ";
  }
  const auto& q = fixture(fx, "sl2-exact-r").q;
  Multivector minus_h = -Multivector::basis(q.primal(), 0);
  if (!solves_bv_equation(q, minus_h)) return {false, "-h does not solve the sl2 system"};
  auto bv = bv_prerequisite(q);
  // -h - x0 must lie in the kernel of gamma spanned by bv->kernel.
  Matrix k(q.n, bv->kernel.size() + 1);
  for (std::size_t c = 0; c < bv->kernel.size(); ++c)
    for (int i = 0; i < q.n; ++i) k(i, c) = bv->kernel[c].coeff(Blade{1u << i});
  for (int i = 0; i < q.n; ++i) k(i, bv->kernel.size()) = (minus_h - bv->x0).coeff(Blade{1u << i});
  if (rank(k) != bv->kernel.size()) return {false, "-h not in x0 + kernel"};
  os << "-h among the sl2 solutions";
  return {true, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const auto fx = catalog();
  const std::vector<Criterion> all{
      {"axioms-match-double", 1.0 * fx.size(), [&] { return axioms_match_double(fx); }},
      {"mu-corruption-detected", 1.0 * fx.size(), [&] { return corruption_detected(fx, Slot::Mu); }},
      {"gamma-corruption-detected", 1.0 * fx.size(), [&] { return corruption_detected(fx, Slot::Gamma); }},
      {"phi-corruption-detected", 1.0 * fx.size(), [&] { return corruption_detected(fx, Slot::Phi); }},
      {"relations-exhaustive", 5.0, [&] { return relations_on_sl2(fx); }},
      {"laplacian-identities", 2.0, [&] { return laplacian_identities(fx); }},
      {"double-exact-structure", 10.0, [&] { return double_is_exact(fx); }},
      {"representation-law", 5.0, [&] { return representation_law(fx); }},
      {"q-module-isomorphism", 60.0, [&] { return q_isomorphism(fx); }},
      {"bialgebra-degeneration", 5.0, [&] { return bialgebra_degeneration(fx); }},
      {"sl2-oracle-values", 1.0, [&] { return sl2_oracles(fx); }},
      {"bv-prerequisite", 1.0, [&] { return bv_solvable(fx); }},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failures = 0, ran = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.label) == wanted.end()) continue;
    ++ran;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.pass && secs > c.budget_s) {
      v.pass = false;
      v.detail += "; over the time budget";
    }
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << (v.pass ? "PASS " : "FAIL ") << c.label << " [" << t.str() << "s] " << v.detail << std::endl;
    failures += v.pass ? 0 : 1;
  }
  if (ran == 0) {
    std::cerr << "no criterion matched\n";
    return 2;
  }
  return failures ? 1 : 0;
}
