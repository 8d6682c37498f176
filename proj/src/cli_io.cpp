#include "qlb/cli_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "qlb/double.hpp"
#include "qlb/representation.hpp"

namespace qlb {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr int document_max_dim = 20;

[[noreturn]] void reject(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t p = 0; p + 1 < byte && p < text.size(); ++p) {
    if (text[p] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Scalar read_value(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      reject(where, "malformed rational \"" + v.get<std::string>() + "\"");
    }
  }
  if (v.is_number_integer()) return Scalar(v.get<long>());
  reject(where, "value must be an integer or a \"p/q\" string");
}

int read_index(const json& v, int dim, const std::string& where) {
  if (!v.is_number_integer()) reject(where, "index must be an integer");
  long i = v.get<long>();
  if (i < 1 || i > dim)
    reject(where, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  return static_cast<int>(i - 1);
}

const json& entry_array(const json& e, std::size_t len, const std::string& where) {
  if (!e.is_array() || e.size() != len)
    reject(where, "entry must be an array of " + std::to_string(len) + " elements");
  return e;
}

void require_ascending(const std::vector<int>& idx, const std::string& where) {
  for (std::size_t t = 0; t + 1 < idx.size(); ++t)
    if (idx[t] >= idx[t + 1]) {
      std::string tuple;
      for (int i : idx) tuple += (tuple.empty() ? "" : ",") + std::to_string(i + 1);
      reject(where, "indices (" + tuple + ") must be strictly ascending; only the i<j form is stored");
    }
}

template <class Entry>
void finish_entries(std::vector<Entry>& v, const std::string& key) {
  std::sort(v.begin(), v.end());
  for (std::size_t t = 0; t + 1 < v.size(); ++t)
    if (v[t] <=> v[t + 1] == 0) reject(key, "duplicate entry");
  std::erase_if(v, [](const Entry& e) { return sgn(e.value) == 0; });
}

std::vector<BracketEntry> read_brackets(const json& arr, int dim, const std::string& key) {
  if (!arr.is_array()) reject(key, "must be an array");
  std::vector<BracketEntry> out;
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string where = key + "[" + std::to_string(t) + "]";
    const json& e = entry_array(arr[t], 4, where);
    BracketEntry b{read_index(e[0], dim, where), read_index(e[1], dim, where), read_index(e[2], dim, where),
                   read_value(e[3], where)};
    require_ascending({b.i, b.j}, where);
    out.push_back(b);
  }
  finish_entries(out, key);
  return out;
}

std::vector<TripleEntry> read_triples(const json& arr, int dim, const std::string& key) {
  if (!arr.is_array()) reject(key, "must be an array");
  std::vector<TripleEntry> out;
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string where = key + "[" + std::to_string(t) + "]";
    const json& e = entry_array(arr[t], 4, where);
    TripleEntry b{read_index(e[0], dim, where), read_index(e[1], dim, where), read_index(e[2], dim, where),
                  read_value(e[3], where)};
    require_ascending({b.i, b.j, b.k}, where);
    out.push_back(b);
  }
  finish_entries(out, key);
  return out;
}

std::vector<PairEntry> read_pairs(const json& arr, int dim, const std::string& key) {
  if (!arr.is_array()) reject(key, "must be an array");
  std::vector<PairEntry> out;
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string where = key + "[" + std::to_string(t) + "]";
    const json& e = entry_array(arr[t], 3, where);
    PairEntry b{read_index(e[0], dim, where), read_index(e[1], dim, where), read_value(e[2], where)};
    require_ascending({b.i, b.j}, where);
    out.push_back(b);
  }
  finish_entries(out, key);
  return out;
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  // Track object keys to reject duplicates, which the JSON library would
  // otherwise silently overwrite.
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
    if (ev == json::parse_event_t::object_start) keys.emplace_back();
    if (ev == json::parse_event_t::object_end && !keys.empty()) keys.pop_back();
    if (ev == json::parse_event_t::key && !keys.empty() && !keys.back().insert(parsed.get<std::string>()).second &&
        duplicate.empty())
      duplicate = parsed.get<std::string>();
    return true;
  };
  json root;
  try {
    root = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
  if (!duplicate.empty()) reject("document", "duplicate key \"" + duplicate + "\"");
  if (!root.is_object()) reject("document", "top level must be an object");
  static const std::set<std::string> allowed{"dim", "basis", "mu", "gamma", "phi", "r"};
  for (const auto& [k, v] : root.items())
    if (!allowed.count(k)) reject("document", "unknown key \"" + k + "\"");

  InputDocument doc;
  if (!root.contains("dim") || !root["dim"].is_number_integer()) reject("dim", "required integer");
  long dim = root["dim"].get<long>();
  if (dim < 1 || dim > document_max_dim)
    reject("dim", "must lie in 1.." + std::to_string(document_max_dim));
  doc.dim = static_cast<int>(dim);

  if (root.contains("basis")) {
    const json& b = root["basis"];
    if (!b.is_array() || static_cast<long>(b.size()) != dim) reject("basis", "must list exactly dim names");
    std::set<std::string> seen;
    for (std::size_t t = 0; t < b.size(); ++t) {
      const std::string where = "basis[" + std::to_string(t) + "]";
      if (!b[t].is_string()) reject(where, "name must be a string");
      std::string name = b[t].get<std::string>();
      if (name.empty() || name.find_first_of(" \t\n^") != std::string::npos)
        reject(where, "name must be non-empty without spaces or '^'");
      if (!seen.insert(name).second) reject(where, "repeated name \"" + name + "\"");
      doc.basis.push_back(name);
    }
  } else {
    doc.basis = default_names(doc.dim);
  }

  doc.mu = root.contains("mu") ? read_brackets(root["mu"], doc.dim, "mu") : std::vector<BracketEntry>{};
  const bool explicit_form = root.contains("gamma") || root.contains("phi");
  if (explicit_form && root.contains("r")) reject("document", "give either r or gamma/phi, not both");
  if (root.contains("r")) {
    doc.r = read_pairs(root["r"], doc.dim, "r");
  } else {
    doc.gamma = root.contains("gamma") ? read_brackets(root["gamma"], doc.dim, "gamma") : std::vector<BracketEntry>{};
    doc.phi = root.contains("phi") ? read_triples(root["phi"], doc.dim, "phi") : std::vector<TripleEntry>{};
  }
  return doc;
}

InputDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

std::string quote(const std::string& s) { return json(s).dump(); }

template <class Entry, class F>
void write_list(std::ostringstream& os, const std::string& key, const std::vector<Entry>& v, F&& row, bool last) {
  os << "  " << quote(key) << ": ";
  if (v.empty()) {
    os << "[]";
  } else {
    os << "[\n";
    for (std::size_t t = 0; t < v.size(); ++t) os << "    " << row(v[t]) << (t + 1 < v.size() ? ",\n" : "\n");
    os << "  ]";
  }
  os << (last ? "\n" : ",\n");
}

}  // namespace

std::string serialize(const InputDocument& doc) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << doc.dim << ",\n  \"basis\": [";
  for (std::size_t t = 0; t < doc.basis.size(); ++t) os << (t ? ", " : "") << quote(doc.basis[t]);
  os << "],\n";
  auto bracket_row = [](const BracketEntry& e) {
    return "[" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) + ", " + std::to_string(e.k + 1) + ", " +
           quote(to_string(e.value)) + "]";
  };
  auto triple_row = [](const TripleEntry& e) {
    return "[" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) + ", " + std::to_string(e.k + 1) + ", " +
           quote(to_string(e.value)) + "]";
  };
  auto pair_row = [](const PairEntry& e) {
    return "[" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) + ", " + quote(to_string(e.value)) + "]";
  };
  if (doc.exact()) {
    write_list(os, "mu", doc.mu, bracket_row, false);
    write_list(os, "r", *doc.r, pair_row, true);
  } else {
    write_list(os, "mu", doc.mu, bracket_row, false);
    write_list(os, "gamma", doc.gamma.value_or(std::vector<BracketEntry>{}), bracket_row, false);
    write_list(os, "phi", doc.phi.value_or(std::vector<TripleEntry>{}), triple_row, true);
  }
  os << "}\n";
  return os.str();
}

namespace {

BracketTable table_from(SpaceId s, const std::vector<BracketEntry>& entries) {
  BracketTable t(s);
  for (const auto& e : entries) t.set_constant(e.i, e.j, e.k, e.value);
  return t;
}

std::vector<BracketEntry> entries_from(const BracketTable& t) {
  std::vector<BracketEntry> out;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = i + 1; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k)
        if (Scalar c = t.constant(i, j, k); sgn(c) != 0) out.push_back({i, j, k, c});
  return out;
}

}  // namespace

QuasiLieBialgebra to_structure(const InputDocument& doc) {
  const SpaceId G = primal_space(doc.dim);
  BracketTable mu = table_from(G, doc.mu);
  if (doc.exact()) {
    Multivector r(G);
    for (const auto& e : *doc.r) r.add_term(make_blade({e.i, e.j}), e.value);
    return exact_structure(mu, r, doc.basis);
  }
  Multivector phi(G);
  for (const auto& e : doc.phi.value_or(std::vector<TripleEntry>{})) phi.add_term(make_blade({e.i, e.j, e.k}), e.value);
  return QuasiLieBialgebra(doc.basis, std::move(mu),
                           table_from(dual_space(doc.dim), doc.gamma.value_or(std::vector<BracketEntry>{})), phi);
}

InputDocument from_structure(const QuasiLieBialgebra& q) {
  InputDocument doc;
  doc.dim = q.n;
  doc.basis = q.basis;
  doc.mu = entries_from(q.mu);
  doc.gamma = entries_from(q.gamma);
  std::vector<TripleEntry> phi;
  for (const auto& [b, v] : q.phi.terms()) {
    auto idx = indices_of(b);
    phi.push_back({idx[0], idx[1], idx[2], v});
  }
  doc.phi = phi;
  return doc;
}

// ---- catalog -----------------------------------------------------------------

std::vector<std::string> catalog_names() {
  return {"abelian2", "heisenberg3", "sl2-bialgebra", "sl2-exact-r", "sl2-quasitriangular"};
}

namespace {

std::vector<BracketEntry> sl2_mu() { return {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}; }

}  // namespace

InputDocument example_catalog(std::string_view name) {
  InputDocument doc;
  if (name == "abelian2") {
    doc.dim = 2;
    doc.basis = {"a", "b"};
    doc.gamma.emplace();
    doc.phi.emplace();
  } else if (name == "heisenberg3") {
    doc.dim = 3;
    doc.basis = {"x", "y", "z"};
    doc.mu = {{0, 1, 2, 1}};
    doc.r = std::vector<PairEntry>{{0, 1, 1}};
  } else if (name == "sl2-exact-r") {
    doc.dim = 3;
    doc.basis = {"h", "e", "f"};
    doc.mu = sl2_mu();
    doc.r = std::vector<PairEntry>{{1, 2, 1}};
  } else if (name == "sl2-bialgebra") {
    // coboundary of e^f/2, i.e. the standard r-matrix e(x)f + h(x)h/4; phi = 0
    doc.dim = 3;
    doc.basis = {"h", "e", "f"};
    doc.mu = sl2_mu();
    doc.gamma = std::vector<BracketEntry>{{0, 1, 1, Scalar(1, 2)}, {0, 2, 2, Scalar(1, 2)}};
    doc.phi.emplace();
  } else if (name == "sl2-quasitriangular") {
    // r = e^f/2 + Casimir (e(x)f + f(x)e + h(x)h/2)
    Tensor r(3, 2);
    r.at({1, 2}) = Scalar(3, 2);
    r.at({2, 1}) = Scalar(1, 2);
    r.at({0, 0}) = Scalar(1, 2);
    auto q = from_quasitriangular(table_from(primal_space(3), sl2_mu()), r, {"h", "e", "f"});
    doc = from_structure(q);
  } else {
    std::string known;
    for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown example \"" + std::string(name) + "\" (known: " + known + ")");
  }
  return doc;
}

// ---- reports -------------------------------------------------------------------

namespace {

ojson item_json(const CheckItem& it) {
  ojson j;
  j["id"] = it.id;
  j["statement"] = it.statement;
  j["status"] = !it.evaluated ? "skipped" : (it.pass ? "pass" : "fail");
  j["cases"] = it.cases;
  if (it.evaluated && !it.pass) {
    j["witness"] = it.witness;
    j["lhs"] = it.lhs;
    j["rhs"] = it.rhs;
  }
  return j;
}

ojson suite_json(const ValidationReport& r) {
  ojson j;
  j["title"] = r.title;
  j["status"] = r.ok() ? "pass" : "fail";
  j["items"] = ojson::array();
  for (const auto& it : r.items) j["items"].push_back(item_json(it));
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

ojson skipped_suite(const std::string& title, const std::string& reason) {
  ojson j;
  j["title"] = title;
  j["status"] = "skipped";
  j["reason"] = reason;
  return j;
}

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

ojson input_json(const InputDocument& doc) {
  ojson j;
  j["dim"] = doc.dim;
  j["basis"] = doc.basis;
  j["construction"] = doc.exact() ? "exact" : "explicit";
  return j;
}

ojson entries_json(const std::vector<BracketEntry>& v) {
  ojson a = ojson::array();
  for (const auto& e : v) a.push_back(ojson::array({e.i + 1, e.j + 1, e.k + 1, to_string(e.value)}));
  return a;
}

struct Outcome {
  ojson suites = ojson::array();
  bool ok = true;
  void add(const ValidationReport& r) {
    suites.push_back(suite_json(r));
    ok = ok && r.ok();
  }
};

ojson finish(const std::string& command, const InputDocument& doc, Outcome& out, ojson artifacts) {
  ojson j;
  j["command"] = command;
  j["input"] = input_json(doc);
  j["status"] = out.ok ? "pass" : "fail";
  j["suites"] = std::move(out.suites);
  j["artifacts"] = std::move(artifacts);
  return j;
}

QuasiLieBialgebra structure_or_throw(const InputDocument& doc) {
  try {
    return to_structure(doc);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("document does not define a structure: ") + e.what());
  }
}

// Block of an operator between the k-th exterior powers.
Matrix grade_block(const EndoMatrix& op, int k) {
  std::vector<std::uint32_t> idx;
  for (std::uint32_t b = 0; b < op.size(); ++b)
    if (std::popcount(b) == k) idx.push_back(b);
  Matrix m(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = op.matrix()(idx[r], idx[c]);
  return m;
}

ValidationReport bv_suite(const QuasiLieBialgebra& q, const std::optional<BvStructure>& bv) {
  ValidationReport r;
  r.title = "bv";
  CheckBuilder solve_ck("bv-equation-solvable", "gamma(x0) = boundary_mu(phi) has a solution", q.basis);
  solve_ck.expect_true(bv.has_value(), [] { return std::string("linear system"); },
                       [] { return std::string("inconsistent"); });
  r.items.push_back(std::move(solve_ck).finish());
  if (!bv) return r;
  CheckBuilder verify("bv-solution-verified", "gamma(x0) = boundary_mu(phi), recomputed", q.basis);
  verify.expect(cobracket(q, bv->x0), boundary(q.mu, q.phi), [] { return std::string("x0"); });
  r.items.push_back(std::move(verify).finish());
  CheckBuilder square("bv-square", "Delta^2 + d_mu Phi + Phi d_mu = 0 with Delta = boundary_gamma + i_x0", q.basis);
  square.expect(bv->delta_op * bv->delta_op + anticommutator(bv->differential, bv->phi_op), EndoMatrix(q.dual()),
                [] { return std::string("operator identity"); });
  r.items.push_back(std::move(square).finish());
  return r;
}

}  // namespace

RunResult run_check(const InputDocument& doc, const RunFlags& flags) {
  const QuasiLieBialgebra q = structure_or_throw(doc);
  Outcome out;
  ojson art;
  out.add(validate(q));

  ojson cob;
  for (int k = 0; k < q.n; ++k) cob[q.basis[k]] = format(cobracket(q, Multivector::basis(q.primal(), k)), q.basis);
  art["cobracket"] = cob;
  art["phi"] = format(q.phi, q.basis);
  const Characters ch = characters(q);
  art["characters"] = ojson{{"xi_mu", format(ch.xi_mu, q.basis)}, {"x_gamma", format(ch.x_gamma, q.basis)}};

  if (q.n <= flags.suite_max_dim) {
    out.add(relations_suite(q));
    out.add(laplacian_suite(q));
    const EndoMatrix L = laplacian(q);
    ojson blocks = ojson::array();
    for (int k = 0; k <= q.n; ++k) blocks.push_back(ojson{{"grade", k}, {"matrix", matrix_json(grade_block(L, k))}});
    art["laplacian_blocks"] = blocks;
    art["cohomology_dimensions"] = cohomology_dimensions(q.mu);
    auto bv = bv_prerequisite(q);
    out.add(bv_suite(q, bv));
    if (bv) {
      ojson kernel = ojson::array();
      for (const auto& v : bv->kernel) kernel.push_back(format(v, q.basis));
      art["bv"] = ojson{{"x0", format(bv->x0, q.basis)}, {"kernel", kernel}};
    }
  } else {
    const std::string why = "dimension " + std::to_string(q.n) + " above --suite-max-dim " +
                            std::to_string(flags.suite_max_dim);
    for (const char* t : {"relations", "laplacian", "bv"}) out.suites.push_back(skipped_suite(t, why));
  }
  RunResult res;
  res.exit_code = out.ok ? 0 : 1;
  res.report = finish("check", doc, out, std::move(art));
  return res;
}

RunResult run_double(const InputDocument& doc, const RunFlags&) {
  const QuasiLieBialgebra q = structure_or_throw(doc);
  Outcome out;
  ojson art;
  auto axioms = validate(q);
  out.add(axioms);
  RunResult res;
  if (!axioms.ok()) {
    out.suites.push_back(skipped_suite("double", "input is not a Lie quasi-bialgebra"));
    res.exit_code = 1;
    res.report = finish("double", doc, out, std::move(art));
    return res;
  }
  const DoubleAlgebra d = assemble_double(q);
  ValidationReport dr;
  dr.title = "double";
  CheckBuilder jac("double-jacobi", "the bracket of D satisfies the Jacobi identity", d.basis);
  auto defects = jacobi_defect(d.bracket);
  jac.expect_true(defects.empty(),
                  [&] {
                    const auto& x = defects.front();
                    return "(" + d.basis[x.i] + "," + d.basis[x.j] + "," + d.basis[x.k] + ")";
                  },
                  [&] { return format(defects.front().value, d.basis); });
  dr.items.push_back(std::move(jac).finish());
  CheckBuilder inv("double-invariance", "the hyperbolic pairing is ad-invariant", d.basis);
  auto ir = verify_invariance(d);
  inv.expect_true(ir.ok, [&] { return "(" + d.basis[ir.u] + "," + d.basis[ir.v] + "," + d.basis[ir.w] + ")"; },
                  [] { return std::string("<[u,v],w> + <v,[u,w]> != 0"); });
  dr.items.push_back(std::move(inv).finish());
  auto g = primal_subspace(q.n);
  dr.append(verify_manin_pair(d, g));
  out.add(dr);

  auto gs = dual_subspace(q.n);
  verify_manin_pair(d, gs);
  art["dual_is_subalgebra"] = gs.closed;
  art["double_bracket"] = entries_json(entries_from(d.bracket));
  art["canonical_r"] = format(canonical_r(d), d.basis);

  const QuasiLieBialgebra qd = double_qlb(d);
  ValidationReport dv = validate(qd);
  dv.title = "double structure axioms";
  out.add(dv);

  InputDocument emitted;
  emitted.dim = 2 * q.n;
  emitted.basis = d.basis;
  emitted.mu = entries_from(qd.mu);
  std::vector<PairEntry> r;
  for (int i = 0; i < q.n; ++i) r.push_back({i, q.n + i, Scalar(1, 2)});
  emitted.r = r;
  res.emitted = emitted;
  res.exit_code = out.ok ? 0 : 1;
  res.report = finish("double", doc, out, std::move(art));
  return res;
}

RunResult run_rep_verify(const InputDocument& doc, const RunFlags& flags) {
  if (doc.dim > flags.max_dim)
    throw InputError("dimension " + std::to_string(doc.dim) + " exceeds the cap " + std::to_string(flags.max_dim) +
                     "; raise it with --max-dim");
  const QuasiLieBialgebra q = structure_or_throw(doc);
  Outcome out;
  ojson art;
  auto axioms = validate(q);
  out.add(axioms);
  RunResult res;
  if (!axioms.ok()) {
    for (const char* t : {"representation", "module isomorphism"})
      out.suites.push_back(skipped_suite(t, "input is not a Lie quasi-bialgebra"));
    res.exit_code = 1;
    res.report = finish("rep-verify", doc, out, std::move(art));
    return res;
  }
  out.add(verify_representation(q));
  auto iso = verify_q_isomorphism(q);
  out.add(iso);
  art["q_rank"] = std::stoul(iso.measurements.at("q_rank"));
  art["q_size"] = std::size_t{1} << (2 * q.n);
  res.exit_code = out.ok ? 0 : 1;
  res.report = finish("rep-verify", doc, out, std::move(art));
  return res;
}

std::string summarize(const ojson& report) {
  std::ostringstream os;
  for (const auto& s : report["suites"]) {
    if (s["status"] == "skipped") {
      os << "SKIP " << s["title"].get<std::string>() << ": " << s["reason"].get<std::string>() << "\n";
      continue;
    }
    for (const auto& it : s["items"]) {
      const std::string st = it["status"].get<std::string>();
      os << (st == "pass" ? "PASS " : st == "fail" ? "FAIL " : "SKIP ") << it["id"].get<std::string>();
      if (st == "pass") os << " (" << it["cases"].get<std::size_t>() << " cases)";
      if (st == "fail")
        os << " at " << it["witness"].get<std::string>() << ": " << it["lhs"].get<std::string>() << " vs "
           << it["rhs"].get<std::string>();
      os << "\n";
    }
  }
  os << "status: " << report["status"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace qlb
