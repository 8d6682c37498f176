#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qlb/quasi_bialgebra.hpp"

namespace qlb {

// Bad document, unknown fixture, dimension over the cap: exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Indices are 0-based here, 1-based in documents.
struct BracketEntry {
  int i, j, k;  // i < j
  Scalar value;
  auto operator<=>(const BracketEntry& o) const { return std::tie(i, j, k) <=> std::tie(o.i, o.j, o.k); }
  bool operator==(const BracketEntry&) const = default;
};

struct TripleEntry {
  int i, j, k;  // i < j < k
  Scalar value;
  auto operator<=>(const TripleEntry& o) const { return std::tie(i, j, k) <=> std::tie(o.i, o.j, o.k); }
  bool operator==(const TripleEntry&) const = default;
};

struct PairEntry {
  int i, j;  // i < j
  Scalar value;
  auto operator<=>(const PairEntry& o) const { return std::tie(i, j) <=> std::tie(o.i, o.j); }
  bool operator==(const PairEntry&) const = default;
};

// Either explicit (gamma, phi; both default to zero) or exact (r).
struct InputDocument {
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> mu;
  std::optional<std::vector<BracketEntry>> gamma;
  std::optional<std::vector<TripleEntry>> phi;
  std::optional<std::vector<PairEntry>> r;

  bool exact() const { return r.has_value(); }
  bool operator==(const InputDocument&) const = default;
};

// Entries come back sorted with zero values dropped.
InputDocument parse_document(std::string_view text);
InputDocument read_document(const std::string& path);
// Canonical text: fixed key order, one entry per line, values as strings.
std::string serialize(const InputDocument& doc);

QuasiLieBialgebra to_structure(const InputDocument& doc);
// Explicit form of a structure.
InputDocument from_structure(const QuasiLieBialgebra& q);

std::vector<std::string> catalog_names();
InputDocument example_catalog(std::string_view name);

struct RunFlags {
  int max_dim = 5;         // rep-verify refuses larger n
  int suite_max_dim = 8;   // check skips the dense operator suites above this
};

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = 0;
  std::optional<InputDocument> emitted;
};

RunResult run_check(const InputDocument& doc, const RunFlags& flags = {});
RunResult run_double(const InputDocument& doc, const RunFlags& flags = {});
RunResult run_rep_verify(const InputDocument& doc, const RunFlags& flags = {});

// Short human-readable digest of a report, one line per item.
std::string summarize(const nlohmann::ordered_json& report);

}  // namespace qlb
