#include "qlb/report.hpp"

#include <sstream>

namespace qlb {

bool ValidationReport::ok() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

const CheckItem* ValidationReport::find(std::string_view id) const {
  for (const auto& it : items)
    if (it.id == id) return &it;
  return nullptr;
}

const CheckItem* ValidationReport::first_failure() const {
  for (const auto& it : items)
    if (!it.pass) return &it;
  return nullptr;
}

void ValidationReport::append(const ValidationReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  measurements.insert(other.measurements.begin(), other.measurements.end());
}

CheckBuilder::CheckBuilder(std::string id, std::string statement, std::vector<std::string> names)
    : names_(std::move(names)) {
  item_.id = std::move(id);
  item_.statement = std::move(statement);
}

void CheckBuilder::fail(const Witness& witness, std::string lhs, std::string rhs) {
  if (!item_.pass) return;
  item_.pass = false;
  item_.witness = witness ? witness() : std::string{};
  item_.lhs = std::move(lhs);
  item_.rhs = std::move(rhs);
}

bool CheckBuilder::expect(const Multivector& lhs, const Multivector& rhs, const Witness& witness) {
  ++item_.cases;
  if (lhs == rhs) return true;
  fail(witness, format(lhs, names_), format(rhs, names_));
  return false;
}

bool CheckBuilder::expect(const Scalar& lhs, const Scalar& rhs, const Witness& witness) {
  ++item_.cases;
  if (lhs == rhs) return true;
  fail(witness, to_string(lhs), to_string(rhs));
  return false;
}

bool CheckBuilder::expect(const EndoMatrix& lhs, const EndoMatrix& rhs, const Witness& witness) {
  ++item_.cases;
  if (lhs == rhs) return true;
  const Matrix& x = lhs.matrix();
  const Matrix& y = rhs.matrix();
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (x(r, c) != y(r, c)) {
        std::string at = "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = ";
        fail(witness, at + to_string(x(r, c)), at + to_string(y(r, c)));
        return false;
      }
  fail(witness, "operator", "operator");
  return false;
}

bool CheckBuilder::expect(const Tensor& lhs, const Tensor& rhs, const Witness& witness) {
  ++item_.cases;
  if (lhs == rhs) return true;
  fail(witness, format_tensor(lhs), format_tensor(rhs));
  return false;
}

bool CheckBuilder::expect_true(bool ok, const Witness& witness, const std::function<std::string()>& detail) {
  ++item_.cases;
  if (ok) return true;
  fail(witness, detail ? detail() : "false", "true");
  return false;
}

std::string format_tensor(const Tensor& t) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (sgn(t[f]) == 0) continue;
    if (any) os << " + ";
    any = true;
    os << to_string(t[f]) << "*[";
    auto idx = t.unflatten(f);
    for (std::size_t s = 0; s < idx.size(); ++s) os << (s ? "," : "") << idx[s] + 1;
    os << "]";
  }
  return any ? os.str() : "0";
}

std::string describe_difference(const EndoMatrix& a, const EndoMatrix& b) {
  const Matrix& x = a.matrix();
  const Matrix& y = b.matrix();
  if (x.rows() != y.rows()) return "shape mismatch";
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (x(r, c) != y(r, c))
        return "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + to_string(x(r, c)) + " vs " +
               to_string(y(r, c));
  return "equal";
}

}  // namespace qlb
