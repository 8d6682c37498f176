#pragma once
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qlb/exterior.hpp"
#include "qlb/tensor.hpp"

namespace qlb {

struct CheckItem {
  std::string id;
  std::string statement;
  bool pass = true;
  bool evaluated = true;
  std::size_t cases = 0;
  // First failing case, if any.
  std::string witness;
  std::string lhs;
  std::string rhs;
};

struct ValidationReport {
  std::string title;
  std::vector<CheckItem> items;
  std::vector<std::string> notes;
  // Computed quantities worth reporting, e.g. a rank.
  std::map<std::string, std::string> measurements;

  bool ok() const;
  const CheckItem* find(std::string_view id) const;
  const CheckItem* first_failure() const;
  void append(const ValidationReport& other);
};

// Accumulates cases of one identity, keeping the first failure.
class CheckBuilder {
 public:
  CheckBuilder(std::string id, std::string statement, std::vector<std::string> names = {});

  using Witness = std::function<std::string()>;

  bool expect(const Multivector& lhs, const Multivector& rhs, const Witness& witness);
  bool expect(const Scalar& lhs, const Scalar& rhs, const Witness& witness);
  bool expect(const EndoMatrix& lhs, const EndoMatrix& rhs, const Witness& witness);
  bool expect(const Tensor& lhs, const Tensor& rhs, const Witness& witness);
  bool expect_true(bool ok, const Witness& witness, const std::function<std::string()>& detail);

  const CheckItem& item() const { return item_; }
  CheckItem finish() && { return std::move(item_); }

 private:
  void fail(const Witness& witness, std::string lhs, std::string rhs);

  CheckItem item_;
  std::vector<std::string> names_;
};

std::string format_tensor(const Tensor& t);
// First differing entry of two operators, as "entry (row,col): lhs vs rhs".
std::string describe_difference(const EndoMatrix& a, const EndoMatrix& b);

}  // namespace qlb
