#pragma once
#include <optional>
#include <vector>

#include "qlb/exterior.hpp"

namespace qlb {

// Dense tensor in the rank-fold tensor power of a dim-dimensional space.
class Tensor {
 public:
  Tensor(int dim, int rank);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  std::size_t size() const { return data_.size(); }

  Scalar& at(const std::vector<int>& idx) { return data_[offset(idx)]; }
  const Scalar& at(const std::vector<int>& idx) const { return data_[offset(idx)]; }
  Scalar& operator[](std::size_t flat) { return data_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
  std::vector<int> unflatten(std::size_t flat) const;

  bool is_zero() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.rank_ == b.rank_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(const std::vector<int>& idx) const;

  int dim_, rank_;
  std::vector<Scalar> data_;
};

// Signed sum over slot permutations, no 1/r! factor. Ranks 1..4.
Tensor alt(const Tensor& t);

// The grade-k part of x as sum over permutations of sign * x_s(1) (x) ... .
Tensor embed(const Multivector& x, int k);

// Inverse of embed on antisymmetric tensors; nullopt if t is not antisymmetric.
std::optional<Multivector> antisymmetric_part_as_multivector(const Tensor& t, SpaceId space);

}  // namespace qlb
