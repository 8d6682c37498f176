#include "qlb/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qlb {

namespace {

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

Tensor::Tensor(int dim, int rank) : dim_(dim), rank_(rank) {
  if (dim < 0 || rank < 0) throw std::invalid_argument("Tensor: negative shape");
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
  data_.resize(n);
}

std::size_t Tensor::offset(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != rank_) throw std::invalid_argument("Tensor: wrong index count");
  std::size_t off = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw std::out_of_range("Tensor: index out of range");
    off = off * dim_ + i;
  }
  return off;
}

std::vector<int> Tensor::unflatten(std::size_t flat) const {
  std::vector<int> idx(rank_);
  for (int s = rank_ - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(flat % dim_);
    flat /= dim_;
  }
  return idx;
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& v) { return sgn(v) == 0; });
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (dim_ != o.dim_ || rank_ != o.rank_) throw std::invalid_argument("Tensor shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (dim_ != o.dim_ || rank_ != o.rank_) throw std::invalid_argument("Tensor shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Tensor alt(const Tensor& t) {
  if (t.rank() < 1 || t.rank() > 4) throw std::invalid_argument("alt: rank out of supported range");
  Tensor out(t.dim(), t.rank());
  std::vector<int> perm(t.rank());
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (sgn(t[flat]) == 0) continue;
    auto idx = t.unflatten(flat);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> moved(t.rank());
      for (int s = 0; s < t.rank(); ++s) moved[s] = idx[perm[s]];
      out.at(moved) += permutation_sign(perm) * t[flat];
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

Tensor embed(const Multivector& x, int k) {
  Tensor out(x.space().dim(), k);
  std::vector<int> perm(k);
  for (const auto& [b, v] : x.terms()) {
    if (b.grade() != k) continue;
    auto idx = indices_of(b);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> slot(k);
      for (int s = 0; s < k; ++s) slot[s] = idx[perm[s]];
      out.at(slot) += permutation_sign(perm) * v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::optional<Multivector> antisymmetric_part_as_multivector(const Tensor& t, SpaceId space) {
  if (space.dim() != t.dim()) throw SpaceMismatch("antisymmetric_part_as_multivector: dimension");
  Multivector m(space);
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    auto idx = t.unflatten(flat);
    if (!std::is_sorted(idx.begin(), idx.end()) ||
        std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      continue;
    Blade b;
    for (int i : idx) b.bits |= 1u << i;
    m.add_term(b, t[flat]);
  }
  if (!(embed(m, t.rank()) == t)) return std::nullopt;
  return m;
}

}  // namespace qlb
