#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symgame/matrix.hpp"

namespace symgame {

// Square 0/1 permutation matrix kept in compact column form: column j holds
// its single 1 in row delta_form()[j-1]. This is the delta_m[i_1 ... i_m]
// encoding, so targets are 1-based while storage slots are 0-based.
class PermutationMatrix {
 public:
  explicit PermutationMatrix(std::vector<std::uint32_t> image);

  static PermutationMatrix identity(std::size_t m);

  std::size_t size() const { return image_.size(); }

  // Row of the 1 in the given column, both 1-based.
  std::size_t image(std::size_t col) const { return image_[col - 1]; }

  const std::vector<std::uint32_t>& delta_form() const { return image_; }

  bool is_identity() const;

  friend bool operator==(const PermutationMatrix& a, const PermutationMatrix& b) = default;

 private:
  struct Unchecked {};
  PermutationMatrix(std::vector<std::uint32_t> image, Unchecked) : image_(std::move(image)) {}

  std::vector<std::uint32_t> image_;

  friend PermutationMatrix perm_compose(const PermutationMatrix&, const PermutationMatrix&);
  friend PermutationMatrix perm_inverse(const PermutationMatrix&);
  friend PermutationMatrix kron(const PermutationMatrix&, const PermutationMatrix&);
  friend PermutationMatrix swap_matrix(std::size_t, std::size_t);
};

// Equals dense(p) * dense(q) without expanding either factor.
PermutationMatrix perm_compose(const PermutationMatrix& p, const PermutationMatrix& q);

// For permutation matrices the inverse equals the transpose.
PermutationMatrix perm_inverse(const PermutationMatrix& p);

PermutationMatrix kron(const PermutationMatrix& p, const PermutationMatrix& q);

// The mn x mn factor-exchange matrix W_[m,n]: columns ordered with the first
// index (range m) varying slowest, rows with the second index slowest.
PermutationMatrix swap_matrix(std::size_t m, std::size_t n);

template <class T>
Matrix<T> dense(const PermutationMatrix& p) {
  Matrix<T> out(p.size(), p.size());
  for (std::size_t c = 0; c < p.size(); ++c) out(p.delta_form()[c] - 1, c) = T{1};
  return out;
}

// Row-vector action v * P in O(size): output column j picks v at the row of
// the 1 in column j.
template <class T>
std::vector<T> perm_apply_row(std::span<const T> v, const PermutationMatrix& p) {
  if (v.size() != p.size()) {
    throw DimensionError("row length " + std::to_string(v.size()) +
                         " does not match permutation size " + std::to_string(p.size()));
  }
  std::vector<T> out(v.size());
  for (std::size_t c = 0; c < p.size(); ++c) out[c] = v[p.delta_form()[c] - 1];
  return out;
}

template <class T>
std::vector<T> perm_apply_row(const std::vector<T>& v, const PermutationMatrix& p) {
  return perm_apply_row(std::span<const T>(v), p);
}

}  // namespace symgame
