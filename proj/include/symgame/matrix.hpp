#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "symgame/config.hpp"
#include "symgame/error.hpp"

namespace symgame {

namespace detail {
inline void check_dense_size(std::size_t rows, std::size_t cols) {
  if (rows != 0 && cols > size_cap() / rows) {
    throw SizeLimitError("dense " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " matrix exceeds the size cap");
  }
}
}  // namespace detail

// Row-major rectangular matrix over an exact or float scalar. Element access
// is 0-based; all 1-based index conventions live in the domain types built on
// top of this.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    detail::check_dense_size(rows, cols);
    data_.assign(rows * cols, T{});
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    detail::check_dense_size(rows, cols);
    if (data_.size() != rows * cols) {
      throw DimensionError("matrix data size does not match rows*cols");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("product shape mismatch: " + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sum shape mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("diff shape mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  detail::check_dense_size(a.rows() * b.rows(), a.cols() * b.cols());
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (aij == T{}) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
    }
  }
  return out;
}

// Left semi-tensor product: (A x I_{t/n}) (B x I_{t/p}) with t = lcm(n, p).
// Degenerates to the ordinary product when the inner dimensions match.
template <class T>
Matrix<T> stp(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.cols();
  const std::size_t p = b.rows();
  if (n == 0 || p == 0) throw DimensionError("semi-tensor product of an empty operand");
  if (n == p) return a * b;
  const std::size_t t = std::lcm(n, p);
  return kron(a, Matrix<T>::identity(t / n)) * kron(b, Matrix<T>::identity(t / p));
}

using MatrixD = Matrix<double>;

}  // namespace symgame
