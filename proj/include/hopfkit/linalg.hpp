#pragma once

// Dense exact linear algebra over Scalar: vectors, matrices, and small
// multi-leg tensors used for Sweedler-style expansions.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x
Vec scaled(const Vec& x, const Scalar& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  Vec column(std::size_t c) const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product; basis index of (i, j) is i * b.rows() + j.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix matrix_power(const Matrix& m, unsigned exponent);
std::size_t rank(Matrix m);
/// Exact inverse by Gauss-Jordan elimination, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Solves A x = b exactly; nullopt when inconsistent. Free variables are set to 0.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Row-major dense tensor with an arbitrary number of legs.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape);
  Tensor(std::vector<std::size_t> shape, std::vector<Scalar> data);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t legs() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }

  Scalar& operator[](std::size_t flat) { return data_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
  Scalar& at(std::initializer_list<std::size_t> idx) { return data_[flat_index(idx)]; }
  const Scalar& at(std::initializer_list<std::size_t> idx) const { return data_[flat_index(idx)]; }
  std::size_t flat_index(std::initializer_list<std::size_t> idx) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

  bool is_zero() const;
  Tensor& operator+=(const Tensor& o);
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<Scalar> data_;
};

/// Renders a tensor as a sum of basis tensor products, e.g. "x⊗1 + g⊗x".
/// leg_labels[l] names the basis of leg l.
std::string format_tensor(const Tensor& t, const std::vector<std::vector<std::string>>& leg_labels);
std::string format_vec(const Vec& v, const std::vector<std::string>& labels);
std::string format_matrix(const Matrix& m);

}  // namespace hopfkit
