#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hallwb/limits.hpp"

namespace hallwb {

// Dense matrix over F_p, row-major, entries reduced into [0, p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, int p);

  static Matrix identity(int n, int p);
  static Matrix from_rows(int p, const std::vector<std::vector<int>>& rows, int cols = -1);
  static Matrix from_rows(int p, std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int p() const { return p_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, long long value);
  std::span<const std::uint8_t> data() const { return data_; }
  std::span<std::uint8_t> mutable_data() { return data_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Matrix transpose() const;
  std::vector<int> row(int r) const;
  std::vector<int> column(int c) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(int scalar) const;
  std::vector<int> apply(std::span<const int> x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<std::uint8_t> data_;
};

struct RowReduction {
  Matrix rref;
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RowReduction row_reduce(const Matrix& m);
int rank(const Matrix& m);
bool is_invertible(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
bool is_nilpotent(const Matrix& m);
Matrix power(const Matrix& m, int k);
// Vertical and block-diagonal concatenation.
Matrix stack(const Matrix& top, const Matrix& bottom);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

// A subspace of F_p^n, stored as the basis rows of its unique RREF.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient_dim, int p);  // zero subspace
  // Span of the rows of `generators`.
  static Subspace span(const Matrix& generators);
  static Subspace full(int ambient_dim, int p);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  int p() const { return p_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<int> basis_vector(int i) const { return basis_.row(i); }

  bool contains(std::span<const int> v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v (which must lie in the subspace) in the RREF basis.
  std::vector<int> coordinates(std::span<const int> v) const;
  // v reduced against the basis so that every pivot coordinate vanishes.
  std::vector<int> reduce(std::span<const int> v) const;
  // Columns that are not pivots; coordinates of the quotient F_p^n / U.
  std::vector<int> free_columns() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  int ambient_ = 0;
  int p_ = 2;
  Matrix basis_;
  std::vector<int> pivots_;
};

Subspace kernel_basis(const Matrix& m);
// Column space of m, as a subspace of F_p^{rows}.
Subspace column_space(const Matrix& m);
// m(U) for U a subspace of the source space.
Subspace image(const Matrix& m, const Subspace& u);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Gaussian binomial (n choose k)_p.
std::uint64_t gaussian_binomial(int n, int k, int p);

// All k-dimensional subspaces of F_p^n in lexicographic order of their RREF
// bytes. Throws CapacityError if the count exceeds limits.enum_cap.
std::vector<Subspace> enumerate_subspaces(int n, int k, int p, const Limits& limits = {});

}  // namespace hallwb
