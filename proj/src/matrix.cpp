#include "hallwb/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "hallwb/error.hpp"
#include "hallwb/field.hpp"

namespace hallwb {

namespace {

int reduce_mod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod(int a, int p) {
  for (int b = 1; b < p; ++b) {
    if ((a * b) % p == 1) return b;
  }
  throw Error("zero has no inverse");
}

void check_same_field(const Matrix& a, const Matrix& b) {
  if (a.p() != b.p()) throw MismatchError("matrices over different fields");
}

}  // namespace

Matrix::Matrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix shape");
}

Matrix Matrix::identity(int n, int p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(int p, const std::vector<std::vector<int>>& rows, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  Matrix m(static_cast<int>(rows.size()), c, p);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != c) throw InputError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.set(r, j, rows[r][j]);
  }
  return m;
}

Matrix Matrix::from_rows(int p, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(p, v);
}

void Matrix::set(int r, int c, long long value) {
  data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(reduce_mod(value, p_));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, p_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.data_[static_cast<std::size_t>(c) * rows_ + r] = (*this)(r, c);
  }
  return t;
}

std::vector<int> Matrix::row(int r) const {
  std::vector<int> v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

std::vector<int> Matrix::column(int c) const {
  std::vector<int> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols_ != b.rows_) throw MismatchError("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_, a.p_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      int x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        auto& slot = m.data_[static_cast<std::size_t>(i) * m.cols_ + j];
        slot = static_cast<std::uint8_t>((slot + x * b(k, j)) % a.p_);
      }
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MismatchError("matrix sum shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) {
    m.data_[i] = static_cast<std::uint8_t>((a.data_[i] + b.data_[i]) % a.p_);
  }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(a.p() - 1); }

Matrix Matrix::scaled(int scalar) const {
  Matrix m = *this;
  int s = reduce_mod(scalar, p_);
  for (auto& x : m.data_) x = static_cast<std::uint8_t>((x * s) % p_);
  return m;
}

std::vector<int> Matrix::apply(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != cols_) throw MismatchError("vector length mismatch");
  std::vector<int> y(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    int acc = 0;
    for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc % p_;
  }
  return y;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < rows_; ++r) {
    out << (r ? "," : "") << "[";
    for (int c = 0; c < cols_; ++c) out << (c ? "," : "") << (*this)(r, c);
    out << "]";
  }
  out << "]";
  return out.str();
}

RowReduction row_reduce(const Matrix& m) {
  RowReduction out;
  out.rref = m;
  Matrix& a = out.rref;
  const int p = m.p();
  auto data = a.mutable_data();
  const int rows = a.rows();
  const int cols = a.cols();
  auto at = [&](int r, int c) -> std::uint8_t& { return data[static_cast<std::size_t>(r) * cols + c]; };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    int s = inv_mod(at(rank, c), p);
    for (int j = c; j < cols; ++j) at(rank, j) = static_cast<std::uint8_t>((at(rank, j) * s) % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || at(r, c) == 0) continue;
      int f = p - at(r, c);
      for (int j = c; j < cols; ++j) at(r, j) = static_cast<std::uint8_t>((at(r, j) + f * at(rank, j)) % p);
    }
    out.pivots.push_back(c);
    ++rank;
  }
  out.rank = rank;
  return out;
}

int rank(const Matrix& m) { return row_reduce(m).rank; }

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const int n = m.rows();
  Matrix aug(n, 2 * n, m.p());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, 1);
  }
  auto red = row_reduce(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n, m.p());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inv.set(r, c, red.rref(r, n + c));
  }
  return inv;
}

Matrix power(const Matrix& m, int k) {
  Matrix r = Matrix::identity(m.rows(), m.p());
  Matrix base = m;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw MismatchError("nilpotency of a non-square matrix");
  if (m.rows() == 0) return true;
  return power(m, m.rows()).is_zero();
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  check_same_field(top, bottom);
  if (top.cols() != bottom.cols()) throw MismatchError("stack: column mismatch");
  Matrix m(top.rows() + bottom.rows(), top.cols(), top.p());
  for (int r = 0; r < top.rows(); ++r)
    for (int c = 0; c < top.cols(); ++c) m.set(r, c, top(r, c));
  for (int r = 0; r < bottom.rows(); ++r)
    for (int c = 0; c < bottom.cols(); ++c) m.set(top.rows() + r, c, bottom(r, c));
  return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.set(r, c, a(r, c));
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m.set(a.rows() + r, a.cols() + c, b(r, c));
  return m;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(int ambient_dim, int p) : ambient_(ambient_dim), p_(p), basis_(0, ambient_dim, p) {}

Subspace Subspace::span(const Matrix& generators) {
  auto red = row_reduce(generators);
  Subspace s(generators.cols(), generators.p());
  s.basis_ = Matrix(red.rank, generators.cols(), generators.p());
  for (int r = 0; r < red.rank; ++r)
    for (int c = 0; c < generators.cols(); ++c) s.basis_.set(r, c, red.rref(r, c));
  s.pivots_ = red.pivots;
  return s;
}

Subspace Subspace::full(int ambient_dim, int p) { return span(Matrix::identity(ambient_dim, p)); }

std::vector<int> Subspace::reduce(std::span<const int> v) const {
  std::vector<int> w(v.begin(), v.end());
  for (int i = 0; i < dim(); ++i) {
    int c = pivots_[i];
    int f = w[c];
    if (f == 0) continue;
    for (int j = 0; j < ambient_; ++j) w[j] = (w[j] + (p_ - f) * basis_(i, j)) % p_;
  }
  return w;
}

bool Subspace::contains(std::span<const int> v) const {
  auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

std::vector<int> Subspace::coordinates(std::span<const int> v) const {
  std::vector<int> x(dim());
  for (int i = 0; i < dim(); ++i) x[i] = v[pivots_[i]];
  return x;
}

std::vector<int> Subspace::free_columns() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Subspace kernel_basis(const Matrix& m) {
  auto red = row_reduce(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : red.pivots) is_pivot[c] = true;
  std::vector<std::vector<int>> gens;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<int> x(n, 0);
    x[f] = 1;
    for (int i = 0; i < red.rank; ++i) x[red.pivots[i]] = (m.p() - red.rref(i, f)) % m.p();
    gens.push_back(std::move(x));
  }
  return Subspace::span(Matrix::from_rows(m.p(), gens, n));
}

Subspace column_space(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace image(const Matrix& m, const Subspace& u) {
  if (u.ambient_dim() != m.cols()) throw MismatchError("image: subspace not in the source space");
  // rows of (basis * m^T) are the images of the basis vectors
  return Subspace::span(u.basis() * m.transpose());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw MismatchError("sum of subspaces of different spaces");
  return Subspace::span(stack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw MismatchError("intersection of subspaces of different spaces");
  // x in a ∩ b iff x = sum s_i a_i = sum t_j b_j; solve [A; -B]^T (s,t) = 0.
  const int n = a.ambient_dim();
  const int p = a.p();
  Matrix sys(n, a.dim() + b.dim(), p);
  for (int i = 0; i < a.dim(); ++i)
    for (int c = 0; c < n; ++c) sys.set(c, i, a.basis()(i, c));
  for (int j = 0; j < b.dim(); ++j)
    for (int c = 0; c < n; ++c) sys.set(c, a.dim() + j, p - b.basis()(j, c));
  auto ker = kernel_basis(sys);
  std::vector<std::vector<int>> gens;
  for (int k = 0; k < ker.dim(); ++k) {
    std::vector<int> x(n, 0);
    for (int i = 0; i < a.dim(); ++i) {
      int s = ker.basis()(k, i);
      if (s == 0) continue;
      for (int c = 0; c < n; ++c) x[c] = (x[c] + s * a.basis()(i, c)) % p;
    }
    gens.push_back(std::move(x));
  }
  return Subspace::span(Matrix::from_rows(p, gens, n));
}

std::uint64_t gaussian_binomial(int n, int k, int p) {
  if (k < 0 || k > n) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (int i = 0; i < k; ++i) {
    num *= checked_pow(p, n - i) - 1;
    den *= checked_pow(p, k - i) - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(int n, int k, int p, const Limits& limits) {
  if (k < 0 || k > n) throw InputError("enumerate_subspaces: need 0 <= k <= n");
  if (gaussian_binomial(n, k, p) > limits.enum_cap) {
    throw CapacityError("subspace enumeration of (" + std::to_string(n) + " choose " + std::to_string(k) +
                        ")_" + std::to_string(p) + " exceeds cap");
  }
  std::vector<Subspace> out;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // free slots: (row i, column c) with c > piv[i] and c not a pivot
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i) {
      for (int c = piv[i] + 1; c < n; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(i, c);
      }
    }
    std::vector<int> digits(slots.size(), 0);
    while (true) {
      Matrix b(k, n, p);
      for (int i = 0; i < k; ++i) b.set(i, piv[i], 1);
      for (std::size_t s = 0; s < slots.size(); ++s) b.set(slots[s].first, slots[s].second, digits[s]);
      out.push_back(Subspace::span(b));
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
      if (s == digits.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hallwb
