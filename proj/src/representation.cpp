#include "hallwb/representation.hpp"

#include <numeric>

#include "hallwb/error.hpp"
#include "hallwb/field.hpp"

namespace hallwb {

Representation::Representation(QuiverPtr quiver, int p, std::vector<int> dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), p_(p), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw InputError("representation without a quiver");
  if (!is_supported_prime(p_)) throw InputError("unsupported prime " + std::to_string(p_));
  if (static_cast<int>(dims_.size()) != quiver_->vertex_count()) throw InputError("dimension vector length mismatch");
  if (static_cast<int>(maps_.size()) != quiver_->arrow_count()) throw InputError("arrow matrix count mismatch");
  for (int d : dims_) {
    if (d < 0) throw InputError("negative dimension");
  }
  for (int a = 0; a < quiver_->arrow_count(); ++a) {
    const auto& arr = quiver_->arrow(a);
    const auto& m = maps_[a];
    if (m.rows() != dims_[arr.target] || m.cols() != dims_[arr.source] || m.p() != p_) {
      throw InputError("matrix for arrow '" + arr.label + "' has shape " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(dims_[arr.target]) + "x" +
                       std::to_string(dims_[arr.source]));
    }
  }
}

Representation Representation::zero(QuiverPtr quiver, int p) {
  std::vector<int> dims(quiver->vertex_count(), 0);
  std::vector<Matrix> maps(quiver->arrow_count(), Matrix(0, 0, p));
  return Representation(std::move(quiver), p, dims, maps);
}

Representation Representation::simple(QuiverPtr quiver, int p, int vertex) {
  std::vector<int> dims(quiver->vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : quiver->arrows()) maps.emplace_back(dims[a.target], dims[a.source], p);
  return Representation(std::move(quiver), p, dims, maps);
}

int Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

std::string Representation::bytes() const {
  std::string out;
  out.push_back(static_cast<char>(p_));
  for (int d : dims_) out.push_back(static_cast<char>(d));
  for (const auto& m : maps_) {
    for (auto x : m.data()) out.push_back(static_cast<char>(x));
  }
  return out;
}

std::string Representation::dims_string() const {
  if (dims_.size() == 1) return std::to_string(dims_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) s += (i ? "," : "") + std::to_string(dims_[i]);
  return s + ")";
}

bool operator==(const Representation& a, const Representation& b) {
  return a.p_ == b.p_ && a.dims_ == b.dims_ && a.maps_ == b.maps_ &&
         (a.quiver_ == b.quiver_ || *a.quiver_ == *b.quiver_);
}

void check_compatible(const Representation& a, const Representation& b) {
  if (a.p() != b.p()) throw MismatchError("representations over different fields");
  if (a.quiver_ptr() != b.quiver_ptr() && !(a.quiver() == b.quiver())) {
    throw MismatchError("representations of different quivers ('" + a.quiver().name() + "' vs '" +
                        b.quiver().name() + "')");
  }
}

Representation direct_sum(const Representation& a, const Representation& b) {
  check_compatible(a, b);
  std::vector<int> dims(a.dims().size());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dim(static_cast<int>(i)) + b.dim(static_cast<int>(i));
  std::vector<Matrix> maps;
  for (int k = 0; k < a.quiver().arrow_count(); ++k) maps.push_back(block_diagonal(a.map(k), b.map(k)));
  return Representation(a.quiver_ptr(), a.p(), dims, maps);
}

Representation direct_sum(const std::vector<Representation>& ms, QuiverPtr quiver, int p) {
  Representation acc = Representation::zero(std::move(quiver), p);
  for (const auto& m : ms) acc = direct_sum(acc, m);
  return acc;
}

Representation direct_power(const Representation& m, int copies) {
  Representation acc = Representation::zero(m.quiver_ptr(), m.p());
  for (int i = 0; i < copies; ++i) acc = direct_sum(acc, m);
  return acc;
}

// ---------------------------------------------------------------------------
// Morphisms

Morphism identity_morphism(const Representation& m) {
  Morphism f;
  for (int d : m.dims()) f.push_back(Matrix::identity(d, m.p()));
  return f;
}

Morphism zero_morphism(const Representation& from, const Representation& to) {
  Morphism f;
  for (int v = 0; v < from.quiver().vertex_count(); ++v) f.emplace_back(to.dim(v), from.dim(v), from.p());
  return f;
}

Morphism compose(const Morphism& after, const Morphism& before) {
  Morphism f;
  for (std::size_t v = 0; v < after.size(); ++v) f.push_back(after[v] * before[v]);
  return f;
}

Morphism add(const Morphism& a, const Morphism& b) {
  Morphism f;
  for (std::size_t v = 0; v < a.size(); ++v) f.push_back(a[v] + b[v]);
  return f;
}

Morphism scale(const Morphism& a, int scalar) {
  Morphism f;
  for (const auto& m : a) f.push_back(m.scaled(scalar));
  return f;
}

Morphism morphism_power(const Morphism& f, int k) {
  Morphism out;
  for (const auto& m : f) out.push_back(power(m, k));
  return out;
}

bool is_invertible(const Morphism& f) {
  for (const auto& m : f) {
    if (!is_invertible(m)) return false;
  }
  return true;
}

bool is_nilpotent(const Morphism& f) {
  for (const auto& m : f) {
    if (!is_nilpotent(m)) return false;
  }
  return true;
}

bool is_zero(const Morphism& f) {
  for (const auto& m : f) {
    if (!m.is_zero()) return false;
  }
  return true;
}

bool is_intertwiner(const Morphism& f, const Representation& from, const Representation& to) {
  for (int a = 0; a < from.quiver().arrow_count(); ++a) {
    const auto& arr = from.quiver().arrow(a);
    if (!(f[arr.target] * from.map(a) == to.map(a) * f[arr.source])) return false;
  }
  return true;
}

Morphism HomSpace::combination(std::span<const int> coefficients) const {
  if (basis.empty()) throw InputError("combination in a zero Hom space");
  Morphism acc = basis.front();
  for (auto& m : acc) m = m.scaled(0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coefficients[i] != 0) acc = add(acc, scale(basis[i], coefficients[i]));
  }
  return acc;
}

namespace {

// Linear system whose kernel is Hom(m, n); variables are the entries of
// phi_v (row-major, n_v x m_v) laid out vertex after vertex.
Matrix intertwiner_system(const Representation& m, const Representation& n, std::vector<int>& offsets) {
  const auto& q = m.quiver();
  const int p = m.p();
  offsets.assign(q.vertex_count() + 1, 0);
  for (int v = 0; v < q.vertex_count(); ++v) offsets[v + 1] = offsets[v] + n.dim(v) * m.dim(v);
  int equations = 0;
  for (const auto& a : q.arrows()) equations += n.dim(a.target) * m.dim(a.source);
  Matrix sys(equations, offsets.back(), p);
  int row = 0;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    const int i = a.source;
    const int j = a.target;
    const auto& ma = m.map(k);
    const auto& na = n.map(k);
    for (int r = 0; r < n.dim(j); ++r) {
      for (int c = 0; c < m.dim(i); ++c, ++row) {
        // (phi_j M_a)[r,c] = sum_l phi_j[r,l] M_a[l,c]
        for (int l = 0; l < m.dim(j); ++l) {
          int coeff = ma(l, c);
          if (coeff == 0) continue;
          int var = offsets[j] + r * m.dim(j) + l;
          sys.set(row, var, sys(row, var) + coeff);
        }
        // -(N_a phi_i)[r,c] = -sum_l N_a[r,l] phi_i[l,c]
        for (int l = 0; l < n.dim(i); ++l) {
          int coeff = na(r, l);
          if (coeff == 0) continue;
          int var = offsets[i] + l * m.dim(i) + c;
          sys.set(row, var, sys(row, var) - coeff);
        }
      }
    }
  }
  return sys;
}

}  // namespace

HomSpace hom_space(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  std::vector<int> offsets;
  Matrix sys = intertwiner_system(m, n, offsets);
  Subspace ker = kernel_basis(sys);
  HomSpace hom;
  const auto& q = m.quiver();
  for (int b = 0; b < ker.dim(); ++b) {
    Morphism f;
    for (int v = 0; v < q.vertex_count(); ++v) {
      Matrix block(n.dim(v), m.dim(v), m.p());
      for (int r = 0; r < n.dim(v); ++r)
        for (int c = 0; c < m.dim(v); ++c) block.set(r, c, ker.basis()(b, offsets[v] + r * m.dim(v) + c));
      f.push_back(std::move(block));
    }
    hom.basis.push_back(std::move(f));
  }
  return hom;
}

int hom_dim(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  std::vector<int> offsets;
  Matrix sys = intertwiner_system(m, n, offsets);
  return sys.cols() - rank(sys);
}

// ---------------------------------------------------------------------------
// Subrepresentations and quotients

SubspaceTuple zero_tuple(const Representation& m) {
  SubspaceTuple u;
  for (int d : m.dims()) u.emplace_back(d, m.p());
  return u;
}

SubspaceTuple full_tuple(const Representation& m) {
  SubspaceTuple u;
  for (int d : m.dims()) u.push_back(Subspace::full(d, m.p()));
  return u;
}

bool is_closed(const Representation& m, const SubspaceTuple& u) {
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    const auto& src = u[a.source];
    for (int b = 0; b < src.dim(); ++b) {
      if (!u[a.target].contains(m.map(k).apply(src.basis_vector(b)))) return false;
    }
  }
  return true;
}

Representation restrict_to(const Representation& m, const SubspaceTuple& u) {
  if (!is_closed(m, u)) throw InputError("restrict_to: subspaces are not closed under the arrows");
  std::vector<int> dims;
  for (const auto& s : u) dims.push_back(s.dim());
  std::vector<Matrix> maps;
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    const auto& src = u[a.source];
    const auto& tgt = u[a.target];
    Matrix r(tgt.dim(), src.dim(), m.p());
    for (int b = 0; b < src.dim(); ++b) {
      auto coords = tgt.coordinates(m.map(k).apply(src.basis_vector(b)));
      for (int i = 0; i < tgt.dim(); ++i) r.set(i, b, coords[i]);
    }
    maps.push_back(std::move(r));
  }
  return Representation(m.quiver_ptr(), m.p(), dims, maps);
}

Representation quotient_by(const Representation& m, const SubspaceTuple& u) {
  if (!is_closed(m, u)) throw InputError("quotient_by: subspaces are not closed under the arrows");
  std::vector<std::vector<int>> free(u.size());
  std::vector<int> dims;
  for (std::size_t v = 0; v < u.size(); ++v) {
    free[v] = u[v].free_columns();
    dims.push_back(static_cast<int>(free[v].size()));
  }
  std::vector<Matrix> maps;
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    Matrix r(dims[a.target], dims[a.source], m.p());
    for (int b = 0; b < dims[a.source]; ++b) {
      std::vector<int> e(m.dim(a.source), 0);
      e[free[a.source][b]] = 1;
      auto img = u[a.target].reduce(m.map(k).apply(e));
      for (int i = 0; i < dims[a.target]; ++i) r.set(i, b, img[free[a.target][i]]);
    }
    maps.push_back(std::move(r));
  }
  return Representation(m.quiver_ptr(), m.p(), dims, maps);
}

Matrix total_operator(const Representation& m) {
  const auto& q = m.quiver();
  std::vector<int> offset(q.vertex_count() + 1, 0);
  for (int v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + m.dim(v);
  Matrix t(offset.back(), offset.back(), m.p());
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    for (int r = 0; r < m.dim(a.target); ++r)
      for (int c = 0; c < m.dim(a.source); ++c) {
        int row = offset[a.target] + r;
        int col = offset[a.source] + c;
        t.set(row, col, t(row, col) + m.map(k)(r, c));
      }
  }
  return t;
}

bool is_nilpotent(const Representation& m) {
  if (!m.quiver().has_oriented_cycle()) return true;
  // rad^{k+1} = Σ_a M_a(rad^k); nilpotent iff the descent reaches zero.
  // (The sum of the arrow matrices is not enough: two loops x = y = 1 over
  // F_2 add up to zero.)
  SubspaceTuple layer = full_tuple(m);
  for (int step = 0; step <= m.total_dim(); ++step) {
    SubspaceTuple next = zero_tuple(m);
    for (int k = 0; k < m.quiver().arrow_count(); ++k) {
      const auto& a = m.quiver().arrow(k);
      next[a.target] = sum(next[a.target], image(m.map(k), layer[a.source]));
    }
    bool zero = true;
    for (const auto& u : next) zero = zero && u.dim() == 0;
    if (zero) return true;
    if (next == layer) return false;
    layer = std::move(next);
  }
  return false;
}

Representation dual(const Representation& m, QuiverPtr opposite_quiver) {
  if (opposite_quiver->vertex_count() != m.quiver().vertex_count() ||
      opposite_quiver->arrow_count() != m.quiver().arrow_count()) {
    throw MismatchError("dual: quiver is not the opposite");
  }
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    const auto& b = opposite_quiver->arrow(k);
    if (a.source != b.target || a.target != b.source) throw MismatchError("dual: quiver is not the opposite");
  }
  std::vector<Matrix> maps;
  for (const auto& mat : m.maps()) maps.push_back(mat.transpose());
  return Representation(std::move(opposite_quiver), m.p(), m.dims(), maps);
}

Representation extend_by_zero(const Representation& m, QuiverPtr larger) {
  std::vector<int> dims(larger->vertex_count(), 0);
  for (int v = 0; v < m.quiver().vertex_count(); ++v) {
    auto w = larger->vertex_index(m.quiver().vertex_id(v));
    if (!w) throw MismatchError("extend_by_zero: vertex '" + m.quiver().vertex_id(v) + "' missing");
    dims[*w] = m.dim(v);
  }
  std::vector<Matrix> maps;
  for (const auto& a : larger->arrows()) maps.emplace_back(dims[a.target], dims[a.source], m.p());
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    auto b = larger->arrow_index(a.label);
    if (!b || larger->vertex_id(larger->arrow(*b).source) != m.quiver().vertex_id(a.source) ||
        larger->vertex_id(larger->arrow(*b).target) != m.quiver().vertex_id(a.target)) {
      throw MismatchError("extend_by_zero: arrow '" + a.label + "' missing");
    }
    maps[*b] = m.map(k);
  }
  return Representation(std::move(larger), m.p(), dims, maps);
}

}  // namespace hallwb
