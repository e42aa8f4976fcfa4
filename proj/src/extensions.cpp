#include "hallwb/extensions.hpp"

#include "hallwb/error.hpp"

namespace hallwb {

namespace {

std::vector<int> block_offsets(const Representation& m, const Representation& n) {
  const auto& q = m.quiver();
  std::vector<int> off(q.arrow_count() + 1, 0);
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    off[k + 1] = off[k] + n.dim(a.target) * m.dim(a.source);
  }
  return off;
}

}  // namespace

CocycleSpace cocycle_space(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  const auto& q = m.quiver();
  const int p = m.p();
  auto off = block_offsets(m, n);
  CocycleSpace cs;
  cs.z_dim = off.back();
  // Rows: images of the elementary f = E_{r,c} at vertex i.
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < q.vertex_count(); ++i) {
    for (int r = 0; r < n.dim(i); ++r) {
      for (int c = 0; c < m.dim(i); ++c) {
        std::vector<int> img(cs.z_dim, 0);
        for (int k = 0; k < q.arrow_count(); ++k) {
          const auto& a = q.arrow(k);
          const int cols = m.dim(a.source);
          // f_{t(a)} m_a: f at vertex t(a)=i contributes row r: E_{r,c} m_a = e_r ⊗ (row c of m_a)
          if (a.target == i) {
            for (int col = 0; col < cols; ++col) {
              int& slot = img[off[k] + r * cols + col];
              slot = (slot + m.map(k)(c, col)) % p;
            }
          }
          // - n_a f_{s(a)}: f at vertex s(a)=i: n_a E_{r,c} = (column r of n_a) ⊗ e_c
          if (a.source == i) {
            for (int row = 0; row < n.dim(a.target); ++row) {
              int& slot = img[off[k] + row * cols + c];
              slot = (slot + (p - n.map(k)(row, r))) % p;
            }
          }
        }
        rows.push_back(std::move(img));
      }
    }
  }
  auto red = row_reduce(Matrix::from_rows(p, rows, cs.z_dim));
  cs.b_dim = red.rank;
  std::vector<bool> pivot(cs.z_dim, false);
  for (int c : red.pivots) pivot[c] = true;
  for (int c = 0; c < cs.z_dim; ++c) {
    if (!pivot[c]) cs.complement.push_back(c);
  }
  return cs;
}

int ext1_dim(const Representation& m, const Representation& n) { return cocycle_space(m, n).ext_dim(); }

Representation extension_module(const Representation& m, const Representation& n, const std::vector<int>& cocycle) {
  check_compatible(m, n);
  const auto& q = m.quiver();
  auto off = block_offsets(m, n);
  if (static_cast<int>(cocycle.size()) != off.back()) throw InputError("cocycle has the wrong length");
  std::vector<int> dims;
  for (int v = 0; v < q.vertex_count(); ++v) dims.push_back(n.dim(v) + m.dim(v));
  std::vector<Matrix> maps;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    const int nt = n.dim(a.target), ns = n.dim(a.source), ms = m.dim(a.source);
    Matrix x = block_diagonal(n.map(k), m.map(k));
    for (int r = 0; r < nt; ++r)
      for (int c = 0; c < ms; ++c) x.set(r, ns + c, cocycle[off[k] + r * ms + c]);
    maps.push_back(std::move(x));
  }
  return Representation(m.quiver_ptr(), m.p(), dims, maps);
}

std::vector<Representation> extension_middle_terms(const Representation& m, const Representation& n,
                                                   const Limits& limits) {
  auto cs = cocycle_space(m, n);
  const int e = cs.ext_dim();
  const int p = m.p();
  if (checked_pow(p, e) > limits.enum_cap) {
    throw CapacityError("Ext^1 of dimension " + std::to_string(e) + " over F_" + std::to_string(p) +
                        " exceeds the enumeration cap");
  }
  std::vector<Representation> out;
  std::vector<int> cocycle(cs.z_dim, 0);
  out.push_back(extension_module(m, n, cocycle));
  // Projective points: the last nonzero coordinate is 1.
  for (int lead = 0; lead < e; ++lead) {
    std::vector<int> digits(lead, 0);
    while (true) {
      std::fill(cocycle.begin(), cocycle.end(), 0);
      for (int i = 0; i < lead; ++i) cocycle[cs.complement[i]] = digits[i];
      cocycle[cs.complement[lead]] = 1;
      out.push_back(extension_module(m, n, cocycle));
      int i = 0;
      while (i < lead && ++digits[i] == p) digits[i++] = 0;
      if (i == lead) break;
    }
  }
  return out;
}

}  // namespace hallwb
