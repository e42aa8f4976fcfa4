#include "hallwb/loewy.hpp"

#include <functional>

#include "hallwb/error.hpp"

namespace hallwb {

void require_loewy_support(const Representation& m) {
  if (m.quiver().has_oriented_cycle() && !is_nilpotent(m)) {
    throw UnsupportedError("Loewy data needs an acyclic quiver or a nilpotent representation");
  }
}

namespace {

SubspaceTuple next_radical(const Representation& m, const SubspaceTuple& current) {
  SubspaceTuple next = zero_tuple(m);
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    next[a.target] = sum(next[a.target], image(m.map(k), current[a.source]));
  }
  return next;
}

int total(const SubspaceTuple& u) {
  int t = 0;
  for (const auto& s : u) t += s.dim();
  return t;
}

}  // namespace

SubspaceTuple radical_spaces(const Representation& m) {
  require_loewy_support(m);
  return next_radical(m, full_tuple(m));
}

SubspaceTuple socle_spaces(const Representation& m) {
  require_loewy_support(m);
  SubspaceTuple soc = full_tuple(m);
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    soc[a.source] = intersect(soc[a.source], kernel_basis(m.map(k)));
  }
  return soc;
}

LoewyData loewy_data(const Representation& m) {
  auto rad = radical_spaces(m);
  auto soc = socle_spaces(m);
  return LoewyData{SubrepEmbedding{restrict_to(m, rad), rad}, SubrepEmbedding{restrict_to(m, soc), soc},
                   quotient_by(m, rad)};
}

std::vector<int> radical_layer_dims(const Representation& m) {
  require_loewy_support(m);
  std::vector<int> layers;
  SubspaceTuple cur = full_tuple(m);
  int cur_dim = total(cur);
  while (cur_dim > 0) {
    SubspaceTuple next = next_radical(m, cur);
    int next_dim = total(next);
    if (next_dim == cur_dim) throw Error("radical series did not descend");
    layers.push_back(cur_dim - next_dim);
    cur = std::move(next);
    cur_dim = next_dim;
  }
  return layers;
}

bool is_uniserial(const Representation& m) {
  for (int d : radical_layer_dims(m)) {
    if (d > 1) return false;
  }
  return true;
}

ProjectiveInjective proj_inj(QuiverPtr quiver, int p, int vertex) {
  const Quiver& q = *quiver;
  if (q.has_oriented_cycle()) throw UnsupportedError("proj_inj needs an acyclic quiver (kQ is infinite-dimensional)");
  struct Path {
    int start;
    int end;
    std::vector<int> arrows;  // in order of application
  };
  std::vector<Path> paths;
  std::function<void(Path)> extend = [&](Path path) {
    paths.push_back(path);
    for (int a : q.arrows_from(path.end)) {
      Path next = path;
      next.arrows.push_back(a);
      next.end = q.arrow(a).target;
      extend(next);
    }
  };
  for (int v = 0; v < q.vertex_count(); ++v) extend(Path{v, v, {}});

  auto build = [&](bool projective) {
    // projective: paths starting at `vertex`, graded by end.
    // injective: paths ending at `vertex`, graded by start.
    std::vector<std::vector<int>> basis(q.vertex_count());
    for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
      const auto& path = paths[i];
      if (projective && path.start == vertex) basis[path.end].push_back(i);
      if (!projective && path.end == vertex) basis[path.start].push_back(i);
    }
    std::vector<int> dims;
    for (const auto& b : basis) dims.push_back(static_cast<int>(b.size()));
    std::vector<Matrix> maps;
    for (int k = 0; k < q.arrow_count(); ++k) {
      const auto& a = q.arrow(k);
      Matrix mat(dims[a.target], dims[a.source], p);
      for (int c = 0; c < dims[a.source]; ++c) {
        const auto& w = paths[basis[a.source][c]];
        for (int r = 0; r < dims[a.target]; ++r) {
          const auto& u = paths[basis[a.target][r]];
          bool hit = false;
          if (projective) {
            // a · w = u
            hit = u.arrows.size() == w.arrows.size() + 1 && u.arrows.back() == k &&
                  std::equal(w.arrows.begin(), w.arrows.end(), u.arrows.begin());
          } else {
            // a · w* = u*  when w = (a, then u)
            hit = w.arrows.size() == u.arrows.size() + 1 && w.arrows.front() == k &&
                  std::equal(u.arrows.begin(), u.arrows.end(), w.arrows.begin() + 1);
          }
          if (hit) mat.set(r, c, 1);
        }
      }
      maps.push_back(std::move(mat));
    }
    return Representation(quiver, p, dims, maps);
  };
  return ProjectiveInjective{build(true), build(false)};
}

}  // namespace hallwb
