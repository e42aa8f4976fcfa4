#include "hallwb/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "hallwb/error.hpp"
#include "hallwb/extensions.hpp"

namespace hallwb {

namespace {

constexpr std::uint64_t kAutoExhaustiveTuples = 4096;

int total_of(const std::vector<int>& d) { return std::accumulate(d.begin(), d.end(), 0); }

int raw_entry_count(const Quiver& q, const std::vector<int>& d) {
  int n = 0;
  for (const auto& a : q.arrows()) n += d[a.source] * d[a.target];
  return n;
}

SubspaceTuple generated_submodule(const Representation& m, int vertex, const std::vector<int>& v) {
  SubspaceTuple u = zero_tuple(m);
  u[vertex] = Subspace::span(Matrix::from_rows(m.p(), {v}, m.dim(vertex)));
  bool grew = true;
  while (grew) {
    grew = false;
    for (int k = 0; k < m.quiver().arrow_count(); ++k) {
      const auto& a = m.quiver().arrow(k);
      Subspace next = sum(u[a.target], image(m.map(k), u[a.source]));
      if (next.dim() != u[a.target].dim()) {
        u[a.target] = std::move(next);
        grew = true;
      }
    }
  }
  return u;
}

// Support of d spans a strongly connected full subquiver.
bool strongly_connected_support(const Quiver& q, const std::vector<int>& d) {
  std::vector<int> support;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (d[v] > 0) support.push_back(v);
  }
  if (support.empty()) return false;
  auto reach = [&](bool forward) {
    std::set<int> seen{support.front()};
    std::vector<int> stack{support.front()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& a : q.arrows()) {
        int from = forward ? a.source : a.target;
        int to = forward ? a.target : a.source;
        if (from == v && d[to] > 0 && seen.insert(to).second) stack.push_back(to);
      }
    }
    return seen.size() == support.size();
  };
  return reach(true) && reach(false);
}

}  // namespace

std::vector<std::vector<int>> dimension_vectors(int vertices, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(vertices, 0);
  std::function<void(int, int)> fill = [&](int v, int left) {
    if (v == vertices - 1) {
      d[v] = left;
      out.push_back(d);
      return;
    }
    for (int x = left; x >= 0; --x) {
      d[v] = x;
      fill(v + 1, left - x);
    }
  };
  if (vertices == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  fill(0, total);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple(const Representation& m) {
  const int total = m.total_dim();
  if (total == 0) return false;
  const int p = m.p();
  for (int v = 0; v < m.quiver().vertex_count(); ++v) {
    const int d = m.dim(v);
    if (d == 0) continue;
    // nonzero vectors whose last nonzero coordinate is 1
    for (int lead = 0; lead < d; ++lead) {
      std::vector<int> digits(lead, 0);
      while (true) {
        std::vector<int> vec(d, 0);
        for (int i = 0; i < lead; ++i) vec[i] = digits[i];
        vec[lead] = 1;
        int got = 0;
        for (const auto& s : generated_submodule(m, v, vec)) got += s.dim();
        if (got < total) return false;
        int i = 0;
        while (i < lead && ++digits[i] == p) digits[i++] = 0;
        if (i == lead) break;
      }
    }
  }
  return true;
}

std::vector<Representation> cyclic_representations(QuiverPtr quiver, int p, const std::vector<int>& dims,
                                                   const Limits& limits) {
  const Quiver& q = *quiver;
  std::vector<Representation> out;
  std::vector<int> vert;
  std::vector<int> count(q.vertex_count(), 0);
  // image[b][k] = coefficients over the global basis for arrow k applied to basis element b
  std::vector<std::vector<std::vector<std::pair<int, int>>>> image;

  auto emit = [&]() {
    std::vector<int> local(vert.size());
    std::vector<int> seen(q.vertex_count(), 0);
    for (std::size_t b = 0; b < vert.size(); ++b) local[b] = seen[vert[b]]++;
    std::vector<Matrix> maps;
    for (const auto& a : q.arrows()) maps.emplace_back(dims[a.target], dims[a.source], p);
    for (std::size_t b = 0; b < vert.size(); ++b) {
      for (int k : q.arrows_from(vert[b])) {
        for (auto [idx, c] : image[b][k]) maps[k].set(local[idx], local[b], c);
      }
    }
    out.emplace_back(quiver, p, dims, maps);
    if (out.size() > limits.enum_cap) throw CapacityError("cyclic module enumeration exceeds cap");
  };

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t b, std::size_t kpos) {
    if (b == vert.size()) {
      if (count == dims) emit();
      return;
    }
    auto outs = q.arrows_from(vert[b]);
    if (kpos == outs.size()) {
      dfs(b + 1, 0);
      return;
    }
    const int k = outs[kpos];
    const int t = q.arrow(k).target;
    if (count[t] < dims[t]) {
      int idx = static_cast<int>(vert.size());
      vert.push_back(t);
      ++count[t];
      image.emplace_back(q.arrow_count());
      image[b][k] = {{idx, 1}};
      dfs(b, kpos + 1);
      image.pop_back();
      --count[t];
      vert.pop_back();
    }
    std::vector<int> existing;
    for (std::size_t j = 0; j < vert.size(); ++j) {
      if (vert[j] == t) existing.push_back(static_cast<int>(j));
    }
    std::vector<int> digits(existing.size(), 0);
    while (true) {
      image[b][k].clear();
      for (std::size_t i = 0; i < existing.size(); ++i) {
        if (digits[i] != 0) image[b][k].emplace_back(existing[i], digits[i]);
      }
      dfs(b, kpos + 1);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    image[b][k].clear();
  };

  for (int start = 0; start < q.vertex_count(); ++start) {
    if (dims[start] == 0) continue;
    vert = {start};
    std::fill(count.begin(), count.end(), 0);
    count[start] = 1;
    image.assign(1, std::vector<std::vector<std::pair<int, int>>>(q.arrow_count()));
    dfs(0, 0);
  }
  return out;
}

// ---------------------------------------------------------------------------

ClassCatalog::ClassCatalog(QuiverPtr quiver, int p, bool nilpotent_only, Limits limits, EnumStrategy strategy)
    : quiver_(std::move(quiver)),
      p_(p),
      nilpotent_only_(nilpotent_only),
      limits_(limits),
      strategy_(strategy),
      registry_(limits) {}

std::string ClassCatalog::insert(const Representation& m) {
  if (nilpotent_only_ && !is_nilpotent(m)) throw InputError("non-nilpotent module in a nilpotent context");
  return registry_.insert(m);
}

bool ClassCatalog::uses_exhaustive(const std::vector<int>& dims) const {
  switch (strategy_) {
    case EnumStrategy::Exhaustive:
      return true;
    case EnumStrategy::Extension:
      return false;
    case EnumStrategy::Auto:
      break;
  }
  return checked_pow(p_, raw_entry_count(*quiver_, dims)) <= kAutoExhaustiveTuples;
}

const std::vector<std::string>& ClassCatalog::classes(const std::vector<int>& dims) {
  if (static_cast<int>(dims.size()) != quiver_->vertex_count()) throw InputError("dimension vector length mismatch");
  if (auto it = classes_.find(dims); it != classes_.end()) return it->second;
  std::vector<std::string> keys = uses_exhaustive(dims) ? build_exhaustive(dims) : build_extension(dims);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return classes_.emplace(dims, std::move(keys)).first->second;
}

std::vector<std::string> ClassCatalog::build_exhaustive(const std::vector<int>& dims) {
  const Quiver& q = *quiver_;
  const int entries = raw_entry_count(q, dims);
  if (checked_pow(p_, entries) > limits_.enum_cap) {
    throw CapacityError("exhaustive enumeration of " + std::to_string(entries) + " matrix entries over F_" +
                        std::to_string(p_) + " exceeds cap");
  }
  std::vector<std::string> keys;
  std::vector<int> digits(entries, 0);
  while (true) {
    std::vector<Matrix> maps;
    int pos = 0;
    for (const auto& a : q.arrows()) {
      Matrix mat(dims[a.target], dims[a.source], p_);
      for (int r = 0; r < mat.rows(); ++r)
        for (int c = 0; c < mat.cols(); ++c) mat.set(r, c, digits[pos++]);
      maps.push_back(std::move(mat));
    }
    Representation m(quiver_, p_, dims, maps);
    if (!nilpotent_only_ || is_nilpotent(m)) keys.push_back(registry_.insert(m));
    int i = entries - 1;
    while (i >= 0 && ++digits[i] == p_) digits[i--] = 0;
    if (i < 0) break;
  }
  return keys;
}

const std::vector<std::string>& ClassCatalog::simples(const std::vector<int>& dims) {
  if (auto it = simples_.find(dims); it != simples_.end()) return it->second;
  std::vector<std::string> keys;
  const int total = total_of(dims);
  const bool only_vertex_simples = nilpotent_only_ || !quiver_->has_oriented_cycle();
  if (total == 1 && only_vertex_simples) {
    int v = static_cast<int>(std::find(dims.begin(), dims.end(), 1) - dims.begin());
    keys.push_back(registry_.insert(Representation::simple(quiver_, p_, v)));
  } else if (total >= 1 && !only_vertex_simples && strongly_connected_support(*quiver_, dims)) {
    for (const auto& m : cyclic_representations(quiver_, p_, dims, limits_)) {
      if (total == 1 || is_simple(m)) keys.push_back(registry_.insert(m));
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return simples_.emplace(dims, std::move(keys)).first->second;
}

std::vector<std::string> ClassCatalog::build_extension(const std::vector<int>& dims) {
  std::vector<std::string> keys = simples(dims);
  const int n = quiver_->vertex_count();
  // every sub-dimension-vector e with 0 < e < dims
  std::vector<int> e(n, 0);
  std::function<void(int)> walk = [&](int v) {
    if (v == n) {
      int te = total_of(e);
      if (te == 0 || e == dims) return;
      const auto& sims = simples(e);
      if (sims.empty()) return;
      std::vector<int> rest(n);
      for (int i = 0; i < n; ++i) rest[i] = dims[i] - e[i];
      const auto quotients = classes(rest);
      for (const auto& s_key : sims) {
        const Representation s = registry_.get(s_key);
        for (const auto& m_key : quotients) {
          const Representation m = registry_.get(m_key);
          for (const auto& x : extension_middle_terms(m, s, limits_)) keys.push_back(registry_.insert(x));
        }
      }
      return;
    }
    for (int x = 0; x <= dims[v]; ++x) {
      e[v] = x;
      walk(v + 1);
    }
    e[v] = 0;
  };
  walk(0);
  return keys;
}

std::vector<std::string> ClassCatalog::classes_of_total_dim(int total) {
  std::vector<std::string> out;
  for (const auto& d : dimension_vectors(quiver_->vertex_count(), total)) {
    const auto& keys = classes(d);
    out.insert(out.end(), keys.begin(), keys.end());
  }
  return out;
}

std::vector<std::string> ClassCatalog::classes_up_to(int max_total) {
  std::vector<std::string> out;
  for (int t = 1; t <= max_total; ++t) {
    auto keys = classes_of_total_dim(t);
    out.insert(out.end(), keys.begin(), keys.end());
  }
  return out;
}

std::vector<Representation> enumerate_reps(QuiverPtr quiver, const std::vector<int>& dims, int p,
                                           bool nilpotent_only, const Limits& limits, EnumStrategy strategy) {
  ClassCatalog catalog(std::move(quiver), p, nilpotent_only, limits, strategy);
  std::vector<Representation> out;
  if (total_of(dims) == 0) {
    out.push_back(Representation::zero(catalog.quiver_ptr(), p));
    return out;
  }
  for (const auto& key : catalog.classes(dims)) out.push_back(catalog.rep(key));
  return out;
}

std::vector<Representation> enumerate_indecomposables(QuiverPtr quiver, int max_total_dim, int p,
                                                      bool nilpotent_only, const Limits& limits) {
  ClassCatalog catalog(std::move(quiver), p, nilpotent_only, limits);
  std::vector<Representation> out;
  for (const auto& key : catalog.classes_up_to(max_total_dim)) {
    if (catalog.summand_count(key) == 1) out.push_back(catalog.rep(key));
  }
  return out;
}

}  // namespace hallwb
