#include "hallwb/decompose.hpp"

#include <algorithm>
#include <random>

#include "hallwb/error.hpp"

namespace hallwb {

std::uint64_t fingerprint(const Representation& m) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : m.bytes()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<std::pair<Representation, Representation>> fitting_split(const Representation& m,
                                                                        const Morphism& phi) {
  const int n = m.total_dim();
  if (n == 0) return std::nullopt;
  Morphism stable = morphism_power(phi, n);
  SubspaceTuple ker, img;
  int ker_dim = 0, img_dim = 0;
  for (std::size_t v = 0; v < stable.size(); ++v) {
    ker.push_back(kernel_basis(stable[v]));
    img.push_back(column_space(stable[v]));
    ker_dim += ker.back().dim();
    img_dim += img.back().dim();
  }
  if (ker_dim == 0 || img_dim == 0) return std::nullopt;
  return std::make_pair(restrict_to(m, ker), restrict_to(m, img));
}

namespace {

bool splits(const Morphism& f) { return !is_nilpotent(f) && !is_invertible(f); }

// Runs `visit` over every element of the span of `basis` (all p^dim
// coefficient vectors) until it returns true.
template <typename Visit>
bool scan_span(const HomSpace& basis, int p, Visit visit, std::uint64_t& scanned) {
  const int d = basis.dim();
  std::vector<int> coeff(d, 0);
  while (true) {
    ++scanned;
    if (visit(basis.combination(coeff))) return true;
    int i = 0;
    while (i < d && ++coeff[i] == p) coeff[i++] = 0;
    if (i == d) return false;
  }
}

// An endomorphism that is neither nilpotent nor invertible, if one exists.
std::optional<Morphism> find_splitter(const Representation& m, const HomSpace& end, const Limits& limits) {
  for (const auto& b : end.basis) {
    if (splits(b)) return b;
  }
  const int d = end.dim();
  const int p = m.p();
  std::mt19937_64 rng(limits.seed ^ fingerprint(m));
  std::uniform_int_distribution<int> digit(0, p - 1);
  std::vector<int> coeff(d);
  for (int t = 0; t < limits.random_tries; ++t) {
    for (auto& c : coeff) c = digit(rng);
    Morphism f = end.combination(coeff);
    if (splits(f)) return f;
  }
  if (checked_pow(p, d) > limits.end_scan_cap) {
    throw CapacityError("indecomposability scan of End (dimension " + std::to_string(d) + " over F_" +
                        std::to_string(p) + ") exceeds cap");
  }
  std::optional<Morphism> found;
  std::uint64_t scanned = 0;
  scan_span(end, p, [&](const Morphism& f) {
    if (splits(f)) {
      found = f;
      return true;
    }
    return false;
  }, scanned);
  return found;
}

void split_recursive(const Representation& m, const Limits& limits, std::vector<Representation>& out) {
  if (m.total_dim() == 0) return;
  if (m.total_dim() == 1) {
    out.push_back(m);
    return;
  }
  HomSpace end = hom_space(m, m);
  if (end.dim() == 1) {
    out.push_back(m);
    return;
  }
  auto phi = find_splitter(m, end, limits);
  if (!phi) {
    out.push_back(m);
    return;
  }
  auto parts = fitting_split(m, *phi);
  if (!parts) throw Error("fitting_split failed on a splitting endomorphism");
  split_recursive(parts->first, limits, out);
  split_recursive(parts->second, limits, out);
}

}  // namespace

DecompositionReport decompose(const Representation& m, const Limits& limits) {
  std::vector<Representation> pieces;
  split_recursive(m, limits, pieces);
  std::sort(pieces.begin(), pieces.end(), [](const Representation& a, const Representation& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return a.bytes() < b.bytes();
  });
  DecompositionReport report;
  for (const auto& piece : pieces) {
    bool matched = false;
    for (auto& s : report.summands) {
      if (indecomposables_isomorphic(s.module, piece)) {
        ++s.multiplicity;
        matched = true;
        break;
      }
    }
    if (!matched) report.summands.push_back(Summand{piece, 1});
  }
  report.s = static_cast<int>(pieces.size());
  return report;
}

bool is_indecomposable(const Representation& m, const Limits& limits) {
  if (m.total_dim() == 0) return false;
  if (m.total_dim() == 1) return true;
  HomSpace end = hom_space(m, m);
  if (end.dim() == 1) return true;
  return !find_splitter(m, end, limits).has_value();
}

LocalityReport check_local_endomorphism_ring(const Representation& m, const Limits& limits) {
  LocalityReport report;
  HomSpace end = hom_space(m, m);
  report.end_dim = end.dim();
  if (m.total_dim() == 0) return report;
  if (checked_pow(m.p(), end.dim()) > limits.end_scan_cap) {
    throw CapacityError("End(M) of dimension " + std::to_string(end.dim()) + " too large to scan");
  }
  bool bad = scan_span(end, m.p(), [](const Morphism& f) { return splits(f); }, report.scanned);
  report.local = !bad;
  return report;
}

bool indecomposables_isomorphic(const Representation& a, const Representation& b) {
  check_compatible(a, b);
  if (a.dims() != b.dims()) return false;
  HomSpace hom = hom_space(a, b);
  for (const auto& f : hom.basis) {
    if (is_invertible(f)) return true;
  }
  return false;
}

bool is_isomorphic(const Representation& m, const Representation& n, const Limits& limits) {
  check_compatible(m, n);
  if (m.dims() != n.dims()) return false;
  if (m.total_dim() == 0) return true;
  if (m == n) return true;
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    if (rank(m.map(k)) != rank(n.map(k))) return false;
  }
  const int end_m = hom_dim(m, m);
  if (end_m != hom_dim(n, n)) return false;
  HomSpace hom = hom_space(m, n);
  if (hom.dim() != end_m || hom_dim(n, m) != end_m) return false;
  for (const auto& f : hom.basis) {
    if (is_invertible(f)) return true;
  }
  std::mt19937_64 rng(limits.seed ^ fingerprint(m) ^ (fingerprint(n) << 1));
  std::uniform_int_distribution<int> digit(0, m.p() - 1);
  std::vector<int> coeff(hom.dim());
  for (int t = 0; t < limits.random_tries; ++t) {
    for (auto& c : coeff) c = digit(rng);
    if (is_invertible(hom.combination(coeff))) return true;
  }
  auto dm = decompose(m, limits);
  auto dn = decompose(n, limits);
  if (dm.s != dn.s || dm.summands.size() != dn.summands.size()) return false;
  std::vector<bool> used(dn.summands.size(), false);
  for (const auto& a : dm.summands) {
    bool found = false;
    for (std::size_t j = 0; j < dn.summands.size(); ++j) {
      if (used[j] || dn.summands[j].multiplicity != a.multiplicity) continue;
      if (indecomposables_isomorphic(a.module, dn.summands[j].module)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace hallwb
