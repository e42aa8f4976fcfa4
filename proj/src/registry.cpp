#include "hallwb/registry.hpp"

#include <sstream>

#include "hallwb/error.hpp"

namespace hallwb {

namespace {

void path_word_ranks(const Representation& m, std::ostringstream& out) {
  const auto& q = m.quiver();
  struct Word {
    int end;
    Matrix value;
  };
  std::vector<Word> frontier;
  for (int k = 0; k < q.arrow_count(); ++k) frontier.push_back(Word{q.arrow(k).target, m.map(k)});
  for (int len = 1; len <= 3 && !frontier.empty(); ++len) {
    out << "w" << len << ":";
    std::vector<Word> next;
    for (const auto& w : frontier) {
      out << rank(w.value) << ",";
      if (len < 3) {
        for (int k : q.arrows_from(w.end)) next.push_back(Word{q.arrow(k).target, m.map(k) * w.value});
      }
    }
    frontier = std::move(next);
  }
}

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string hash16(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = "0123456789abcdef"[h & 15];
  return out;
}

}  // namespace

std::string invariant_signature(const Representation& m) {
  const auto& q = m.quiver();
  const int p = m.p();
  std::ostringstream out;
  out << "d" << m.dims_string() << ";";
  path_word_ranks(m, out);
  for (int a = 0; a < q.arrow_count(); ++a) {
    for (int b = a + 1; b < q.arrow_count(); ++b) {
      if (q.arrow(a).source != q.arrow(b).source || q.arrow(a).target != q.arrow(b).target) continue;
      out << "par" << a << "." << b << ":";
      for (int lambda = 1; lambda < p; ++lambda) out << rank(m.map(a) + m.map(b).scaled(lambda)) << ",";
    }
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (q.arrow(a).source != q.arrow(a).target) continue;
    const auto& mat = m.map(a);
    out << "loop" << a << ":";
    for (int lambda = 0; lambda < p; ++lambda) {
      Matrix shifted = mat - Matrix::identity(mat.rows(), p).scaled(lambda);
      out << rank(shifted) << "/" << rank(shifted * shifted) << ",";
    }
  }
  // Radical and socle by the arrow formulas; basis-independent for any module.
  SubspaceTuple rad = zero_tuple(m);
  SubspaceTuple soc = full_tuple(m);
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    rad[a.target] = sum(rad[a.target], column_space(m.map(k)));
    soc[a.source] = intersect(soc[a.source], kernel_basis(m.map(k)));
  }
  out << "rad";
  for (const auto& s : rad) out << s.dim() << ",";
  out << "soc";
  for (const auto& s : soc) out << s.dim() << ",";
  out << "end" << hom_dim(m, m);
  return out.str();
}

std::string canonical_key(const Representation& m) {
  std::string dims;
  for (std::size_t i = 0; i < m.dims().size(); ++i) dims += (i ? "." : "") + std::to_string(m.dims()[i]);
  return dims + ":" + hash16(invariant_signature(m)) + ":" + hex(m.bytes());
}

std::optional<std::string> IsoRegistry::lookup(const Representation& m, const std::string& signature) const {
  if (auto it = exact_.find(m.bytes()); it != exact_.end()) return it->second;
  auto bucket = buckets_.find(signature);
  if (bucket == buckets_.end()) return std::nullopt;
  for (const auto& key : bucket->second) {
    if (is_isomorphic(classes_.at(key), m, limits_)) return key;
  }
  return std::nullopt;
}

std::optional<std::string> IsoRegistry::find(const Representation& m) const {
  return lookup(m, invariant_signature(m));
}

std::string IsoRegistry::insert(const Representation& m) {
  if (!classes_.empty()) check_compatible(classes_.begin()->second, m);
  if (auto it = exact_.find(m.bytes()); it != exact_.end()) return it->second;
  std::string signature = invariant_signature(m);
  if (auto key = lookup(m, signature)) {
    exact_.emplace(m.bytes(), *key);
    return *key;
  }
  std::string dims;
  for (std::size_t i = 0; i < m.dims().size(); ++i) dims += (i ? "." : "") + std::to_string(m.dims()[i]);
  std::string key = dims + ":" + hash16(signature) + ":" + hex(m.bytes());
  classes_.emplace(key, m);
  buckets_[signature].push_back(key);
  exact_.emplace(m.bytes(), key);
  log_.push_back(key);
  return key;
}

const Representation& IsoRegistry::get(const std::string& key) const {
  auto it = classes_.find(key);
  if (it == classes_.end()) throw InputError("unknown isomorphism-class key '" + key + "'");
  return it->second;
}

const DecompositionReport& IsoRegistry::decomposition(const std::string& key) {
  auto it = decompositions_.find(key);
  if (it != decompositions_.end()) return it->second;
  return decompositions_.emplace(key, decompose(get(key), limits_)).first->second;
}

}  // namespace hallwb
