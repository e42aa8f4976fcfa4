#include "hallwb/hall.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hallwb/decompose.hpp"
#include "hallwb/error.hpp"
#include "hallwb/extensions.hpp"

namespace hallwb {

namespace {

std::vector<SubspaceTuple> closed_tuples(const Representation& x, const std::vector<std::vector<Subspace>>& choices,
                                         const Limits& limits) {
  const Quiver& q = x.quiver();
  std::uint64_t product = 1;
  for (const auto& c : choices) {
    product = product > limits.enum_cap ? product : product * c.size();
  }
  if (product > limits.enum_cap) {
    throw CapacityError("subrepresentation search over " + std::to_string(product) + " subspace tuples exceeds cap");
  }
  const int n = q.vertex_count();
  // arrows checked once both endpoints are assigned
  std::vector<std::vector<int>> ready(n);
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    ready[std::max(a.source, a.target)].push_back(k);
  }
  std::vector<SubspaceTuple> out;
  SubspaceTuple current(n);
  std::function<void(int)> walk = [&](int v) {
    if (v == n) {
      out.push_back(current);
      return;
    }
    for (const auto& u : choices[v]) {
      current[v] = u;
      bool ok = true;
      for (int k : ready[v]) {
        const auto& a = q.arrow(k);
        if (!current[a.target].contains(image(x.map(k), current[a.source]))) {
          ok = false;
          break;
        }
      }
      if (ok) walk(v + 1);
    }
  };
  walk(0);
  return out;
}

}  // namespace

std::vector<SubspaceTuple> subreps(const Representation& x, const Limits& limits) {
  std::vector<std::vector<Subspace>> choices;
  for (int v = 0; v < x.quiver().vertex_count(); ++v) {
    std::vector<Subspace> all;
    for (int k = 0; k <= x.dim(v); ++k) {
      auto some = enumerate_subspaces(x.dim(v), k, x.p(), limits);
      all.insert(all.end(), some.begin(), some.end());
    }
    choices.push_back(std::move(all));
  }
  return closed_tuples(x, choices, limits);
}

std::vector<SubspaceTuple> subreps(const Representation& x, const std::vector<int>& dims, const Limits& limits) {
  if (dims.size() != x.dims().size()) throw MismatchError("dimension vector length mismatch");
  std::vector<std::vector<Subspace>> choices;
  for (int v = 0; v < x.quiver().vertex_count(); ++v) {
    if (dims[v] < 0 || dims[v] > x.dim(v)) return {};
    choices.push_back(enumerate_subspaces(x.dim(v), dims[v], x.p(), limits));
  }
  return closed_tuples(x, choices, limits);
}

std::uint64_t hall_number(const Representation& x, const Representation& m, const Representation& n,
                          const Limits& limits) {
  check_compatible(x, m);
  check_compatible(x, n);
  for (std::size_t i = 0; i < x.dims().size(); ++i) {
    if (x.dims()[i] != m.dims()[i] + n.dims()[i]) return 0;
  }
  std::uint64_t count = 0;
  for (const auto& u : subreps(x, n.dims(), limits)) {
    if (is_isomorphic(restrict_to(x, u), n, limits) && is_isomorphic(quotient_by(x, u), m, limits)) ++count;
  }
  return count;
}

std::vector<std::string> middle_terms(const Representation& m, const Representation& n, IsoRegistry& registry) {
  check_compatible(m, n);
  std::vector<std::string> keys;
  for (const auto& x : extension_middle_terms(m, n, registry.limits())) keys.push_back(registry.insert(x));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

// ---------------------------------------------------------------------------

LaurentPoly HallElement::coefficient(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

std::vector<std::string> HallElement::support() const {
  std::vector<std::string> keys;
  for (const auto& [k, c] : terms_) keys.push_back(k);
  return keys;
}

void HallElement::add_term(const std::string& key, const Representation& module, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto& c = terms_[key];
  c += coeff;
  if (c.is_zero()) {
    terms_.erase(key);
    modules_.erase(key);
  } else {
    modules_.try_emplace(key, module);
  }
}

HallElement& HallElement::operator+=(const HallElement& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, other.modules_.at(key), c);
  return *this;
}

HallElement HallElement::scaled(const LaurentPoly& factor) const {
  HallElement out(context_);
  for (const auto& [key, c] : terms_) out.add_term(key, modules_.at(key), c * factor);
  return out;
}

Json HallElement::to_json() const {
  Json terms = Json::array();
  for (const auto& [key, c] : terms_) {
    Json coeff = Json::object();
    for (const auto& [e, value] : c.terms()) coeff[std::to_string(e)] = value;
    terms.push_back({{"key", key}, {"module", hallwb::to_json(modules_.at(key))}, {"coeff", coeff}});
  }
  return {{"context",
           {{"quiver", context_.quiver ? context_.quiver->name() : ""},
            {"p", context_.p},
            {"nilpotent", context_.nilpotent}}},
          {"terms", terms}};
}

std::string HallElement::to_string() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [key, c] : terms_) {
    const auto& m = modules_.at(key);
    os << c.to_string() << " [dim " << m.dims_string() << "]";
    for (int k = 0; k < m.quiver().arrow_count(); ++k) {
      os << (k == 0 ? "  " : " ") << m.quiver().arrow(k).label << "=" << m.map(k).to_string();
    }
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

HallElement basis_element(const Representation& m, IsoRegistry& registry, bool nilpotent) {
  HallElement out({m.quiver_ptr(), m.p(), nilpotent});
  const std::string key = registry.insert(m);
  out.add_term(key, registry.get(key), 1);
  return out;
}

HallElement hall_product(const Representation& m, const Representation& n, IsoRegistry& registry, bool nilpotent) {
  HallElement out({m.quiver_ptr(), m.p(), nilpotent});
  for (const auto& key : middle_terms(m, n, registry)) {
    const auto& x = registry.get(key);
    const auto f = hall_number(x, m, n, registry.limits());
    if (f == 0) throw Error("middle term with zero Hall number: " + key);
    out.add_term(key, x, static_cast<long long>(f));
  }
  return out;
}

HallElement twisted_product(const Representation& m, const Representation& n, IsoRegistry& registry,
                            bool nilpotent) {
  const int e = euler_form(m, n);
  return hall_product(m, n, registry, nilpotent).scaled(LaurentPoly::monomial(1, e));
}

HallElement multiply(const HallElement& a, const HallElement& b, IsoRegistry& registry, bool twisted) {
  HallElement out(a.context());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const auto& m = a.module(ka);
      const auto& n = b.module(kb);
      auto prod = twisted ? twisted_product(m, n, registry, a.context().nilpotent)
                          : hall_product(m, n, registry, a.context().nilpotent);
      out += prod.scaled(ca * cb);
    }
  }
  return out;
}

int euler_form(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  // The standard resolution 0 -> ⊕_a P_{t(a)} ⊗ M_{s(a)} -> ⊕_i P_i ⊗ M_i -> M -> 0
  // is exact for every finite-dimensional representation, so the cocycle
  // formula holds on cyclic quivers too, nilpotent or not.
  return hom_dim(m, n) - ext1_dim(m, n);
}

int euler_chi(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e) {
  int chi = 0;
  for (int i = 0; i < q.vertex_count(); ++i) chi += d[i] * e[i];
  for (const auto& a : q.arrows()) chi -= d[a.source] * e[a.target];
  return chi;
}

}  // namespace hallwb
