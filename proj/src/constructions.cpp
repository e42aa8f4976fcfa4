#include <sstream>

#include "hallwb/audit.hpp"
#include "hallwb/decompose.hpp"
#include "hallwb/error.hpp"
#include "hallwb/loewy.hpp"

namespace hallwb {

namespace {

constexpr int kP = 2;

QuiverPtr make_quiver(const std::string& name, const std::vector<std::string>& vertices,
                      const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  return std::make_shared<const Quiver>(name, vertices, arrows);
}

void require(bool condition, const std::string& what) {
  if (!condition) throw Error("construction check failed: " + what);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string dims_of(const Representation& m) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < m.dims().size(); ++i) os << (i ? "," : "") << m.dims()[i];
  os << ")";
  return os.str();
}

// Builds the certificate for X ∈ supp([m] ⋄ [n]) and checks every claim.
Certificate certify(const Representation& m, const Representation& n, const Representation& x, int r,
                    AuditMode mode, const Limits& limits) {
  IsoRegistry registry(limits);
  const HallElement product = hall_product(m, n, registry);
  const auto key = registry.find(x);
  require(key.has_value() && !product.coefficient(*key).is_zero(), "X lies in the support of the product");
  Certificate c;
  c.r = r;
  c.mode = mode;
  c.m = m;
  c.n = n;
  c.x = x;
  c.m_key = registry.insert(m);
  c.n_key = registry.insert(n);
  c.x_key = *key;
  c.s_m = decompose(m, limits).s;
  c.s_n = decompose(n, limits).s;
  c.s_x = decompose(x, limits).s;
  c.hall_number = static_cast<std::uint64_t>(product.coefficient(*key).coefficient(0));
  require(c.hall_number >= 1, "positive Hall number");
  require(c.s_x <= r, "X has at most r summands");
  if (mode == AuditMode::Subring || mode == AuditMode::RightIdeal) require(c.s_m >= r + 1, "M lies in D_r");
  if (mode == AuditMode::Subring || mode == AuditMode::LeftIdeal) require(c.s_n >= r + 1, "N lies in D_r");
  return c;
}

SubspaceTuple spanned(const Representation& m, const std::vector<std::vector<std::vector<int>>>& vectors) {
  SubspaceTuple u = zero_tuple(m);
  for (std::size_t v = 0; v < vectors.size(); ++v) {
    if (!vectors[v].empty()) u[v] = Subspace::span(Matrix::from_rows(kP, vectors[v], m.dim(static_cast<int>(v))));
  }
  return u;
}

ConstructionResult construction_2_1(const Limits& limits) {
  // 1 <- 2 -> 3: the sincere indecomposable has socle S_1 ⊕ S_3.
  auto q = make_quiver("Lambda32", {"1", "2", "3"}, {{"a", "2", "1"}, {"b", "2", "3"}});
  const int r = 2;
  Representation m(q, kP, {1, 1, 1}, {Matrix::from_rows(kP, {{1}}), Matrix::from_rows(kP, {{1}})});
  Representation n = Representation::simple(q, kP, 1);
  const auto loewy = loewy_data(m);
  const Representation& soc = loewy.socle.module;
  const Representation top_part = quotient_by(m, loewy.socle.spaces);
  require(is_indecomposable(m, limits), "M indecomposable");
  require(decompose(soc, limits).s == 2, "soc M decomposable");
  Representation sub = direct_sum(soc, direct_power(n, r - 1));
  Representation x = direct_sum(m, direct_power(n, r - 1));
  ConstructionResult out{"2.1", certify(top_part, sub, x, r, AuditMode::LeftIdeal, limits), {}};
  out.facts = {{"soc(M) dims", dims_of(soc)},
               {"s(soc(M) ⊕ N^(r-1))", std::to_string(out.certificate.s_n)},
               {"s(M ⊕ N^(r-1))", std::to_string(out.certificate.s_x)}};
  return out;
}

ConstructionResult construction_2_3(const Limits& limits) {
  auto q = make_quiver("zigzag", {"1", "2", "3", "4"}, {{"a", "2", "1"}, {"b", "2", "3"}, {"c", "4", "3"}});
  const Matrix one = Matrix::from_rows(kP, {{1}});
  Representation m(q, kP, {1, 1, 1, 1}, {one, one, one});
  require(is_indecomposable(m, limits), "M indecomposable");
  SubspaceTuple u = spanned(m, {{{1}}, {}, {{1}}, {}});
  require(is_closed(m, u), "(1,0,1,0) is a submodule");
  Representation sub = restrict_to(m, u);
  Representation quo = quotient_by(m, u);
  require(sub.dims() == std::vector<int>{1, 0, 1, 0}, "submodule dims");
  require(quo.dims() == std::vector<int>{0, 1, 0, 1}, "quotient dims");
  ConstructionResult out{"2.3", certify(quo, sub, m, 1, AuditMode::Subring, limits), {}};
  out.facts = {{"submodule dims", dims_of(sub)}, {"quotient dims", dims_of(quo)}, {"M dims", dims_of(m)}};
  return out;
}

ConstructionResult construction_2_4(const Limits& limits) {
  auto q = make_quiver("d4_in3", {"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "3", "2"}, {"c", "4", "2"}});
  Representation m(q, kP, {1, 2, 1, 1},
                   {Matrix::from_rows(kP, {{1}, {0}}), Matrix::from_rows(kP, {{0}, {1}}),
                    Matrix::from_rows(kP, {{1}, {1}})});
  require(is_indecomposable(m, limits), "M indecomposable");
  const auto loewy = loewy_data(m);
  const Representation& soc = loewy.socle.module;
  Representation quo = quotient_by(m, loewy.socle.spaces);
  require(soc.dims() == std::vector<int>{0, 2, 0, 0}, "soc M = S_2^2");
  require(quo.dims() == std::vector<int>{1, 0, 1, 1}, "M / soc M = S_1 ⊕ S_3 ⊕ S_4");
  ConstructionResult out{"2.4", certify(quo, soc, m, 1, AuditMode::Subring, limits), {}};
  out.facts = {{"M dims", dims_of(m)}, {"soc(M) dims", dims_of(soc)}, {"M/soc(M) dims", dims_of(quo)}};
  return out;
}

ConstructionResult construction_2_5(const Limits& limits) {
  auto q = make_quiver("kronecker", {"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
  Representation m(q, kP, {3, 2},
                   {Matrix::from_rows(kP, {{1, 0, 0}, {0, 1, 0}}), Matrix::from_rows(kP, {{0, 1, 0}, {0, 0, 1}})});
  require(is_indecomposable(m, limits), "M indecomposable");
  const auto loewy = loewy_data(m);
  const Representation& soc = loewy.socle.module;
  const Representation& top = loewy.top;
  require(soc.dims() == std::vector<int>{0, 2} && decompose(soc, limits).s == 2, "soc M = S_2^2");
  require(top.dims() == std::vector<int>{3, 0} && decompose(top, limits).s == 3, "top M = S_1^3");
  Representation quo = quotient_by(m, loewy.socle.spaces);
  ConstructionResult out{"2.5", certify(quo, soc, m, 1, AuditMode::Subring, limits), {}};
  out.facts = {{"M dims", dims_of(m)},
               {"soc(M)", "S_2^" + std::to_string(decompose(soc, limits).s)},
               {"top(M)", "S_1^" + std::to_string(decompose(top, limits).s)}};
  return out;
}

ConstructionResult construction_2_6(const Limits& limits) {
  auto q = make_quiver("q6", {"1", "2"}, {{"x", "1", "1"}, {"a", "2", "1"}});
  Matrix f = Matrix::from_rows(kP, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
  Matrix g1 = Matrix::from_rows(kP, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});
  Matrix g2 = Matrix::from_rows(kP, {{0}, {1}, {0}, {1}});
  Representation left(q, kP, {1, 1}, {Matrix(1, 1, kP), Matrix(1, 1, kP)});
  Representation right(q, kP, {3, 0}, {f, Matrix(3, 0, kP)});
  Representation m(q, kP, {4, 1}, {g1, g2});
  SubspaceTuple u = spanned(m, {{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, {}});
  require(is_closed(m, u), "span(e2, e3, e4) is a submodule");
  require(is_isomorphic(restrict_to(m, u), right, limits), "submodule ≅ (k^3, 0; f)");
  require(is_isomorphic(quotient_by(m, u), left, limits), "quotient ≅ (k, k; 0, 0)");
  const auto local = check_local_endomorphism_ring(m, limits);
  require(local.end_dim == 4, "dim End(M) = 4");
  require(local.local, "End(M) local");
  ConstructionResult out{"2.6", certify(left, right, m, 1, AuditMode::Subring, limits), {}};
  out.facts = {{"End dim", std::to_string(local.end_dim)},
               {"local", yes_no(local.local)},
               {"endomorphisms scanned", std::to_string(local.scanned)}};
  return out;
}

ConstructionResult construction_2_7(const Limits& limits) {
  auto q = make_quiver("q8", {"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
  Matrix g1 = Matrix::from_rows(kP, {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  Matrix g2 = Matrix::from_rows(kP, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}});
  Representation factor(q, kP, {2}, {Matrix(2, 2, kP), Matrix(2, 2, kP)});
  Representation m(q, kP, {4}, {g1, g2});
  SubspaceTuple u = spanned(m, {{{0, 0, 1, 0}, {0, 0, 0, 1}}});
  require(is_closed(m, u), "span(e3, e4) is a submodule");
  require(is_isomorphic(restrict_to(m, u), factor, limits), "submodule ≅ (k^2; 0, 0)");
  require(is_isomorphic(quotient_by(m, u), factor, limits), "quotient ≅ (k^2; 0, 0)");
  const auto local = check_local_endomorphism_ring(m, limits);
  require(local.end_dim == 6, "dim End(M) = 6");
  require(local.local, "End(M) local");
  ConstructionResult out{"2.7", certify(factor, factor, m, 1, AuditMode::Subring, limits), {}};
  out.facts = {{"End dim", std::to_string(local.end_dim)},
               {"local", yes_no(local.local)},
               {"endomorphisms scanned", std::to_string(local.scanned)}};
  return out;
}

}  // namespace

const std::vector<std::string>& construction_ids() {
  static const std::vector<std::string> ids{"2.1", "2.3", "2.4", "2.5", "2.6", "2.7"};
  return ids;
}

ConstructionResult certify_construction(const std::string& id, const Limits& limits) {
  if (id == "2.1") return construction_2_1(limits);
  if (id == "2.3") return construction_2_3(limits);
  if (id == "2.4") return construction_2_4(limits);
  if (id == "2.5") return construction_2_5(limits);
  if (id == "2.6") return construction_2_6(limits);
  if (id == "2.7") return construction_2_7(limits);
  throw InputError("unknown construction '" + id + "' (expected 2.1, 2.3, 2.4, 2.5, 2.6 or 2.7)");
}

Json ConstructionResult::to_json() const {
  Json facts_json = Json::object();
  for (const auto& [k, v] : facts) facts_json[k] = v;
  return {{"id", id}, {"certificate", certificate.to_json()}, {"facts", facts_json}};
}

std::string ConstructionResult::to_text() const {
  std::ostringstream os;
  os << "construction " << id << "\n" << certificate.to_text();
  for (const auto& [k, v] : facts) os << k << " = " << v << "\n";
  if (id == "2.6" || id == "2.7") {
    std::string end_dim, local;
    for (const auto& [k, v] : facts) {
      if (k == "End dim") end_dim = v;
      if (k == "local") local = v;
    }
    os << "End dim = " << end_dim << ", local: " << local << "\n";
  }
  return os.str();
}

}  // namespace hallwb
