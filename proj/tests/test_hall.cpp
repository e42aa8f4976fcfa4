#include <doctest.h>

#include <algorithm>
#include <random>

#include "hallwb/decompose.hpp"
#include "hallwb/enumerate.hpp"
#include "hallwb/error.hpp"
#include "hallwb/extensions.hpp"
#include "hallwb/hall.hpp"
#include "support.hpp"

using namespace hallwb;

namespace {

Matrix m1(int v) { return Matrix::from_rows(2, {{v}}); }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// |Aut m| by brute force over End(m).
std::uint64_t aut_size(const Representation& m) {
  auto end = hom_space(m, m);
  const int p = m.p();
  std::uint64_t count = 0;
  std::vector<int> c(end.dim(), 0);
  for (std::uint64_t idx = 0; idx < ipow(p, end.dim()); ++idx) {
    std::uint64_t rest = idx;
    Morphism f = zero_morphism(m, m);
    for (int i = 0; i < end.dim(); ++i) {
      f = add(f, scale(end.basis[i], static_cast<int>(rest % p)));
      rest /= p;
    }
    if (is_invertible(f)) ++count;
  }
  return count;
}

std::vector<int> plus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> s(a);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

std::vector<int> random_dims(std::mt19937_64& rng, int n, int most) {
  std::vector<int> d(n);
  for (auto& x : d) x = static_cast<int>(rng() % (most + 1));
  return d;
}

}  // namespace

TEST_CASE("subrepresentation examples") {
  auto pt = testing::fixture("point");
  CHECK(subreps(Representation::simple(pt, 2, 0)).size() == 2);
  CHECK(subreps(Representation(pt, 2, {2}, {})).size() == 5);
  CHECK(subreps(Representation(pt, 3, {2}, {})).size() == 6);
  CHECK(subreps(Representation(pt, 2, {2}, {}), std::vector<int>{1}).size() == 3);
  auto l2 = testing::fixture("L2");
  Representation p1(l2, 2, {1, 1}, {m1(1)});
  auto subs = subreps(p1);
  CHECK(subs.size() == 3);
  for (const auto& u : subs) CHECK_FALSE((u[0].dim() == 1 && u[1].dim() == 0));
  Limits tiny;
  tiny.enum_cap = 10;
  CHECK_THROWS_AS(subreps(Representation(pt, 2, {4}, {}), tiny), CapacityError);
}

TEST_CASE("hall number examples") {
  auto pt = testing::fixture("point");
  auto s = Representation::simple(pt, 2, 0);
  CHECK(hall_number(Representation(pt, 2, {2}, {}), s, s) == 3);
  CHECK(hall_number(Representation(pt, 3, {2}, {}), Representation::simple(pt, 3, 0),
                    Representation::simple(pt, 3, 0)) == 4);
  CHECK(hall_number(Representation(pt, 2, {3}, {}), s, s) == 0);
  auto loop = testing::fixture("loop");
  Representation j1(loop, 2, {1}, {m1(0)});
  Representation j2(loop, 2, {2}, {Matrix::from_rows(2, {{0, 0}, {1, 0}})});
  CHECK(hall_number(direct_sum(j1, j1), j1, j1) == 3);
  CHECK(hall_number(j2, j1, j1) == 1);
  // P(1) on L_2: the only sub is S_2 with quotient S_1
  auto l2 = testing::fixture("L2");
  Representation p1(l2, 2, {1, 1}, {m1(1)});
  auto s1 = Representation::simple(l2, 2, 0), s2 = Representation::simple(l2, 2, 1);
  CHECK(hall_number(p1, s1, s2) == 1);
  CHECK(hall_number(p1, s2, s1) == 0);
}

TEST_CASE("middle term examples") {
  auto pt = testing::fixture("point");
  IsoRegistry reg;
  auto s = Representation::simple(pt, 2, 0);
  auto mids = middle_terms(s, s, reg);
  REQUIRE(mids.size() == 1);
  CHECK(reg.get(mids[0]).dims() == std::vector<int>{2});

  auto loop = testing::fixture("loop");
  IsoRegistry lreg;
  Representation j1(loop, 2, {1}, {m1(0)});
  auto lm = middle_terms(j1, j1, lreg);
  CHECK(lm.size() == 2);
  Representation j2(loop, 2, {2}, {Matrix::from_rows(2, {{0, 0}, {1, 0}})});
  CHECK(std::find(lm.begin(), lm.end(), lreg.insert(j2)) != lm.end());
  CHECK(std::find(lm.begin(), lm.end(), lreg.insert(direct_sum(j1, j1))) != lm.end());
}

TEST_CASE("hall product examples") {
  auto pt = testing::fixture("point");
  IsoRegistry reg;
  auto s = Representation::simple(pt, 2, 0);
  auto prod = hall_product(s, s, reg);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms().begin()->second == LaurentPoly(3));
  CHECK(prod.to_string().find("3 [dim 2]") != std::string::npos);

  auto loop = testing::fixture("loop");
  IsoRegistry lreg;
  Representation j1(loop, 2, {1}, {m1(0)});
  Representation j2(loop, 2, {2}, {Matrix::from_rows(2, {{0, 0}, {1, 0}})});
  auto lp = hall_product(j1, j1, lreg, true);
  CHECK(lp.coefficient(lreg.insert(j2)) == LaurentPoly(1));
  CHECK(lp.coefficient(lreg.insert(direct_sum(j1, j1))) == LaurentPoly(3));
  CHECK(lp.terms().size() == 2);
}

TEST_CASE("the Q6 product contains the local module") {
  auto q6 = testing::fixture("q6");
  IsoRegistry reg;
  Representation m(q6, 2, {1, 1}, {m1(0), m1(0)});
  Matrix f = Matrix::from_rows(2, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
  Representation n(q6, 2, {3, 0}, {f, Matrix(3, 0, 2)});
  CHECK(decompose(m).s == 2);
  CHECK(decompose(n).s == 2);
  Matrix g1 = Matrix::from_rows(2, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});
  Matrix g2 = Matrix::from_rows(2, {{0}, {1}, {0}, {1}});
  Representation x(q6, 2, {4, 1}, {g1, g2});
  auto prod = hall_product(m, n, reg);
  const auto key = reg.insert(x);
  CHECK(prod.coefficient(key).coefficient(0) >= 1);
}

TEST_CASE("euler form examples") {
  auto kr = testing::fixture("kronecker");
  CHECK(euler_form(Representation::simple(kr, 2, 0), Representation::simple(kr, 2, 1)) == -2);
  CHECK(ext1_dim(Representation::simple(kr, 2, 0), Representation::simple(kr, 2, 1)) == 2);
  auto pt = testing::fixture("point");
  CHECK(euler_form(Representation::simple(pt, 2, 0), Representation::simple(pt, 2, 0)) == 1);
  auto loop = testing::fixture("loop");
  Representation j1(loop, 2, {1}, {m1(0)});
  CHECK(euler_form(j1, j1) == 0);
  CHECK(ext1_dim(j1, j1) == 1);
}

TEST_CASE("twisted product examples") {
  auto pt = testing::fixture("point");
  IsoRegistry reg;
  auto s = Representation::simple(pt, 2, 0);
  auto tw = twisted_product(s, s, reg);
  REQUIRE(tw.terms().size() == 1);
  CHECK(tw.terms().begin()->second == LaurentPoly::monomial(3, 1));
  CHECK(tw.to_string().find("3v^1 [dim 2]") != std::string::npos);
  auto l2 = testing::fixture("L2");
  IsoRegistry lreg;
  auto s1 = Representation::simple(l2, 2, 0), s2 = Representation::simple(l2, 2, 1);
  CHECK(euler_form(s2, s1) == 0);
  CHECK(twisted_product(s2, s1, lreg) == hall_product(s2, s1, lreg));
  CHECK(euler_form(s1, s2) == -1);
}

TEST_CASE("hall element JSON") {
  auto pt = testing::fixture("point");
  IsoRegistry reg;
  auto s = Representation::simple(pt, 2, 0);
  auto j = twisted_product(s, s, reg).to_json();
  CHECK(j["context"]["quiver"] == "point");
  CHECK(j["context"]["p"] == 2);
  CHECK(j["context"]["nilpotent"] == false);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["coeff"]["1"] == 3);
  CHECK(j["terms"][0]["module"]["dims"]["1"] == 2);
  HallContext ctx{pt, 2, false};
  HallElement e(ctx);
  e.add_term(reg.insert(s), s, LaurentPoly(2));
  e.add_term(reg.insert(s), s, LaurentPoly(-2));
  CHECK(e.is_zero());
}

TEST_CASE("mixing contexts is rejected") {
  IsoRegistry reg;
  auto s = Representation::simple(testing::fixture("point"), 2, 0);
  auto t = Representation::simple(testing::fixture("L2"), 2, 0);
  CHECK_THROWS_AS(hall_product(s, t, reg), MismatchError);
}

TEST_CASE("products: dimension conservation, split term, twist, exhaustive oracle") {
  struct Case {
    const char* name;
    int p;
    bool nil;
    int bound;
  };
  for (auto c : {Case{"L2", 2, false, 4}, Case{"L3", 2, false, 4}, Case{"kronecker", 2, false, 4},
                 Case{"kronecker", 3, false, 3}, Case{"loop", 2, true, 4}, Case{"loop", 2, false, 3},
                 Case{"d4_in1", 2, false, 4}, Case{"q6", 2, true, 3}, Case{"delta1", 2, false, 3}}) {
    CAPTURE(c.name);
    CAPTURE(c.p);
    auto q = testing::fixture(c.name);
    ClassCatalog cat(q, c.p, c.nil);
    IsoRegistry& reg = cat.registry();
    auto keys = cat.classes_up_to(c.bound - 1);
    for (const auto& a : keys) {
      for (const auto& b : keys) {
        const auto& m = cat.rep(a);
        const auto& n = cat.rep(b);
        const auto total = plus(m.dims(), n.dims());
        int t = 0;
        for (int x : total) t += x;
        if (t > c.bound) continue;
        auto prod = hall_product(m, n, reg, c.nil);
        auto tw = twisted_product(m, n, reg, c.nil);
        CHECK(prod.support() == tw.support());
        CHECK(tw == prod.scaled(LaurentPoly::monomial(1, euler_form(m, n))));
        for (const auto& [key, coeff] : prod.terms()) {
          CHECK(prod.module(key).dims() == total);
          CHECK(coeff.terms().size() == 1);
          CHECK(coeff.coefficient(0) >= 1);
        }
        CHECK(prod.coefficient(reg.insert(direct_sum(m, n))).coefficient(0) >= 1);
        // independent computation over every class of the total dimension vector
        std::map<std::string, long long> oracle;
        for (const auto& x : enumerate_reps(q, total, c.p, c.nil)) {
          auto f = hall_number(x, m, n);
          if (f > 0) oracle[reg.insert(x)] = static_cast<long long>(f);
        }
        std::map<std::string, long long> got;
        for (const auto& [key, coeff] : prod.terms()) got[key] = coeff.coefficient(0);
        CHECK(got == oracle);
      }
    }
  }
}

TEST_CASE("associativity of both products") {
  struct Case {
    const char* name;
    bool nil;
  };
  for (auto c : {Case{"L2", false}, Case{"loop", true}, Case{"kronecker", false}}) {
    CAPTURE(c.name);
    auto q = testing::fixture(c.name);
    ClassCatalog cat(q, 2, c.nil);
    IsoRegistry& reg = cat.registry();
    auto keys = cat.classes_up_to(2);
    for (const auto& a : keys)
      for (const auto& b : keys)
        for (const auto& d : keys) {
          const int total = cat.rep(a).total_dim() + cat.rep(b).total_dim() + cat.rep(d).total_dim();
          if (total > 4) continue;
          for (bool twisted : {false, true}) {
            auto ea = basis_element(cat.rep(a), reg, c.nil);
            auto eb = basis_element(cat.rep(b), reg, c.nil);
            auto ed = basis_element(cat.rep(d), reg, c.nil);
            auto left = multiply(multiply(ea, eb, reg, twisted), ed, reg, twisted);
            auto right = multiply(ea, multiply(eb, ed, reg, twisted), reg, twisted);
            CHECK(left == right);
          }
        }
  }
}

TEST_CASE("Euler form matches chi on random pairs") {
  std::mt19937_64 rng(11);
  for (const char* name : {"L3", "kronecker", "d4_in0", "d4_in3"}) {
    auto q = testing::fixture(name);
    for (int trial = 0; trial < 60; ++trial) {
      auto m = testing::random_rep(rng, q, 3, random_dims(rng, q->vertex_count(), 2));
      auto n = testing::random_rep(rng, q, 3, random_dims(rng, q->vertex_count(), 2));
      CHECK(euler_form(m, n) == euler_chi(*q, m.dims(), n.dims()));
    }
  }
  auto d2 = testing::fixture("delta2");
  int nil_pairs = 0;
  while (nil_pairs < 60) {
    auto m = testing::random_rep(rng, d2, 2, random_dims(rng, d2->vertex_count(), 2));
    auto n = testing::random_rep(rng, d2, 2, random_dims(rng, d2->vertex_count(), 2));
    if (!is_nilpotent(m) || !is_nilpotent(n)) continue;
    ++nil_pairs;
    CHECK(euler_form(m, n) == euler_chi(*d2, m.dims(), n.dims()));
  }
}

TEST_CASE("Riedtmann's formula pins down Ext^1, including non-nilpotent cyclic modules") {
  // sum_X F^X_{M,N} |Aut M| |Aut N| |Hom(M,N)| / |Aut X| = |Ext^1(M,N)|
  std::mt19937_64 rng(13);
  struct Case {
    const char* name;
    int p;
  };
  int checked = 0;
  for (auto c : {Case{"loop", 2}, Case{"loop", 3}, Case{"delta1", 2}, Case{"q6", 2}, Case{"q8", 2},
                 Case{"kronecker", 2}, Case{"q4", 2}}) {
    CAPTURE(c.name);
    auto q = testing::fixture(c.name);
    IsoRegistry reg;
    for (int trial = 0; trial < 20; ++trial) {
      auto m = testing::random_rep(rng, q, c.p, random_dims(rng, q->vertex_count(), 2));
      auto n = testing::random_rep(rng, q, c.p, random_dims(rng, q->vertex_count(), 2));
      if (m.total_dim() + n.total_dim() > 4 || m.total_dim() == 0 || n.total_dim() == 0) continue;
      auto prod = hall_product(m, n, reg);
      const std::uint64_t outer = aut_size(m) * aut_size(n) * ipow(c.p, hom_dim(m, n));
      std::uint64_t sum = 0;
      for (const auto& [key, coeff] : prod.terms()) {
        const auto num = static_cast<std::uint64_t>(coeff.coefficient(0)) * outer;
        const auto ax = aut_size(prod.module(key));
        CHECK(num % ax == 0);
        sum += num / ax;
      }
      CHECK(sum == ipow(c.p, ext1_dim(m, n)));
      CHECK(euler_form(m, n) == euler_chi(*q, m.dims(), n.dims()));
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("hall numbers respect the ambient prime") {
  auto kr = testing::fixture("kronecker");
  for (int p : {2, 3, 5}) {
    auto s1 = Representation::simple(kr, p, 0), s2 = Representation::simple(kr, p, 1);
    IsoRegistry reg;
    auto prod = hall_product(s1, s2, reg);
    // split plus one class per line in Ext^1 = k^2
    CHECK(prod.terms().size() == static_cast<std::size_t>(p + 2));
  }
}
