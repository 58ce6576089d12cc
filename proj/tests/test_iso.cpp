#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qhol/errors.hpp"
#include "qhol/iso.hpp"

using namespace qhol;

namespace {

bool is_hom(const GroupTable& a, const GroupTable& b, const std::vector<std::size_t>& f) {
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y)
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
  return true;
}

std::size_t euler_phi(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST_CASE("isomorphism agrees with exhaustive bijection search up to order 8") {
  const char* specs[] = {"C:4", "AB:2x2", "C:6", "D:3", "C:8", "AB:4x2", "D:4", "DIC:2", "AB:2x2x2", "SD:4:2:3"};
  for (const char* s1 : specs)
    for (const char* s2 : specs) {
      GroupTable a = build_table(s1), b = build_table(s2);
      if (a.order() != b.order()) continue;
      CAPTURE(s1);
      CAPTURE(s2);
      bool ref = !oracle::naive_isomorphisms(a, b, true).empty();
      auto f = find_isomorphism(a, b);
      CHECK(f.has_value() == ref);
      if (f) {
        CHECK(is_hom(a, b, *f));
        CHECK(fingerprint(a) == fingerprint(b));
        // symmetry
        CHECK(find_isomorphism(b, a).has_value());
      }
    }
}

TEST_CASE("automorphism counts against the exhaustive oracle") {
  for (const char* s : {"C:4", "AB:2x2", "D:3", "C:8", "AB:4x2", "D:4", "DIC:2", "AB:2x2x2"}) {
    CAPTURE(s);
    GroupTable g = build_table(s);
    auto ref = oracle::naive_isomorphisms(g, g);
    auto got = automorphisms(g);
    CHECK(got.size() == ref.size());
    std::sort(got.begin(), got.end());
    CHECK(got == ref);
  }
}

TEST_CASE("Aut of cyclic groups has phi(n) elements") {
  for (std::size_t n : {2, 3, 5, 8, 9, 12, 16, 27, 49, 64}) {
    CAPTURE(n);
    CHECK(automorphism_group(build("C:" + std::to_string(n))).order() == euler_phi(n));
  }
  // Aut(C16) = U(16) is not cyclic: no element of order 8
  PermGroup a16 = automorphism_group(build("C:16"));
  for (const auto& p : a16.elements()) CHECK(p.order() < 8);
  CHECK(automorphism_group(build("D:4")).order() == 8);
  CHECK(automorphism_group(build("AB:2x2x2x2")).order() == 20160);
}

TEST_CASE("A(G) fixes the identity point and respects the table") {
  RegularContext ctx = build("SG16_3");
  PermGroup a = automorphism_group(ctx);
  for (const auto& p : a.elements()) {
    CHECK(p[0] == 0);
    for (std::size_t x = 0; x < ctx.order(); ++x)
      for (std::size_t y = 0; y < ctx.order(); ++y)
        CHECK(p[ctx.table.mul(x, y)] == ctx.table.mul(p[x], p[y]));
  }
  CHECK(normalizes(a, ctx.lambda));
  CHECK(normalizes(a, ctx.rho));
}

TEST_CASE("isomorphic on permutation groups") {
  RegularContext c4 = build("C:4");
  CHECK(isomorphic(c4.lambda, c4.rho).has_value());
  CHECK_FALSE(isomorphic(build("C:6").lambda, build("D:3").lambda).has_value());
}

TEST_CASE("budget exhaustion is reported, not turned into a no") {
  GroupTable g = build_table("AB:2x2x2x2");
  CHECK_THROWS_AS(automorphisms(g, 100), BudgetExceeded);
  CHECK_THROWS_AS(find_isomorphism(build_table("AB:4x4"), build_table("DP:C:4*C:4"), 1).has_value(),
                  BudgetExceeded);
}

TEST_CASE("minimal generating sets generate") {
  for (const auto& row : table_catalog()) {
    GroupTable g = build_table(row.spec);
    CAPTURE(row.spec);
    CHECK(subgroup_closure(g, minimal_generating_set(g)).size() == g.order());
  }
  CHECK(minimal_generating_set(build_table("AB:2x2x2x2")).size() == 4);
  CHECK(minimal_generating_set(build_table("C:64")).size() == 1);
}

TEST_CASE("naming") {
  CHECK(name_table(build_table("C:1")) == "1");
  CHECK(name_table(build_table("D:3")) == "S3");
  CHECK(name_table(build_table("C:6")) == "C6");
  CHECK(name_table(build_table("Q:8")) == "Q8");
  CHECK(name_table(build_table("DP:C:2*C:2")) == "C2×C2");
  CHECK(name_table(build_table("DP:C:3*C:2")) == "C6");
  CHECK(name_table(build_table("DP:C:3*S4")) == "C3×S4");
  CHECK(name_table(build_table("C3xA4sC2")) == "(C3×A4)⋊C2");
  CHECK(name_table(build_table("SG24_8")) == "(C6×C2)⋊C2");
  CHECK(name_table(build_table("DP:C:2*DP:C:2*C:2")) == "C2×C2×C2");
  // not in the pool: fall back rather than guess
  std::string fb = name_table(build_table("AB:4x4x2"));
  CHECK(fb.rfind("order-32, fingerprint ", 0) == 0);
  CHECK(name_group(build("D:4").lambda) == "D8");
}

TEST_CASE("the two order-72 specials are distinct") {
  CHECK_FALSE(find_isomorphism(build_table("C3xS4"), build_table("C3xA4sC2")).has_value());
}
