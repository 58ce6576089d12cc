#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "qhol/catalog.hpp"
#include "qhol/forms.hpp"
#include "qhol/quasi.hpp"

using namespace qhol;

namespace {

int slow_valuation(std::int64_t x, std::int64_t p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::int64_t slow_order(std::int64_t u, std::int64_t mod) {
  std::int64_t k = 1, x = u % mod;
  while (x != 1 % mod) {
    x = x * u % mod;
    ++k;
  }
  return k;
}

void show(const CheckReport& r) {
  for (const auto& f : r.failures) MESSAGE("failure: " << f);
}

const std::pair<int, int> kPrimePowers[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2},
                                            {3, 3}, {5, 2}, {7, 2}};

}  // namespace

TEST_CASE("valuation and multiplicative order against repeated division") {
  for (std::int64_t p : {2, 3, 5, 7})
    for (std::int64_t x = 1; x < 2000; ++x) {
      CAPTURE(x);
      CHECK(valuation(x, p) == slow_valuation(x, p));
    }
  for (std::int64_t mod : {8, 16, 27, 64, 125, 49})
    for (std::int64_t u = 1; u < mod; ++u)
      if (std::gcd(u, mod) == 1) CHECK(mult_order(u, mod) == slow_order(u, mod));
}

TEST_CASE("cyclic lemmas hold for every p^n <= 64") {
  for (auto [p, n] : kPrimePowers) {
    CAPTURE(p);
    CAPTURE(n);
    CheckReport r = cyclic_lemma_suite(p, n);
    show(r);
    CHECK(r.ok());
    CHECK(r.checks > 0);
  }
  // the order of 1 + p^(n-m) is p^m, which only equals 2^m for p = 2
  CheckReport odd = cyclic_lemma_suite(3, 3);
  CHECK_FALSE(odd.flags.empty());
  CHECK(mult_order(1 + 9, 27) == 3);
}

TEST_CASE("closed-form S∩R, Q and H for cyclic groups match enumeration") {
  for (auto [p, n] : kPrimePowers) {
    CAPTURE(p);
    CAPTURE(n);
    CheckReport r = cyclic_pipeline_check(p, n);
    show(r);
    CHECK(r.ok());
    if (!(p == 2 && n == 2)) {
      auto sr = cyclic_SR_closed_form(p, n);
      std::int64_t m = n / 2, pm = 1;
      for (int i = 0; i < m; ++i) pm *= p;
      CHECK(static_cast<std::int64_t>(sr.size()) == pm);
      std::set<RegularGroup> distinct(sr.begin(), sr.end());
      CHECK(distinct.size() == sr.size());
    }
  }
}

TEST_CASE("index sets for C_{2^n}") {
  // <5> mod 2^n has 2^(n-2) elements; |Q| = 2^floor(n/2); |H| = 2
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    C2nIndexSets s = c2n_Q_and_H(n);
    CHECK(s.s_set.size() == std::size_t{1} << (n - 2));
    CHECK(s.q_set.size() == std::size_t{1} << (n / 2));
    CHECK(s.h_set.size() == 2);
    PipelineCounts c = count_families("C:" + std::to_string(1 << n));
    CHECK(c.s == s.s_set.size());
    CHECK(c.q == s.q_set.size());
    CHECK(c.h == s.h_set.size());
  }
}

TEST_CASE("powers of beta parameterize Q") {
  for (auto [p, n] : kPrimePowers) {
    CAPTURE(p);
    CAPTURE(n);
    CheckReport r = beta_parameterization_check(p, n);
    show(r);
    CHECK(r.ok());
  }
}

TEST_CASE("small cyclic cases where the general statements degenerate are flagged") {
  CHECK_FALSE(cyclic_lemma_suite(2, 2).flags.empty());
  CHECK_FALSE(beta_parameterization_check(2, 2).flags.empty());
}

TEST_CASE("dihedral closed forms") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CheckReport r = dihedral_suite(n);
    show(r);
    CHECK(r.ok());
  }
}

TEST_CASE("dihedral data for n = 8") {
  DihedralForms df = DihedralForms::make(8);
  CHECK(df.upsilon == std::vector<std::int64_t>{1, 3, 5, 7});
  CHECK(df.q_count_formula() == 8);
  CHECK(df.psi().order() == 2);
  RegularContext d8 = build("D:8");
  CHECK(block_type(df, d8.lambda_reg) == 0);
  PipelineCounts c = count_families("D:8");
  CHECK(c.q == 8);
  CHECK(c.h == 4);
  CHECK(c.s == df.r_count_formula());
}

TEST_CASE("odd dihedral: Q = H of size |Upsilon|") {
  for (int n : {3, 5, 7, 9, 15}) {
    CAPTURE(n);
    DihedralForms df = DihedralForms::make(n);
    PipelineCounts c = count_families("D:" + std::to_string(n));
    CHECK(c.q == df.upsilon.size());
    CHECK(c.h == c.q);
  }
}
