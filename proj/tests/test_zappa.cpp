#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "qhol/catalog.hpp"
#include "qhol/iso.hpp"
#include "qhol/quasi.hpp"
#include "qhol/zappa.hpp"

using namespace qhol;

namespace {

std::set<Perm> as_set(const std::vector<Perm>& v) { return {v.begin(), v.end()}; }

struct Run {
  HolContext hc;
  ParamFamily s, sr, h, q;
  QholResult qhol;
};

Run run(const std::string& spec) {
  Run r{build_hol(build(spec)), {}, {}, {}, {}, {}};
  r.s = enumerate_S(r.hc);
  r.sr = compute_SR(r.hc, r.s);
  r.h = compute_H(r.hc, r.s);
  r.q = compute_Q(norm_digraph(r.sr), r.sr, r.h);
  r.qhol = build_qhol(r.hc, r.q);
  return r;
}

// Q with the reps chosen by build_qhol, which are conj-closed.
ParamFamily closed_family(const Run& r) {
  ParamFamily f;
  for (const auto& b : r.qhol.cu.reps) {
    f.members.push_back(r.hc.ctx.lambda_reg.conjugate(b));
    f.reps.push_back(b);
  }
  f.rebuild_index();
  return f;
}

ComplementSearch complements(const Run& r, std::size_t cap = 100000) {
  ComplementOptions opt;
  opt.max_count = cap;
  return find_complements(r.hc, closed_family(r), opt);
}

std::set<std::string> class_names(const ComplementSearch& cs) {
  std::set<std::string> out;
  for (const auto& [k, v] : classify_complements(cs.complements)) out.insert(k);
  return out;
}

}  // namespace

TEST_CASE("complements agree with a pairwise-closure search") {
  for (const char* spec : {"D:3", "D:4", "C:16", "DIC:2"}) {
    CAPTURE(spec);
    Run r = run(spec);
    REQUIRE(r.qhol.verdict == QholVerdict::group);
    std::vector<Perm> gens = r.hc.hol_gens;
    gens.insert(gens.end(), r.qhol.cu.reps.begin(), r.qhol.cu.reps.end());
    auto whole = oracle::naive_closure(gens, r.hc.degree());
    REQUIRE(whole.size() == r.qhol.cu.order());
    auto want = oracle::naive_complements(whole, as_set(r.hc.hol.elements()), r.q.size(),
                                          r.hc.degree());
    ComplementSearch cs = complements(r);
    CHECK(cs.exhaustive);
    std::set<std::set<Perm>> got;
    for (const auto& p : cs.complements) got.insert(as_set(p.elements()));
    CHECK(got.size() == cs.complements.size());
    CHECK(got == want);
  }
}

TEST_CASE("every complement parameterizes Q regularly") {
  for (const char* spec : {"D:4", "C:16", "D:8", "DP:C:3*D:4", "C:64"}) {
    CAPTURE(spec);
    Run r = run(spec);
    ComplementSearch cs = complements(r);
    REQUIRE_FALSE(cs.complements.empty());
    for (const auto& p : cs.complements) {
      CHECK(p.order() * r.hc.hol.order() == r.qhol.cu.order());
      std::size_t meet = 0;
      std::set<std::size_t> hit;
      for (const auto& x : p.elements()) {
        meet += r.hc.in_hol(x);
        hit.insert(r.q.find(r.hc.ctx.lambda_reg.conjugate(x)));
      }
      CHECK(meet == 1);
      CHECK(hit.size() == r.q.size());
      CHECK(hit.count(r.q.size()) == 0);

      // The transversal it induces is a group, so its loop is associative.
      ParamFamily f;
      for (const auto& x : p.elements()) {
        f.members.push_back(r.hc.ctx.lambda_reg.conjugate(x));
        f.reps.push_back(x);
      }
      // index 0 must be the identity rep
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f.reps[i].is_identity()) {
          std::swap(f.reps[0], f.reps[i]);
          std::swap(f.members[0], f.members[i]);
        }
      f.rebuild_index();
      LoopTable lt = loop_table(r.hc.ctx.lambda_reg, f);
      CHECK(lt.associative());
    }
  }
}

TEST_CASE("D8 of order 8: 64 complements, half S3 and half C6") {
  Run r = run("D:4");
  ComplementSearch cs = complements(r);
  CHECK(cs.verdict == ZsVerdict::zs);
  CHECK(cs.exhaustive);
  CHECK(cs.complements.size() == 64);
  auto cls = classify_complements(cs.complements);
  CHECK(cls.size() == 2);
  CHECK(cls["S3"] == 32);
  CHECK(cls["C6"] == 32);
}

TEST_CASE("class sets of selected rows") {
  CHECK(class_names(complements(run("C:16"))) == std::set<std::string>{"C4", "C2×C2"});
  CHECK(class_names(complements(run("D:8"))) == std::set<std::string>{"C4×C2", "D8", "C2×C2×C2"});
  CHECK(class_names(complements(run("DIC:4"))) == std::set<std::string>{"C4×C2", "D8", "C2×C2×C2"});
  CHECK(class_names(complements(run("C:64"))) == std::set<std::string>{"C8", "Q8"});
  CHECK(class_names(complements(run("AB:9x3"))) == std::set<std::string>{"C3"});
  CHECK(class_names(complements(run("DP:D:3*D:3"))) == std::set<std::string>{"C4", "C2×C2"});
  CHECK(class_names(complements(run("AB:2x2x2"))) == std::set<std::string>{"1"});
}

TEST_CASE("rows whose QHol has no complement to Hol") {
  for (const char* spec : {"SG16_13", "SD:5:8:2", "DP:C:2*SD:5:4:2"}) {
    CAPTURE(spec);
    Run r = run(spec);
    REQUIRE(r.qhol.verdict == QholVerdict::group);
    ComplementSearch cs = complements(r);
    CHECK(cs.verdict == ZsVerdict::not_zs);
    CHECK(cs.exhaustive);
    CHECK(cs.complements.empty());
  }
}

TEST_CASE("a node budget too small gives inconclusive, never not-ZS") {
  Run r = run("SG16_13");
  ComplementOptions opt;
  opt.max_nodes = 1;
  ComplementSearch cs = find_complements(r.hc, closed_family(r), opt);
  if (!cs.exhaustive) CHECK(cs.verdict == ZsVerdict::inconclusive);
  Run d = run("AB:4x4");
  opt.max_nodes = 50;
  ComplementSearch cd = find_complements(d.hc, closed_family(d), opt);
  CHECK_FALSE(cd.exhaustive);
  CHECK(cd.verdict != ZsVerdict::not_zs);
}

TEST_CASE("the transcript is deterministic") {
  Run r = run("SD:5:8:2");
  ComplementOptions opt;
  opt.transcript = true;
  auto a = find_complements(r.hc, closed_family(r), opt);
  auto b = find_complements(r.hc, closed_family(r), opt);
  CHECK_FALSE(a.transcript.empty());
  CHECK(a.transcript == b.transcript);
  CHECK(a.stats.coset_order == b.stats.coset_order);
}

TEST_CASE("find_complements rejects a family that is not conj-closed") {
  Run r = run("AB:4x2");
  CHECK_THROWS_AS(find_complements(r.hc, r.sr), std::invalid_argument);
}

TEST_CASE("NHol over Hol: Klein-four quotient without complement") {
  for (const char* spec : {"SD:5:8:2", "DP:C:2*SD:5:4:2"}) {
    CAPTURE(spec);
    Run r = run(spec);
    NholReport n = nhol_split(r.hc, r.h);
    CHECK(n.t_order == 4);
    CHECK(n.t_elementary_2);
    CHECK(n.t_klein4);
    CHECK(n.search.verdict == ZsVerdict::not_zs);
    CHECK(n.search.exhaustive);
    CHECK_FALSE(n.complement_name.has_value());
    REQUIRE_FALSE(n.involution_free_fixed_cosets.empty());
    // no element of that coset is an involution
    const Perm& b = r.h.reps[n.involution_free_fixed_cosets[0]];
    for (const auto& x : r.hc.hol.elements()) CHECK((b * x).order() != 2);
  }
}

TEST_CASE("NHol over Hol splits where expected") {
  struct Case {
    const char* spec;
    std::size_t t;
    const char* name;
  };
  for (auto c : {Case{"D:4", 2, "C2"}, Case{"SD:5:8:4", 4, "C2×C2"}, Case{"SD:4:4:3", 8, "D8"},
                 Case{"AB:2x2", 1, "1"}}) {
    CAPTURE(c.spec);
    Run r = run(c.spec);
    NholReport n = nhol_split(r.hc, r.h);
    CHECK(n.t_order == c.t);
    CHECK(n.search.verdict == ZsVerdict::zs);
    REQUIRE(n.complement_name.has_value());
    CHECK(*n.complement_name == c.name);
  }
}

TEST_CASE("three H-cosets of order-2 reps cannot be conj-closed") {
  Run r = run("SD:5:8:2");
  REQUIRE(r.h.size() == 4);
  ParamFamily sub;
  for (std::size_t i = 0; i < 4 && sub.size() < 3; ++i) {
    Perm b = r.h.reps[i];
    if (!b.is_identity() && b.order() != 2) {
      // swap in an order-2 element of the same coset if one exists
      for (const auto& x : r.hc.hol.elements())
        if ((r.h.reps[i] * x).order() == 2) {
          b = r.h.reps[i] * x;
          break;
        }
    }
    if (b.is_identity() || b.order() == 2) {
      sub.members.push_back(r.h.members[i]);
      sub.reps.push_back(b);
    }
  }
  REQUIRE(sub.size() == 3);
  sub.rebuild_index();
  CHECK(conj_closed_check(r.hc, sub).has_value());
}

TEST_CASE("a split NHol's complement embeds in some complement of Hol in QHol") {
  for (const char* spec : {"D:4", "SD:4:4:3", "SD:5:8:4", "D:8"}) {
    CAPTURE(spec);
    Run r = run(spec);
    NholReport n = nhol_split(r.hc, r.h);
    REQUIRE(n.search.verdict == ZsVerdict::zs);
    const PermGroup& m = n.search.complements.front();
    ComplementSearch cs = complements(r);
    bool some = false;
    for (const auto& p : cs.complements)
      if (!some) some = contains_subgroup_isomorphic(p, m);
    CHECK(some);
  }
}

TEST_CASE("contains_subgroup_isomorphic on known pairs") {
  auto grp = [](const char* spec) { return build(spec).lambda; };
  CHECK(contains_subgroup_isomorphic(grp("S4"), grp("D:4")));
  CHECK(contains_subgroup_isomorphic(grp("S4"), grp("A4")));
  CHECK_FALSE(contains_subgroup_isomorphic(grp("S4"), grp("DIC:2")));
  CHECK_FALSE(contains_subgroup_isomorphic(grp("A4"), grp("D:3")));
  CHECK(contains_subgroup_isomorphic(grp("DIC:4"), grp("DIC:2")));
  CHECK_FALSE(contains_subgroup_isomorphic(grp("C:8"), grp("AB:2x2")));
}
