// Acceptance run: one PASS/FAIL line per criterion, details for failures.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qhol/catalog.hpp"
#include "qhol/forms.hpp"
#include "qhol/quasi.hpp"
#include "qhol/report.hpp"
#include "qhol/zappa.hpp"
#include "reference_rows.hpp"

using namespace qhol;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::size_t checked = 0;
  std::vector<std::string> problems;
  std::vector<std::string> info;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) problems.push_back(what);
  }
};

std::map<std::string, GroupReport> g_reports;

const GroupReport& report(const std::string& spec) {
  auto it = g_reports.find(spec);
  if (it != g_reports.end()) return it->second;
  AnalyzeOptions opt;
  opt.complement_cap = 100'000;
  return g_reports[spec] = analyze(spec, opt);
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

// Table reproduction for every reference row.
void table_rows(Criterion& c) {
  for (const auto& row : reference::rows()) {
    const GroupReport& r = report(row.spec);
    std::string tag = std::string(row.display) + " [" + row.spec + "]";
    if (r.error) {
      c.expect(false, tag + ": error " + *r.error);
      continue;
    }
    c.expect(r.sr == row.sr, tag + ": |S∩R| " + std::to_string(r.sr.value_or(0)) + " vs " + std::to_string(row.sr));
    c.expect(r.q == row.q, tag + ": |Q| " + std::to_string(r.q.value_or(0)) + " vs " + std::to_string(row.q));
    c.expect(r.h == row.h, tag + ": |H| " + std::to_string(r.h.value_or(0)) + " vs " + std::to_string(row.h));
    c.expect(r.qhol_verdict == "group", tag + ": QHol verdict " + r.qhol_verdict);
    if (row.not_zs) {
      c.expect(r.zs_verdict == "not-ZS", tag + ": expected not-ZS, got " + r.zs_verdict);
      continue;
    }
    std::set<std::string> got;
    for (const auto& [k, v] : r.complement_classes) got.insert(k);
    std::set<std::string> want(row.classes.begin(), row.classes.end());
    c.expect(r.zs_verdict == "ZS", tag + ": verdict " + r.zs_verdict);
    c.expect(got == want, tag + ": classes " + join(got) + " vs " + join(want));
    c.expect(r.complements_exhaustive, tag + ": complement search not exhaustive");
  }
  c.info.push_back(std::to_string(reference::rows().size()) + " rows");
}

void not_zs_rows(Criterion& c) {
  for (const char* spec : {"SG16_13", "SD:5:8:2", "DP:C:2*SD:5:4:2"}) {
    const GroupReport& r = report(spec);
    c.expect(r.zs_verdict == "not-ZS", std::string(spec) + ": verdict " + r.zs_verdict);
    c.expect(r.complements_exhaustive, std::string(spec) + ": search not exhaustive");
  }
}

struct Pipeline {
  HolContext hc;
  ParamFamily s, sr, h, q;
};

Pipeline pipeline(const std::string& spec) {
  Pipeline p{build_hol(build(spec)), {}, {}, {}, {}};
  p.s = enumerate_S(p.hc);
  p.sr = compute_SR(p.hc, p.s);
  p.h = compute_H(p.hc, p.s);
  p.q = compute_Q(norm_digraph(p.sr), p.sr, p.h);
  return p;
}

void nhol_rows(Criterion& c) {
  for (const char* spec : {"SD:5:8:2", "DP:C:2*SD:5:4:2"}) {
    Pipeline p = pipeline(spec);
    NholReport n = nhol_split(p.hc, p.h);
    std::string tag = spec;
    c.expect(n.t_order == 4, tag + ": |H| = " + std::to_string(n.t_order));
    c.expect(n.t_elementary_2 && n.t_klein4, tag + ": coset loop not Klein-four");
    c.expect(n.search.verdict == ZsVerdict::not_zs && n.search.exhaustive,
             tag + ": NHol complement search did not certify non-splitting");
    c.expect(!n.involution_free_fixed_cosets.empty(), tag + ": no involution-free fixed coset");
    if (!n.involution_free_fixed_cosets.empty()) {
      std::size_t k = n.involution_free_fixed_cosets.front();
      c.info.push_back(tag + " coset " + std::to_string(k) + " rep " + to_cycles(p.h.reps[k]));
    }
  }
}

void counterexamples(Criterion& c) {
  std::size_t d = 8;
  auto P = [&](const char* s) { return Perm::parse_cycles(s, d); };
  PermGroup g = PermGroup::generate({P("(1,2)(3,4)(5,6)(7,8)"), P("(1,3,5,7)(2,4,6,8)")}, d);
  HolContext hc = build_hol(context_from_regular(g, "C4xC2"));
  ParamFamily sr = compute_SR(hc, enumerate_S(hc));
  Perm prod = P("(4,8)") * P("(2,5)(4,7)");
  c.expect(prod == P("(2,5)(4,7,8)"), "product of reps is " + to_cycles(prod));
  RegularGroup conj = hc.ctx.lambda_reg.conjugate(prod);
  bool normalized = true;
  for (const auto& x : g.generators()) normalized = normalized && conj.normalized_by(x);
  c.expect(!normalized, "conjugate by (2,5)(4,7,8) is normalized by G");
  c.expect(sr.find(conj) == sr.size(), "conjugate lies in S∩R");
  c.expect(sr.size() == 8, "|S∩R(C4xC2)| = " + std::to_string(sr.size()));

  const GroupReport& d4 = report("D:4");
  auto cls = d4.complement_classes;
  c.expect(d4.complement_count == 64 && d4.complements_exhaustive,
           "D8 complements: " + std::to_string(d4.complement_count));
  c.expect(cls.size() == 2 && cls["S3"] == 32 && cls["C6"] == 32, "D8 complement split is not 32/32");
}

void closed_forms(Criterion& c) {
  std::size_t flags = 0;
  auto take = [&](const std::string& tag, const CheckReport& r) {
    c.checked += r.checks;
    for (const auto& f : r.failures) c.problems.push_back(tag + ": " + f);
    flags += r.flags.size();
  };
  for (std::int64_t p : {2, 3, 5, 7}) {
    std::int64_t pn = p * p;
    for (std::int64_t n = 2; pn <= 64; ++n, pn *= p) {
      std::string tag = "C" + std::to_string(pn);
      take(tag + " lemmas", cyclic_lemma_suite(p, n));
      take(tag + " pipeline", cyclic_pipeline_check(p, n));
      take(tag + " beta", beta_parameterization_check(p, n));
    }
  }
  for (std::int64_t n = 3; n <= 20; ++n) take("D:" + std::to_string(n), dihedral_suite(n));
  c.info.push_back(std::to_string(flags) + " corrected-form flags");
}

void properties(Criterion& c) {
  for (const auto& row : table_catalog()) {
    std::string tag = row.spec;
    Pipeline p = pipeline(row.spec);
    const HolContext& hc = p.hc;
    std::size_t n = hc.degree();

    c.expect(hc.hol.order() == n * hc.aut.order(), tag + ": |Hol| != |G||Aut|");
    for (const auto* side : {&hc.ctx.rho_of, &hc.ctx.lambda_of}) {
      std::set<Perm> prod;
      bool inside = true;
      for (const auto& x : *side)
        for (const auto& a : hc.aut.elements()) {
          Perm y = x * a;
          inside = inside && hc.hol.contains(y);
          prod.insert(std::move(y));
        }
      c.expect(inside && prod.size() == hc.hol.order(), tag + ": Hol is not a product with A(G)");
    }
    c.expect(intersection(hc.ctx.lambda, hc.ctx.rho).order() == hc.ctx.center_order(),
             tag + ": |λ∩ρ| != |Z(G)|");

    bool h_in_q = true, q_in_sr = true;
    for (const auto& m : p.h.members) h_in_q = h_in_q && p.q.find(m) < p.q.size();
    for (const auto& m : p.q.members) q_in_sr = q_in_sr && p.sr.find(m) < p.sr.size();
    c.expect(h_in_q && q_in_sr, tag + ": H ⊆ Q ⊆ S∩R fails");
    StructuralReport st = structural_checks(hc, p.q, p.h, p.sr.size());
    for (const auto& f : st.failures) c.expect(false, tag + ": " + f);
    c.expect(st.h_divides_q, tag + ": |H| does not divide |Q|");
    bool clique = true;
    for (const auto& a : p.q.members)
      for (const auto& b : p.q.members) clique = clique && a.normalizes(b);
    c.expect(clique, tag + ": Q not mutually normalizing");

    ReflectionReport rr = reflection_check(hc, p.s);
    c.expect(rr.r_count == rr.s_count && rr.all_normalized_by_lambda && rr.all_regular,
             tag + ": |R| " + std::to_string(rr.r_count) + " vs |S| " + std::to_string(rr.s_count));

    c.expect(cosets_closed(p.h, hc.ctx.lambda_reg), tag + ": H-cosets not closed");
    LoopTable ht = loop_table(hc.ctx.lambda_reg, p.h);
    c.expect(ht.associative(), tag + ": H loop not associative");

    QholResult qr = build_qhol(hc, p.q);
    if (qr.verdict == QholVerdict::group) {
      ParamFamily f;
      for (const auto& b : qr.cu.reps) {
        f.members.push_back(hc.ctx.lambda_reg.conjugate(b));
        f.reps.push_back(b);
      }
      f.rebuild_index();
      LoopTable lt = loop_table(hc.ctx.lambda_reg, f);
      c.expect(lt.rows_are_permutations() && lt.zero_is_right_identity(),
               tag + ": Q loop laws fail");
    } else {
      c.expect(false, tag + ": QHol not a group");
    }
  }
  for (auto [a, b] : {std::pair{"C:8", "C:3"}, std::pair{"C:2", "C:9"}, std::pair{"D:3", "C:5"}}) {
    CoprimeReport cr = coprime_product_check(a, b);
    c.expect(cr.holds, std::string("|Q(") + a + " x " + b + ")| = " + std::to_string(cr.q_product) +
                           " vs " + std::to_string(cr.q1 * cr.q2));
  }
}

}  // namespace

int main() {
  std::vector<std::pair<Criterion, void (*)(Criterion&)>> all = {
      {{1, "table reproduction"}, table_rows},
      {{2, "not-ZS rows certified by exhaustive search"}, not_zs_rows},
      {{3, "NHol non-splitness with Klein-four quotient"}, nhol_rows},
      {{4, "C4xC2 witness and D8 complement census"}, counterexamples},
      {{5, "closed forms against enumeration"}, closed_forms},
      {{6, "property suites on every catalog group"}, properties},
  };
  bool ok = true;
  for (auto& [c, fn] : all) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = c.problems.empty();
    ok = ok && pass;
    std::ostringstream line;
    line << "criterion " << c.id << " (" << c.title << "): " << (pass ? "PASS" : "FAIL") << "  ["
         << c.checked << " checks";
    for (const auto& i : c.info) line << "; " << i;
    char buf[32];
    std::snprintf(buf, sizeof buf, "; %.1fs]", secs);
    line << buf;
    std::cout << line.str() << std::endl;
    for (const auto& p : c.problems) std::cout << "    " << p << "\n";
  }
  return ok ? 0 : 1;
}
