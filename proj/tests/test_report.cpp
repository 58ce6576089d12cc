#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qhol/report.hpp"

using namespace qhol;

TEST_CASE("analyze on small rows") {
  GroupReport d4 = analyze("D:4");
  CHECK_FALSE(d4.error.has_value());
  CHECK(d4.sr == 6u);
  CHECK(d4.q == 6u);
  CHECK(d4.h == 2u);
  CHECK(class_cell(d4) == "C6, S3");
  CHECK(d4.nhol_split == "split");
  CHECK(d4.tandq == true);
  CHECK(d4.structural_ok == true);

  GroupReport c42 = analyze("AB:4x2");
  CHECK(c42.sr == 8u);
  CHECK(c42.q == 2u);
  CHECK(c42.h == 2u);
  CHECK(class_cell(c42) == "C2");

  GroupReport c2 = analyze("C:2");
  CHECK(c2.sr == 1u);
  CHECK(c2.q == 1u);
  CHECK(c2.h == 1u);
  CHECK(class_cell(c2) == "1");
}

TEST_CASE("not-ZS cell and a failing spec") {
  GroupReport r = analyze("SG16_13");
  CHECK(class_cell(r) == "not-ZS");
  CHECK(r.complements_exhaustive);
  GroupReport bad = analyze("XYZ:3");
  CHECK(bad.error.has_value());
  CHECK_FALSE(bad.sr.has_value());
}

TEST_CASE("JSON round trip and determinism") {
  std::vector<GroupReport> rows = {analyze("D:4"), analyze("C:16"), analyze("SD:5:8:2"),
                                   analyze("nope")};
  std::string js = render_json(rows);
  CHECK(parse_json(js) == rows);
  std::vector<GroupReport> again = {analyze("D:4"), analyze("C:16"), analyze("SD:5:8:2"),
                                    analyze("nope")};
  CHECK(render_json(again) == js);

  AnalyzeOptions t;
  t.timings = true;
  GroupReport timed = analyze("D:3", t);
  CHECK_FALSE(timed.timings_ms.empty());
  CHECK(parse_json(render_json({timed})).front() == timed);
}

TEST_CASE("markdown and CSV rendering") {
  std::string empty = render_markdown({});
  CHECK(empty.find("| G |") == 0);
  CHECK(std::count(empty.begin(), empty.end(), '\n') == 2);
  std::string csv = render_csv({analyze("D:4")});
  CHECK(csv.find("\"C6, S3\"") != std::string::npos);
}

TEST_CASE("closed-form cross-check is attached to cyclic and dihedral rows") {
  AnalyzeOptions opt;
  opt.closed_form_check = true;
  CHECK(analyze("C:16", opt).closed_form_ok == true);
  CHECK(analyze("D:8", opt).closed_form_ok == true);
  CHECK_FALSE(analyze("AB:4x2", opt).closed_form_ok.has_value());
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  AnalyzeOptions opt;
  opt.budget_nodes = 3;
  GroupReport r = analyze("AB:4x4", opt);
  bool marked = r.error.has_value() || r.zs_verdict == "inconclusive";
  CHECK(marked);
  CHECK(r.zs_verdict != "not-ZS");
}
