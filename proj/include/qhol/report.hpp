#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qhol {

struct AnalyzeOptions {
  // Overrides both the S(G) enumeration and the complement search node limits.
  std::optional<std::uint64_t> budget_nodes;
  std::size_t complement_cap = 100'000;
  bool closed_form_check = false;
  bool timings = false;
};

// One row of the results table.  Verdict strings:
//   qhol_verdict  group | not-closed | inconclusive
//   zs_verdict    ZS | not-ZS | inconclusive
//   nhol_split    split | not-split | inconclusive
struct GroupReport {
  std::string spec;
  std::string display;
  std::size_t order = 0;
  std::optional<std::size_t> s, sr, q, h;
  std::string qhol_verdict = "inconclusive";
  std::string zs_verdict = "inconclusive";
  std::map<std::string, std::size_t> complement_classes;
  std::size_t complement_count = 0;
  bool complements_exhaustive = false;
  std::optional<std::size_t> t_order;
  std::string nhol_split = "inconclusive";
  std::optional<std::string> nhol_complement;
  // some complement of Hol in QHol contains a copy of the NHol complement
  std::optional<bool> tandq;
  std::optional<bool> structural_ok;
  std::optional<bool> closed_form_ok;
  std::vector<std::string> closed_form_flags;
  std::vector<std::string> notes;
  std::optional<std::string> error;  // set when the run stopped early
  std::map<std::string, double> timings_ms;

  friend bool operator==(const GroupReport&, const GroupReport&) = default;
};

// Runs the whole pipeline for one spec.  Exceptions from the pipeline are
// caught and recorded in `error`, leaving the completed fields in place.
GroupReport analyze(const std::string& spec, const AnalyzeOptions& opt = {});

// Sorted class names joined as in the tables, or the not-ZS marker.
std::string class_cell(const GroupReport& r);

std::string render_json(const std::vector<GroupReport>& rows);
std::vector<GroupReport> parse_json(const std::string& text);
std::string render_markdown(const std::vector<GroupReport>& rows);
std::string render_csv(const std::vector<GroupReport>& rows);

}  // namespace qhol
