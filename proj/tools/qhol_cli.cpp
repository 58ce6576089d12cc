// Command-line front end: per-group reports, reference-style tables and raw
// dumps of the regular-subgroup families.

#include <algorithm>
#include <atomic>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qhol/catalog.hpp"
#include "qhol/quasi.hpp"
#include "qhol/report.hpp"

using namespace qhol;

namespace {

struct Common {
  std::vector<std::string> specs;
  std::size_t max_order = 0;
  std::string format = "md";
  std::optional<std::uint64_t> budget_nodes;
  std::size_t complement_cap = 100'000;
  unsigned threads = 1;
  bool verbose = false;
  bool closed_form_check = false;
};

std::vector<GroupReport> run_rows(const std::vector<std::string>& specs, const Common& c) {
  AnalyzeOptions opt;
  opt.budget_nodes = c.budget_nodes;
  opt.complement_cap = c.complement_cap;
  opt.closed_form_check = c.closed_form_check;
  opt.timings = c.verbose;

  std::vector<GroupReport> out(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < specs.size();) {
      out[i] = analyze(specs[i], opt);
      if (c.verbose) {
        std::string line = "[" + specs[i] + "]";
        for (const auto& [stage, ms] : out[i].timings_ms)
          line += " " + stage + "=" + std::to_string(static_cast<long long>(ms)) + "ms";
        for (const auto& n : out[i].notes) line += "\n  note: " + n;
        std::cerr << line + "\n";
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(c.threads, static_cast<unsigned>(specs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int emit(const std::vector<GroupReport>& rows, const std::string& format) {
  if (format == "json") std::cout << render_json(rows);
  else if (format == "csv") std::cout << render_csv(rows);
  else std::cout << render_markdown(rows);
  bool bad = false;
  for (const auto& r : rows) {
    bool failed = r.error || r.structural_ok == false || r.closed_form_ok == false;
    if (failed) std::cerr << "row " << r.spec << " failed" << (r.error ? ": " + *r.error : "") << "\n";
    bad = bad || failed;
  }
  return bad ? 1 : 0;
}

std::vector<std::string> catalog_specs(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& row : table_catalog())
    if (max_order == 0 || build_table(row.spec).order() <= max_order) out.push_back(row.spec);
  return out;
}

struct Families {
  HolContext hc;
  ParamFamily s, sr, h, q;
};

Families families(const std::string& spec, const Common& c) {
  Families f{build_hol(build(spec)), {}, {}, {}, {}};
  EnumOptions eo;
  if (c.budget_nodes) eo.max_nodes = *c.budget_nodes;
  f.s = enumerate_S(f.hc, eo);
  f.sr = compute_SR(f.hc, f.s);
  f.h = compute_H(f.hc, f.s);
  f.q = compute_Q(norm_digraph(f.sr), f.sr, f.h);
  return f;
}

void dump(const std::string& spec, const Common& c) {
  Families f = families(spec, c);
  std::cout << "group " << spec << " of order " << f.hc.degree() << "\n";
  std::cout << "lambda generators:";
  for (const auto& g : f.hc.ctx.lambda.generators()) std::cout << " " << to_cycles(g);
  std::cout << "\n|Aut| = " << f.hc.aut.order() << ", |Hol| = " << f.hc.hol.order() << "\n";
  auto list = [&](const char* name, const ParamFamily& p) {
    std::cout << name << " (" << p.size() << ")\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::cout << "  [" << i << "] rep " << to_cycles(p.reps[i]) << "  gens";
      for (const auto& g : p.members[i].generators()) std::cout << " " << to_cycles(g);
      std::cout << "\n";
    }
  };
  list("S∩R", f.sr);
  list("Q", f.q);
  list("H", f.h);
  QholResult qr = build_qhol(f.hc, f.q);
  std::cout << "QHol reps:";
  for (const auto& b : qr.cu.reps) std::cout << " " << to_cycles(b);
  std::cout << "\n";
}

// Graphviz digraph: i -> j when member i normalizes member j; Q members boxed.
void digraph(const std::string& spec, const Common& c) {
  Families f = families(spec, c);
  NormDigraph dg = norm_digraph(f.sr);
  std::cout << "digraph normalizes {\n";
  for (std::size_t i = 0; i < dg.size; ++i)
    std::cout << "  n" << i << (f.q.find(f.sr.members[i]) < f.q.size() ? " [shape=box]" : "")
              << ";\n";
  for (std::size_t i = 0; i < dg.size; ++i)
    for (std::size_t j = 0; j < dg.size; ++j)
      if (i != j && dg.adj[i][j]) std::cout << "  n" << i << " -> n" << j << ";\n";
  std::cout << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular subgroups of the holomorph, Q(G), QHol(G) and its complements"};
  app.require_subcommand(1);
  Common c;
  std::uint64_t budget = 0;

  auto add_common = [&](CLI::App* sub, bool rows) {
    sub->add_option("--spec", c.specs, "Group spec, repeatable (e.g. D:4, AB:4x2, SG16_13)");
    sub->add_option("--budget-nodes", budget, "Node limit for enumeration and complement search");
    sub->add_flag("--verbose", c.verbose, "Stage timings and notes on stderr");
    if (!rows) return;
    sub->add_option("--max-order", c.max_order, "Only catalog rows up to this order");
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    sub->add_option("--complement-cap", c.complement_cap, "Stop after this many complements");
    sub->add_option("--threads", c.threads, "Rows computed in parallel")->check(CLI::PositiveNumber);
    sub->add_flag("--closed-form-check", c.closed_form_check,
                  "Cross-check cyclic and dihedral rows against closed forms");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for each --spec");
  add_common(analyze_cmd, true);
  analyze_cmd->get_option("--spec")->required();
  auto* table_cmd = app.add_subcommand("table", "Table over catalog rows or given specs");
  add_common(table_cmd, true);
  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog rows");
  auto* dump_cmd = app.add_subcommand("dump", "Print S∩R, Q, H members with conjugators");
  add_common(dump_cmd, false);
  dump_cmd->get_option("--spec")->required();
  auto* digraph_cmd = app.add_subcommand("digraph", "Normalization digraph of S∩R (Graphviz)");
  add_common(digraph_cmd, false);
  digraph_cmd->get_option("--spec")->required();

  CLI11_PARSE(app, argc, argv);
  if (budget) c.budget_nodes = budget;

  try {
    if (*analyze_cmd) return emit(run_rows(c.specs, c), c.format);
    if (*table_cmd) {
      auto specs = c.specs.empty() ? catalog_specs(c.max_order) : c.specs;
      if (!c.specs.empty() && c.max_order) {
        std::erase_if(specs, [&](const std::string& s) { return build_table(s).order() > c.max_order; });
      }
      return emit(run_rows(specs, c), c.format);
    }
    if (*catalog_cmd) {
      for (const auto& row : table_catalog())
        std::cout << row.spec << "\t" << row.display << "\t" << build_table(row.spec).order() << "\n";
      return 0;
    }
    if (*dump_cmd) {
      for (const auto& s : c.specs) dump(s, c);
      return 0;
    }
    if (*digraph_cmd) {
      for (const auto& s : c.specs) digraph(s, c);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
