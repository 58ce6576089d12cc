#include "qhol/report.hpp"

#include <chrono>
#include <exception>
#include <sstream>

#include <json.hpp>

#include "qhol/catalog.hpp"
#include "qhol/errors.hpp"
#include "qhol/forms.hpp"
#include "qhol/iso.hpp"
#include "qhol/quasi.hpp"
#include "qhol/zappa.hpp"

namespace qhol {

namespace {

using Clock = std::chrono::steady_clock;

std::string display_for(const std::string& spec, const GroupTable& t) {
  for (const auto& row : table_catalog())
    if (row.spec == spec) return row.display;
  return name_table(t);
}

const char* to_string(QholVerdict v) {
  switch (v) {
    case QholVerdict::group: return "group";
    case QholVerdict::not_closed: return "not-closed";
    default: return "inconclusive";
  }
}

const char* to_string(ZsVerdict v) {
  switch (v) {
    case ZsVerdict::zs: return "ZS";
    case ZsVerdict::not_zs: return "not-ZS";
    default: return "inconclusive";
  }
}

// p^k == n with p prime and k >= 2, else nullopt.
std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::int64_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (n == 1 && k >= 2) return std::pair{p, k};
    return std::nullopt;
  }
  return std::nullopt;
}

void closed_forms(const std::string& spec, GroupReport& r) {
  std::optional<CheckReport> rep;
  auto merge = [&](CheckReport c) {
    if (!rep) {
      rep = std::move(c);
      return;
    }
    rep->checks += c.checks;
    rep->failures.insert(rep->failures.end(), c.failures.begin(), c.failures.end());
    rep->flags.insert(rep->flags.end(), c.flags.begin(), c.flags.end());
  };
  if (spec.rfind("C:", 0) == 0) {
    auto pk = prime_power(std::stoll(spec.substr(2)));
    if (!pk || r.order > 64) return;
    merge(cyclic_lemma_suite(pk->first, pk->second));
    merge(cyclic_pipeline_check(pk->first, pk->second));
    merge(beta_parameterization_check(pk->first, pk->second));
  } else if (spec.rfind("D:", 0) == 0) {
    std::int64_t n = std::stoll(spec.substr(2));
    if (n < 3 || 2 * n > 64) return;
    merge(dihedral_suite(n));
  }
  if (!rep) return;
  r.closed_form_ok = rep->ok();
  r.closed_form_flags = rep->flags;
  for (const auto& f : rep->failures) r.notes.push_back("closed form: " + f);
}

}  // namespace

GroupReport analyze(const std::string& spec, const AnalyzeOptions& opt) {
  GroupReport r;
  r.spec = spec;
  auto t0 = Clock::now();
  auto lap = [&](const char* stage) {
    auto t1 = Clock::now();
    if (opt.timings) r.timings_ms[stage] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    t0 = t1;
  };

  try {
    RegularContext ctx = build(spec);
    r.order = ctx.order();
    r.display = display_for(spec, ctx.table);
    HolContext hc = build_hol(std::move(ctx));
    lap("holomorph");

    EnumOptions eo;
    if (opt.budget_nodes) eo.max_nodes = *opt.budget_nodes;
    ParamFamily s = enumerate_S(hc, eo);
    r.s = s.size();
    lap("enumerate");

    ParamFamily sr = compute_SR(hc, s);
    ParamFamily h = compute_H(hc, s);
    ParamFamily q = compute_Q(norm_digraph(sr), sr, h);
    r.sr = sr.size();
    r.h = h.size();
    r.q = q.size();
    StructuralReport st = structural_checks(hc, q, h, sr.size());
    r.structural_ok = st.ok();
    for (const auto& f : st.failures) r.notes.push_back("structure: " + f);
    lap("families");

    QholResult qr = build_qhol(hc, q);
    r.qhol_verdict = to_string(qr.verdict);
    if (!qr.note.empty()) r.notes.push_back(qr.note);
    if (!qr.products_exhaustive)
      r.notes.push_back("QHol products sampled: " + std::to_string(qr.products_checked));
    lap("qhol");

    ComplementOptions co;
    co.max_count = opt.complement_cap;
    if (opt.budget_nodes) co.max_nodes = *opt.budget_nodes;

    std::vector<PermGroup> complements;
    if (qr.verdict == QholVerdict::group) {
      ParamFamily f;
      for (const auto& b : qr.cu.reps) {
        f.members.push_back(hc.ctx.lambda_reg.conjugate(b));
        f.reps.push_back(b);
      }
      f.rebuild_index();
      ComplementSearch cs = find_complements(hc, f, co);
      r.zs_verdict = to_string(cs.verdict);
      r.complement_count = cs.complements.size();
      r.complements_exhaustive = cs.exhaustive;
      r.complement_classes = classify_complements(cs.complements);
      if (!cs.exhaustive)
        r.notes.push_back("complement search stopped after " + std::to_string(cs.stats.nodes) +
                          " nodes with " + std::to_string(cs.complements.size()) + " found");
      complements = std::move(cs.complements);
    }
    lap("complements");

    NholReport nh = nhol_split(hc, h, co);
    r.t_order = nh.t_order;
    r.nhol_split = nh.search.verdict == ZsVerdict::zs       ? "split"
                   : nh.search.verdict == ZsVerdict::not_zs ? "not-split"
                                                            : "inconclusive";
    r.nhol_complement = nh.complement_name;
    if (nh.search.verdict == ZsVerdict::zs && !complements.empty()) {
      const PermGroup& m = nh.search.complements.front();
      bool found = false;
      for (const auto& p : complements)
        if ((found = contains_subgroup_isomorphic(p, m))) break;
      r.tandq = found;
    }
    lap("nhol");

    if (opt.closed_form_check) {
      closed_forms(spec, r);
      lap("closed-form");
    }
  } catch (const BudgetExceeded& e) {
    r.error = std::string("budget exceeded: ") + e.what();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::string class_cell(const GroupReport& r) {
  if (r.zs_verdict == "not-ZS") return "not-ZS";
  if (r.zs_verdict != "ZS") return "inconclusive";
  std::string out;
  for (const auto& [name, count] : r.complement_classes) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

// ---- serialization

namespace {

using nlohmann::json;

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json to_json(const GroupReport& r) {
  json j;
  j["spec"] = r.spec;
  j["display"] = r.display;
  j["order"] = r.order;
  j["s"] = opt_json(r.s);
  j["sr"] = opt_json(r.sr);
  j["q"] = opt_json(r.q);
  j["h"] = opt_json(r.h);
  j["qhol_verdict"] = r.qhol_verdict;
  j["zs_verdict"] = r.zs_verdict;
  j["complement_classes"] = r.complement_classes;
  j["complement_count"] = r.complement_count;
  j["complements_exhaustive"] = r.complements_exhaustive;
  j["t_order"] = opt_json(r.t_order);
  j["nhol_split"] = r.nhol_split;
  j["nhol_complement"] = opt_json(r.nhol_complement);
  j["tandq"] = opt_json(r.tandq);
  j["structural_ok"] = opt_json(r.structural_ok);
  j["closed_form_ok"] = opt_json(r.closed_form_ok);
  j["closed_form_flags"] = r.closed_form_flags;
  j["notes"] = r.notes;
  j["error"] = opt_json(r.error);
  if (!r.timings_ms.empty()) j["timings_ms"] = r.timings_ms;
  return j;
}

GroupReport from_json(const json& j) {
  GroupReport r;
  r.spec = j.at("spec").get<std::string>();
  r.display = j.at("display").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.s = opt_from<std::size_t>(j, "s");
  r.sr = opt_from<std::size_t>(j, "sr");
  r.q = opt_from<std::size_t>(j, "q");
  r.h = opt_from<std::size_t>(j, "h");
  r.qhol_verdict = j.at("qhol_verdict").get<std::string>();
  r.zs_verdict = j.at("zs_verdict").get<std::string>();
  r.complement_classes = j.at("complement_classes").get<std::map<std::string, std::size_t>>();
  r.complement_count = j.at("complement_count").get<std::size_t>();
  r.complements_exhaustive = j.at("complements_exhaustive").get<bool>();
  r.t_order = opt_from<std::size_t>(j, "t_order");
  r.nhol_split = j.at("nhol_split").get<std::string>();
  r.nhol_complement = opt_from<std::string>(j, "nhol_complement");
  r.tandq = opt_from<bool>(j, "tandq");
  r.structural_ok = opt_from<bool>(j, "structural_ok");
  r.closed_form_ok = opt_from<bool>(j, "closed_form_ok");
  r.closed_form_flags = j.at("closed_form_flags").get<std::vector<std::string>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.error = opt_from<std::string>(j, "error");
  if (j.contains("timings_ms")) r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  return r;
}

std::string num(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "?"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_json(const std::vector<GroupReport>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return json{{"rows", arr}}.dump(2) + "\n";
}

std::vector<GroupReport> parse_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<GroupReport> out;
  for (const auto& row : j.at("rows")) out.push_back(from_json(row));
  return out;
}

std::string render_markdown(const std::vector<GroupReport>& rows) {
  std::ostringstream os;
  os << "| G | spec | order | S∩R | Q | H | π(Q) | QHol | NHol |\n";
  os << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    if (r.error) {
      os << "| " << r.display << " | " << r.spec << " | " << r.order << " | ERROR: " << *r.error
         << " | | | | | |\n";
      continue;
    }
    os << "| " << r.display << " | " << r.spec << " | " << r.order << " | " << num(r.sr) << " | "
       << num(r.q) << " | " << num(r.h) << " | " << class_cell(r) << " | " << r.qhol_verdict
       << " | " << r.nhol_split;
    if (r.nhol_complement) os << " (" << *r.nhol_complement << ")";
    os << " |\n";
  }
  return os.str();
}

std::string render_csv(const std::vector<GroupReport>& rows) {
  std::ostringstream os;
  os << "display,spec,order,sr,q,h,pi_q,qhol,zs,nhol,error\n";
  for (const auto& r : rows) {
    os << csv_field(r.display) << ',' << csv_field(r.spec) << ',' << r.order << ',' << num(r.sr)
       << ',' << num(r.q) << ',' << num(r.h) << ',' << csv_field(class_cell(r)) << ','
       << r.qhol_verdict << ',' << r.zs_verdict << ',' << r.nhol_split << ','
       << csv_field(r.error.value_or("")) << '\n';
  }
  return os.str();
}

}  // namespace qhol
