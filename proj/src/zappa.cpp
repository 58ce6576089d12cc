#include "qhol/zappa.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "qhol/errors.hpp"
#include "qhol/iso.hpp"
#include "qhol/quasi.hpp"
#include "qhol/regsets.hpp"

namespace qhol {

namespace {

using Action = std::vector<std::uint16_t>;

Action compose_action(const Action& a, const Action& b) {
  Action r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[b[j]];
  return r;
}

Action direct_action(const RegularGroup& lambda, const ParamFamily& f, const Perm& x) {
  Action a(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    std::size_t k = f.find(f.members[j].conjugate(x));
    if (k == f.size()) throw InternalError("element does not permute the family");
    a[j] = static_cast<std::uint16_t>(k);
  }
  (void)lambda;
  return a;
}

// Cycle length if the action is fixed-point-free with one cycle length, else 0.
std::size_t uniform_cycle_length(const Action& a) {
  std::size_t t = a.size();
  if (t == 1) return 1;
  std::vector<bool> seen(t, false);
  std::size_t len = 0;
  for (std::size_t s = 0; s < t; ++s) {
    if (seen[s]) continue;
    std::size_t l = 0;
    for (std::size_t x = s; !seen[x]; x = a[x]) {
      seen[x] = true;
      ++l;
    }
    if (l == 1) return 0;
    if (len == 0) len = l;
    else if (l != len) return 0;
  }
  return len;
}

struct Elem {
  Perm p;
  Action a;
};

class Searcher {
 public:
  Searcher(const HolContext& hc, const ParamFamily& f, const ComplementOptions& opt,
           ComplementSearch& out)
      : hc_(hc), f_(f), opt_(opt), out_(out), t_(f.size()) {}

  void run() {
    auto& st = out_.stats;
    const auto& lambda = hc_.ctx.lambda_reg;
    // Actions of Hol elements, built along the Cayley graph.
    const auto& hol = hc_.hol.elements();
    std::vector<Action> gen_act;
    for (const auto& g : hc_.hol_gens) gen_act.push_back(direct_action(lambda, f_, g));
    std::vector<Action> hol_act(hol.size());
    std::vector<bool> done(hol.size(), false);
    Perm id = Perm::identity(hc_.degree());
    std::size_t i0 = hc_.hol.index_of(id);
    Action ida(t_);
    std::iota(ida.begin(), ida.end(), 0);
    hol_act[i0] = ida;
    done[i0] = true;
    std::vector<std::size_t> queue{i0};
    for (std::size_t at = 0; at < queue.size(); ++at) {
      std::size_t e = queue[at];
      for (std::size_t g = 0; g < hc_.hol_gens.size(); ++g) {
        std::size_t y = hc_.hol.index_of(hc_.hol_gens[g] * hol[e]);
        if (!done[y]) {
          done[y] = true;
          hol_act[y] = compose_action(gen_act[g], hol_act[e]);
          queue.push_back(y);
        }
      }
    }
    if (queue.size() != hol.size()) throw InternalError("Hol generators do not reach Hol");

    cand_.assign(t_, {});
    st.candidates_per_coset.assign(t_, 0);
    for (std::size_t i = 1; i < t_; ++i) {
      Action ai = direct_action(lambda, f_, f_.reps[i]);
      for (std::size_t k = 0; k < hol.size(); ++k) {
        Action a = compose_action(ai, hol_act[k]);
        if (a[0] != i) throw InternalError("coset action disagrees with rep");
        std::size_t len = uniform_cycle_length(a);
        if (len == 0) continue;
        Perm x = f_.reps[i] * hol[k];
        if (!x.pow(static_cast<long long>(len)).is_identity()) continue;
        candidate_set_.insert(x);
        cand_[i].push_back({std::move(x), std::move(a)});
      }
      st.candidates_per_coset[i] = cand_[i].size();
    }
    st.candidates_per_coset[0] = 1;

    std::vector<std::size_t> order(t_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) {
      return cand_[a].size() < cand_[b].size();
    });
    st.coset_order = order;
    order_ = order;
    if (opt_.transcript) {
      transcript_ << "cosets " << t_ << "\norder";
      for (auto c : order) transcript_ << ' ' << c << ':' << cand_[c].size();
      transcript_ << '\n';
    }

    owner_.assign(t_, kNone);
    elems_.push_back({id, ida});
    owner_[0] = 0;
    bool empty_coset = false;
    for (std::size_t i = 1; i < t_; ++i) empty_coset |= cand_[i].empty();
    if (!empty_coset) dfs(1);
    else if (opt_.transcript) transcript_ << "coset without candidates\n";

    out_.exhaustive = !budget_hit_ && !capped_;
    if (!out_.complements.empty()) out_.verdict = ZsVerdict::zs;
    else if (!budget_hit_) out_.verdict = ZsVerdict::not_zs;
    else out_.verdict = ZsVerdict::inconclusive;
    if (opt_.transcript) {
      transcript_ << "nodes " << st.nodes << " collisions " << st.coset_collisions
                  << " non_candidates " << st.non_candidates << " found "
                  << out_.complements.size() << (out_.exhaustive ? " exhaustive" : " partial")
                  << '\n';
      out_.transcript = transcript_.str();
    }
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool add(const Elem& e) {
    std::size_t c = e.a[0];
    if (owner_[c] != kNone) {
      if (elems_[owner_[c]].p == e.p) return true;
      ++out_.stats.coset_collisions;
      return false;
    }
    if (!candidate_set_.contains(e.p)) {
      ++out_.stats.non_candidates;
      return false;
    }
    owner_[c] = elems_.size();
    elems_.push_back(e);
    return true;
  }

  // Extends the current subgroup by x; false (with the state rolled back) if
  // the closure meets a coset twice.
  bool extend(const Elem& x) {
    std::size_t base = elems_.size();
    gens_.push_back(x);
    bool ok = true;
    for (std::size_t at = 0; at < elems_.size() && ok; ++at) {
      if (at < base) {
        Elem y{elems_[at].p * x.p, compose_action(elems_[at].a, x.a)};
        ok = add(y);
      } else {
        for (const auto& g : gens_) {
          Elem y{elems_[at].p * g.p, compose_action(elems_[at].a, g.a)};
          if (!(ok = add(y))) break;
        }
      }
    }
    if (!ok) rollback(base);
    return ok;
  }

  void rollback(std::size_t base) {
    for (std::size_t k = base; k < elems_.size(); ++k) owner_[elems_[k].a[0]] = kNone;
    elems_.resize(base);
    gens_.pop_back();
  }

  void dfs(std::size_t pos) {
    while (pos < t_ && owner_[order_[pos]] != kNone) ++pos;
    if (pos == t_) {
      record();
      return;
    }
    std::size_t c = order_[pos];
    for (const auto& x : cand_[c]) {
      if (stop()) return;
      if (++out_.stats.nodes > opt_.max_nodes) {
        budget_hit_ = true;
        return;
      }
      std::size_t base = elems_.size();
      if (!extend(x)) continue;
      dfs(pos + 1);
      rollback(base);
    }
  }

  bool stop() const { return budget_hit_ || capped_; }

  void record() {
    if (elems_.size() != t_) throw InternalError("complement of wrong size");
    std::vector<Perm> el, gens;
    for (const auto& e : elems_) el.push_back(e.p);
    for (const auto& g : gens_) gens.push_back(g.p);
    out_.complements.push_back(PermGroup::from_elements_unchecked(std::move(el), std::move(gens)));
    if (out_.complements.size() >= opt_.max_count) capped_ = true;
  }

  const HolContext& hc_;
  const ParamFamily& f_;
  const ComplementOptions& opt_;
  ComplementSearch& out_;
  std::size_t t_;
  std::vector<std::vector<Elem>> cand_;
  std::unordered_set<Perm, PermHash> candidate_set_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> owner_;
  std::vector<Elem> elems_;
  std::vector<Elem> gens_;
  bool budget_hit_ = false;
  bool capped_ = false;
  std::ostringstream transcript_;
};

}  // namespace

ComplementSearch find_complements(const HolContext& hc, const ParamFamily& f,
                                  const ComplementOptions& opt) {
  if (auto w = conj_closed_check(hc.ctx.lambda_reg, f))
    throw std::invalid_argument("family is not conj-closed");
  ComplementSearch out;
  Searcher s(hc, f, opt, out);
  s.run();
  // each complement: trivial meet with Hol and regular orbit map onto f
  for (const auto& p : out.complements) {
    std::vector<bool> hit(f.size(), false);
    for (const auto& x : p.elements()) {
      std::size_t c = f.find(hc.ctx.lambda_reg.conjugate(x));
      if (c == f.size() || hit[c]) throw InternalError("complement does not parameterize the family");
      hit[c] = true;
    }
  }
  return out;
}

std::map<std::string, std::size_t> classify_complements(const std::vector<PermGroup>& cs) {
  std::map<std::string, std::size_t> out;
  for (const auto& p : cs) ++out[name_group(p)];
  return out;
}

bool contains_subgroup_isomorphic(const PermGroup& p, const PermGroup& m) {
  if (p.order() % m.order() != 0) return false;
  GroupTable mt = table_from_perm_group(m);
  std::size_t d = minimal_generating_set(mt).size();
  const auto& el = p.elements();
  std::vector<std::size_t> pick(d, 0);
  // tuples of elements of p, increasing indices
  auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> bool {
    if (depth == d) {
      std::vector<Perm> gens;
      for (auto i : pick) gens.push_back(el[i]);
      PermGroup s;
      try {
        s = PermGroup::generate(gens, p.degree(), m.order());
      } catch (const BudgetExceeded&) {
        return false;
      }
      if (s.order() != m.order()) return false;
      return find_isomorphism(table_from_perm_group(s), mt).has_value();
    }
    for (std::size_t i = from; i < el.size(); ++i) {
      if (m.order() % el[i].order() != 0) continue;
      pick[depth] = i;
      if (self(self, depth + 1, i + 1)) return true;
    }
    return false;
  };
  if (d == 0) return true;
  return rec(rec, 0, 0);
}

NholReport nhol_split(const HolContext& hc, const ParamFamily& h, const ComplementOptions& opt) {
  NholReport r;
  r.t_order = h.size();
  LoopTable lt = loop_table(hc.ctx.lambda_reg, h);
  bool sq = true;
  for (std::size_t a = 0; a < lt.size; ++a) sq &= lt.op(a, a) == 0;
  r.t_elementary_2 = lt.associative() && sq;
  r.t_klein4 = r.t_elementary_2 && r.t_order == 4;

  r.search = find_complements(hc, h, opt);
  if (r.search.verdict == ZsVerdict::zs)
    r.complement_name = name_group(r.search.complements.front());

  auto inv = select_inv_closed(hc, h);
  if (const auto* fam = std::get_if<ParamFamily>(&inv)) {
    const auto& sigma = *fam->sigma;
    for (std::size_t c = 1; c < fam->size(); ++c) {
      if (sigma[c] != c || lt.op(c, c) != 0) continue;
      bool has_inv = false;
      for (const auto& x : hc.hol.elements()) {
        Perm b = fam->reps[c] * x;
        if ((b * b).is_identity()) {
          has_inv = true;
          break;
        }
      }
      if (!has_inv) r.involution_free_fixed_cosets.push_back(c);
    }
  }
  return r;
}

}  // namespace qhol
