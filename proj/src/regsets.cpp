#include "qhol/regsets.hpp"

#include <algorithm>
#include <numeric>

#include "qhol/errors.hpp"

namespace qhol {

namespace {

// Length of the common cycle length if every cycle of p has the same
// length, else 0.
std::size_t uniform_cycle_length(const Perm& p) {
  std::size_t d = p.degree();
  std::size_t len0 = 0;
  std::uint64_t seen = 0;
  for (std::size_t x = 0; x < d; ++x) {
    if (seen >> x & 1u) continue;
    std::size_t len = 0, y = x;
    do {
      seen |= std::uint64_t{1} << y;
      y = p[y];
      ++len;
    } while (y != x);
    if (len0 == 0)
      len0 = len;
    else if (len != len0)
      return 0;
  }
  return len0;
}

GroupTable table_of(const RegularGroup& g) {
  std::size_t n = g.degree();
  std::vector<std::uint8_t> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a + 1);
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = g.at(a)[b];
  }
  std::vector<std::size_t> gens;
  for (const auto& s : g.generators()) gens.push_back(s[0]);
  return GroupTable::from_mul(n, std::move(mul), std::move(labels), std::move(gens));
}

struct Partial {
  std::vector<int> at;        // point -> index into elems, -1 if not reached
  std::vector<Perm> elems;
  std::vector<Perm> gens;
};

class SEnumerator {
 public:
  SEnumerator(const HolContext& hc, const EnumOptions& opt, EnumStats& st)
      : hc_(hc), opt_(opt), st_(st), n_(hc.degree()), matcher_(hc.ctx.table) {
    const GroupTable& t = hc.ctx.table;
    hist_.assign(n_ + 1, 0);
    for (std::size_t a = 0; a < n_; ++a) hist_[t.element_order(a)]++;
    abelian_ = t.is_abelian();
    cands_.resize(n_);
    for (std::size_t p = 1; p < n_; ++p) {
      for (const auto& a : hc.aut.elements()) {
        Perm c = hc.ctx.lambda_of[p] * a;
        std::size_t len = uniform_cycle_length(c);
        if (len == 0 || hist_[len] == 0) continue;
        cands_[p].push_back(c);
      }
      st_.candidates += cands_[p].size();
    }
  }

  ParamFamily run() {
    Partial root;
    root.at.assign(n_, -1);
    root.at[0] = 0;
    root.elems.push_back(Perm::identity(n_));
    dfs(root);
    // lambda first, rest canonical
    std::vector<std::size_t> order(found_.size());
    std::iota(order.begin(), order.end(), 0);
    const RegularGroup& lam = hc_.ctx.lambda_reg;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      bool la = found_[a].first == lam, lb = found_[b].first == lam;
      if (la != lb) return la;
      return found_[a].first < found_[b].first;
    });
    ParamFamily out;
    for (auto i : order) {
      out.members.push_back(std::move(found_[i].first));
      out.reps.push_back(found_[i].second);
    }
    if (out.members.empty() || !(out.members[0] == lam))
      throw InternalError("lambda(G) missing from S(G)");
    out.rebuild_index();
    return out;
  }

 private:
  void dfs(const Partial& h) {
    if (h.elems.size() == n_) {
      leaf(h);
      return;
    }
    std::size_t p = 0;
    while (h.at[p] >= 0) ++p;
    for (const auto& c : cands_[p]) {
      if (++st_.nodes > opt_.max_nodes)
        throw BudgetExceeded("S(G) enumeration exceeded node budget", found_.size());
      if (abelian_) {
        bool commutes = true;
        for (const auto& g : h.gens)
          if (g * c != c * g) {
            commutes = false;
            break;
          }
        if (!commutes) {
          st_.commute_prunes++;
          continue;
        }
      }
      Partial next;
      if (!extend(h, c, next)) continue;
      dfs(next);
    }
  }

  bool extend(const Partial& h, const Perm& c, Partial& out) {
    out.at = h.at;
    out.elems = h.elems;
    out.gens = h.gens;
    out.gens.push_back(c);
    for (std::size_t head = 0; head < out.elems.size(); ++head) {
      for (const auto& g : out.gens) {
        Perm f = g * out.elems[head];
        int& slot = out.at[f[0]];
        if (slot < 0) {
          slot = static_cast<int>(out.elems.size());
          out.elems.push_back(f);
        } else if (out.elems[static_cast<std::size_t>(slot)] != f) {
          st_.closure_fails++;
          return false;
        }
      }
    }
    if (n_ % out.elems.size() != 0) {
      st_.divisor_prunes++;
      return false;
    }
    std::vector<std::size_t> hist(n_ + 1, 0);
    for (const auto& e : out.elems) {
      std::size_t k = uniform_cycle_length(e);
      if (k == 0 || ++hist[k] > hist_[k]) {
        st_.histogram_prunes++;
        return false;
      }
    }
    return true;
  }

  void leaf(const Partial& h) {
    st_.regular_found++;
    std::vector<Perm> by(n_);
    for (std::size_t x = 0; x < n_; ++x) by[x] = h.elems[static_cast<std::size_t>(h.at[x])];
    RegularGroup N = RegularGroup::from_by_point(std::move(by));
    auto iso = matcher_.find(table_of(N), opt_.iso_nodes);
    if (!iso) {
      st_.iso_rejects++;
      return;
    }
    Perm beta = conjugator(hc_.ctx.lambda_reg, N, *iso);
    found_.emplace_back(std::move(N), beta);
  }

  const HolContext& hc_;
  const EnumOptions& opt_;
  EnumStats& st_;
  std::size_t n_;
  IsoMatcher matcher_;
  std::vector<std::size_t> hist_;
  bool abelian_ = false;
  std::vector<std::vector<Perm>> cands_;
  std::vector<std::pair<RegularGroup, Perm>> found_;
};

struct OrbitEntry {
  RegularGroup group;
  Perm transversal;  // transversal * start * transversal^-1 == group
};

// Orbit of a regular subgroup under conjugation by Hol(G).
std::vector<OrbitEntry> hol_orbit(const HolContext& hc, const RegularGroup& start) {
  std::vector<OrbitEntry> orbit{{start, Perm::identity(hc.degree())}};
  std::unordered_multimap<std::uint64_t, std::size_t> seen{{start.key(), 0}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& h : hc.hol_gens) {
      RegularGroup g = orbit[head].group.conjugate(h);
      auto [lo, hi] = seen.equal_range(g.key());
      bool dup = false;
      for (auto it = lo; it != hi && !dup; ++it) dup = orbit[it->second].group == g;
      if (dup) continue;
      seen.emplace(g.key(), orbit.size());
      Perm t = h * orbit[head].transversal;
      orbit.push_back({std::move(g), t});
    }
  }
  return orbit;
}

}  // namespace

ParamFamily enumerate_S(const HolContext& hc, const EnumOptions& opt, EnumStats* stats) {
  EnumStats local;
  EnumStats& st = stats ? *stats : local;
  SEnumerator e(hc, opt, st);
  return e.run();
}

ParamFamily compute_SR(const HolContext& hc, const ParamFamily& s) {
  ParamFamily out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool ok = true;
    for (const auto& l : hc.ctx.lambda.generators())
      if (!s.members[i].normalized_by(l)) {
        ok = false;
        break;
      }
    if (ok) {
      out.members.push_back(s.members[i]);
      out.reps.push_back(s.reps[i]);
    }
  }
  out.rebuild_index();
  return out;
}

std::vector<RegularGroup> phi_images(const HolContext& hc, const ParamFamily& f) {
  std::vector<RegularGroup> out;
  out.reserve(f.size());
  for (const auto& b : f.reps) {
    RegularGroup m = hc.ctx.lambda_reg.conjugate(b.inverse());
    for (const auto& l : hc.ctx.lambda.generators())
      if (!m.normalized_by(l)) throw InternalError("phi image not normalized by lambda(G)");
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<RegularGroup> compute_R(const HolContext& hc, const ParamFamily& s) {
  std::vector<RegularGroup> all;
  std::unordered_multimap<std::uint64_t, std::size_t> seen;
  auto add = [&](const RegularGroup& g) {
    auto [lo, hi] = seen.equal_range(g.key());
    for (auto it = lo; it != hi; ++it)
      if (all[it->second] == g) return;
    seen.emplace(g.key(), all.size());
    all.push_back(g);
  };
  for (const auto& m : phi_images(hc, s))
    for (const auto& e : hol_orbit(hc, m)) add(e.group);
  return all;
}

ReflectionReport reflection_check(const HolContext& hc, const ParamFamily& s) {
  ReflectionReport rep;
  rep.s_count = s.size();
  std::vector<RegularGroup> all = compute_R(hc, s);
  rep.r_count = all.size();
  rep.all_normalized_by_lambda = true;
  rep.all_regular = true;
  for (const auto& g : all) {
    for (const auto& l : hc.ctx.lambda.generators())
      rep.all_normalized_by_lambda = rep.all_normalized_by_lambda && g.normalized_by(l);
    rep.all_regular = rep.all_regular && is_regular(g.to_perm_group());
  }
  return rep;
}

std::variant<ParamFamily, NotInvClosed> select_inv_closed(const HolContext& hc,
                                                          const ParamFamily& f) {
  std::size_t t = f.size();
  // options[i] = (j, x) with x in Hol and (reps[i] x)^-1 lambda (reps[i] x) == members[j]
  std::vector<std::vector<std::pair<std::size_t, Perm>>> options(t);
  for (std::size_t i = 0; i < t; ++i) {
    RegularGroup m = hc.ctx.lambda_reg.conjugate(f.reps[i].inverse());
    for (auto& e : hol_orbit(hc, m)) {
      std::size_t j = f.find(e.group);
      if (j < t) options[i].emplace_back(j, e.transversal.inverse());
    }
    if (options[i].empty()) return NotInvClosed{i};
  }
  // Kuhn's augmenting paths: rows i, columns j.
  std::vector<std::size_t> match_col(t, t);  // column -> row
  std::vector<std::size_t> match_opt(t, 0);  // row -> option index
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<bool> visited(t, false);
    auto augment = [&](auto&& self, std::size_t row) -> bool {
      for (std::size_t k = 0; k < options[row].size(); ++k) {
        std::size_t col = options[row][k].first;
        if (visited[col]) continue;
        visited[col] = true;
        if (match_col[col] == t || self(self, match_col[col])) {
          match_col[col] = row;
          match_opt[row] = k;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, i)) return NotInvClosed{i};
  }
  ParamFamily out;
  out.members = f.members;
  std::vector<std::size_t> sigma(t);
  for (std::size_t i = 0; i < t; ++i) {
    const auto& [j, x] = options[i][match_opt[i]];
    out.reps.push_back(f.reps[i] * x);
    sigma[i] = j;
  }
  out.rebuild_index();
  for (std::size_t i = 0; i < t; ++i) {
    if (!(hc.ctx.lambda_reg.conjugate(out.reps[i]) == out.members[i]))
      throw InternalError("rep moved out of its coset");
    if (!(hc.ctx.lambda_reg.conjugate(out.reps[i].inverse()) == out.members[sigma[i]]))
      throw InternalError("sigma does not describe the phi image");
  }
  out.sigma = std::move(sigma);
  return out;
}

std::optional<ConjWitness> conj_closed_check(const RegularGroup& lambda, const ParamFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) {
      Perm b = f.reps[i] * f.reps[j];
      RegularGroup g = lambda.conjugate(b);
      if (f.find(g) == f.size()) return ConjWitness{i, j, b, std::move(g)};
    }
  return std::nullopt;
}

std::optional<ConjWitness> conj_closed_check(const HolContext& hc, const ParamFamily& f) {
  return conj_closed_check(hc.ctx.lambda_reg, f);
}

}  // namespace qhol
