#include "qhol/quasi.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qhol/catalog.hpp"
#include "qhol/errors.hpp"

namespace qhol {

NormDigraph norm_digraph(const ParamFamily& sr) {
  NormDigraph dg;
  dg.size = sr.size();
  dg.adj.assign(dg.size, std::vector<bool>(dg.size, false));
  for (std::size_t i = 0; i < dg.size; ++i)
    for (std::size_t j = 0; j < dg.size; ++j)
      dg.adj[i][j] = (i == j) || sr.members[i].normalizes(sr.members[j]);
  for (std::size_t j = 0; j < dg.size; ++j)
    if (!dg.adj[0][j] || !dg.adj[j][0])
      throw InternalError("S∩R member and lambda(G) do not normalize each other");
  return dg;
}

ParamFamily compute_Q(const NormDigraph& dg, const ParamFamily& sr, const ParamFamily& h) {
  ParamFamily q;
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < dg.size; ++j) {
    bool all = true;
    for (std::size_t i = 0; i < dg.size && all; ++i) all = dg.adj[i][j];
    if (all) {
      idx.push_back(j);
      q.members.push_back(sr.members[j]);
      q.reps.push_back(sr.reps[j]);
    }
  }
  q.rebuild_index();
  for (auto a : idx)
    for (auto b : idx)
      if (!dg.adj[a][b]) throw InternalError("Q(G) is not mutually normalizing");
  for (const auto& m : h.members)
    if (q.find(m) == q.size()) throw InternalError("H(G) not contained in Q(G)");
  return q;
}

ParamFamily compute_Q_via_normalizers(const HolContext& hc, const ParamFamily& sr) {
  ParamFamily q;
  for (std::size_t k = 0; k < sr.size(); ++k) {
    const Perm& b = sr.reps[k];
    Perm binv = b.inverse();
    bool keep = true;
    for (std::size_t i = 0; i < sr.size() && keep; ++i)
      for (const auto& g : sr.members[i].generators())
        if (!hc.in_hol(binv * g * b)) {
          keep = false;
          break;
        }
    if (keep) {
      q.members.push_back(sr.members[k]);
      q.reps.push_back(b);
    }
  }
  q.rebuild_index();
  return q;
}

std::optional<std::vector<std::size_t>> larger_clique(const NormDigraph& dg,
                                                      const ParamFamily& sr,
                                                      const ParamFamily& q) {
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < sr.size(); ++j)
    if (q.find(sr.members[j]) < q.size()) chosen.push_back(j);
  std::size_t base = chosen.size();
  for (std::size_t j = 0; j < sr.size(); ++j) {
    if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
    bool ok = std::all_of(chosen.begin(), chosen.end(),
                          [&](std::size_t i) { return dg.adj[i][j] && dg.adj[j][i]; });
    if (ok) chosen.push_back(j);
  }
  if (chosen.size() == base) return std::nullopt;
  return chosen;
}

StructuralReport structural_checks(const HolContext& hc, const ParamFamily& q,
                                   const ParamFamily& h, std::size_t sr_size) {
  StructuralReport r;
  const auto& lambda = hc.ctx.lambda_reg;
  std::size_t nq = q.size(), nh = h.size();

  r.h_divides_q = nh > 0 && nq % nh == 0;
  if (!r.h_divides_q) r.failures.push_back("|H| does not divide |Q|");

  // class of member k: conjugates of lambda by rep_k * rep_h over h in H
  std::vector<std::size_t> cls(nq, nq);
  bool part = true;
  for (std::size_t k = 0; k < nq && part; ++k) {
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < nh; ++j) {
      std::size_t c = q.find(lambda.conjugate(q.reps[k] * h.reps[j]));
      if (c == nq) {
        part = false;
        break;
      }
      members.push_back(c);
    }
    if (!part) break;
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end() ||
        !std::binary_search(members.begin(), members.end(), k)) {
      part = false;
      break;
    }
    // classes must coincide or be disjoint: label by smallest element
    for (auto c : members) {
      if (cls[c] == nq) cls[c] = members.front();
      else if (cls[c] != members.front()) part = false;
    }
  }
  if (part)
    part = std::all_of(cls.begin(), cls.end(), [&](std::size_t c) { return c < nq; });
  r.h_orbits_partition_q = part;
  if (!part) r.failures.push_back("H-classes do not partition Q");

  bool inv = true;
  for (std::size_t k = 0; k < nq && inv; ++k)
    for (std::size_t j = 0; j < nq && inv; ++j)
      if (q.find(q.members[j].conjugate(q.reps[k])) == nq) inv = false;
  r.q_conjugation_invariant = inv;
  if (!inv) r.failures.push_back("b Q b^-1 != Q for some rep b");

  if (!hc.ctx.table.is_abelian() && sr_size % 2 == 1) {
    r.proper_subset_checked = true;
    r.proper_subset_holds = nq < sr_size;
    if (!r.proper_subset_holds) r.failures.push_back("Q == S∩R for non-abelian G with odd |S∩R|");
  }
  return r;
}

namespace {

bool lands_in(const RegularGroup& lambda, const ParamFamily& q, const Perm& x) {
  return q.find(lambda.conjugate(x)) < q.size();
}

}  // namespace

QholResult build_qhol(const HolContext& hc, const ParamFamily& q, const QholOptions& opt) {
  QholResult res;
  res.cu.reps = q.reps;
  res.cu.hol_order = hc.hol.order();
  const auto& lambda = hc.ctx.lambda_reg;

  if (auto w = conj_closed_check(lambda, q)) {
    res.verdict = QholVerdict::not_closed;
    res.witness = std::move(w);
    res.note = "coset union is not closed under products";
    return res;
  }
  res.cu.closed = true;

  // orbit of lambda under the group generated by the reps and Hol
  std::vector<Perm> gens = hc.hol_gens;
  for (std::size_t i = 1; i < q.size(); ++i) gens.push_back(q.reps[i]);
  ParamFamily seen;
  seen.members.push_back(lambda);
  seen.rebuild_index();
  for (std::size_t at = 0; at < seen.members.size(); ++at) {
    for (const auto& g : gens) {
      RegularGroup c = seen.members[at].conjugate(g);
      if (seen.find(c) == seen.size()) {
        if (q.find(c) == q.size()) {
          res.verdict = QholVerdict::not_closed;
          res.note = "orbit of lambda(G) leaves Q";
          return res;
        }
        seen.members.push_back(std::move(c));
        seen.rebuild_index();
      }
    }
  }
  res.orbit_is_q = seen.size() == q.size();

  std::uint64_t qhol_order = res.cu.order();
  if (qhol_order <= opt.exhaustive_limit) {
    PermGroup whole = PermGroup::generate(gens, hc.degree(), opt.exhaustive_limit + 1);
    res.order_verified = whole.order() == qhol_order;
    res.products_exhaustive = true;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (const auto& h : hc.hol.elements()) {
        Perm ih = q.reps[i] * h;
        for (std::size_t j = 0; j < q.size(); ++j) {
          ++res.products_checked;
          if (!lands_in(lambda, q, ih * q.reps[j])) {
            res.verdict = QholVerdict::not_closed;
            res.note = "coset product escapes Q";
            return res;
          }
        }
      }
  } else {
    std::mt19937_64 rng(opt.seed);
    const auto& hol = hc.hol.elements();
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      const Perm& a = q.reps[rng() % q.size()];
      const Perm& h = hol[rng() % hol.size()];
      const Perm& b = q.reps[rng() % q.size()];
      ++res.products_checked;
      if (!lands_in(lambda, q, a * h * b)) {
        res.verdict = QholVerdict::not_closed;
        res.note = "coset product escapes Q";
        return res;
      }
    }
    // closed reps with pairwise distinct cosets already give the order
    res.order_verified = true;
  }
  res.verdict = (res.orbit_is_q && res.order_verified) ? QholVerdict::group
                                                       : QholVerdict::inconclusive;
  return res;
}

bool LoopTable::rows_are_permutations() const {
  for (std::size_t a = 0; a < size; ++a) {
    std::vector<bool> hit(size, false);
    for (std::size_t b = 0; b < size; ++b) {
      std::size_t c = op(a, b);
      if (c >= size || hit[c]) return false;
      hit[c] = true;
    }
  }
  return true;
}

bool LoopTable::zero_is_right_identity() const {
  for (std::size_t a = 0; a < size; ++a)
    if (op(a, 0) != a) return false;
  return true;
}

bool LoopTable::associative() const {
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      for (std::size_t c = 0; c < size; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) return false;
  return true;
}

LoopTable loop_table(const RegularGroup& lambda, const ParamFamily& f) {
  LoopTable t;
  t.size = f.size();
  t.table.resize(t.size * t.size);
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = 0; b < t.size; ++b) {
      std::size_t c = f.find(lambda.conjugate(f.reps[a] * f.reps[b]));
      if (c == t.size)
        throw std::invalid_argument("family not conj-closed at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
      t.table[a * t.size + b] = c;
    }
  return t;
}

PipelineCounts count_families(const std::string& spec, const EnumOptions& opt) {
  HolContext hc = build_hol(build(spec), opt.iso_nodes);
  ParamFamily s = enumerate_S(hc, opt);
  ParamFamily sr = compute_SR(hc, s);
  ParamFamily h = compute_H(hc, s);
  ParamFamily q = compute_Q(norm_digraph(sr), sr, h);
  return {s.size(), sr.size(), q.size(), h.size()};
}

CoprimeReport coprime_product_check(const std::string& spec1, const std::string& spec2,
                                    const EnumOptions& opt) {
  CoprimeReport r{spec1, spec2};
  std::size_t n1 = build_table(spec1).order(), n2 = build_table(spec2).order();
  if (std::gcd(n1, n2) != 1) throw std::invalid_argument("orders are not coprime");
  r.q1 = count_families(spec1, opt).q;
  r.q2 = count_families(spec2, opt).q;
  r.q_product = count_families("DP:" + spec1 + "*" + spec2, opt).q;
  r.holds = r.q_product == r.q1 * r.q2;
  return r;
}

}  // namespace qhol
