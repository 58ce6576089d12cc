#include "qhol/holomorph.hpp"

#include "qhol/errors.hpp"

namespace qhol {

bool HolContext::in_hol(const Perm& p) const {
  if (p.degree() != degree()) return false;
  Perm a = ctx.lambda_of[p[0]].inverse() * p;
  return aut.contains(a);
}

HolContext build_hol(RegularContext ctx, std::uint64_t iso_nodes) {
  HolContext hc;
  hc.aut = automorphism_group(ctx, iso_nodes);
  std::size_t n = ctx.order();
  for (const auto& r : ctx.rho.generators()) hc.hol_gens.push_back(r);
  for (const auto& a : hc.aut.generators()) hc.hol_gens.push_back(a);
  hc.hol = PermGroup::generate(hc.hol_gens, n);
  hc.ctx = std::move(ctx);
  if (hc.hol.order() != n * hc.aut.order())
    throw InternalError("|Hol| != |G| |Aut(G)|");
  // lambda(G) A(G) has |G||A| elements (the factors meet trivially), so
  // lambda ⊆ Hol together with the count gives Hol = lambda A = rho A.
  for (const auto& l : hc.ctx.lambda.generators())
    if (!hc.hol.contains(l)) throw InternalError("lambda(G) not inside Hol");
  for (const auto& a : hc.aut.generators())
    if (a[0] != 0) throw InternalError("automorphism moves the identity point");
  return hc;
}

Perm conjugator(const RegularGroup& src, const RegularGroup& dst,
                const std::vector<std::size_t>& iso_points) {
  // beta(x) = iso(s_x)(0) where s_x(0) = x
  std::vector<std::size_t> img(src.degree());
  for (std::size_t x = 0; x < src.degree(); ++x) img[x] = dst.at(iso_points[x])[0];
  Perm beta = Perm::from_images(std::span<const std::size_t>(img));
  for (const auto& g : src.generators())
    if (!dst.contains(beta.conj(g))) throw InternalError("conjugator does not map src onto dst");
  return beta;
}

ParamFamily compute_H(const HolContext& hc, const ParamFamily& s) {
  ParamFamily out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool normal = true;
    for (const auto& h : hc.hol_gens)
      if (!s.members[i].normalized_by(h)) {
        normal = false;
        break;
      }
    if (normal) {
      out.members.push_back(s.members[i]);
      out.reps.push_back(s.reps[i]);
    }
  }
  out.rebuild_index();
  return out;
}

bool cosets_closed(const ParamFamily& f, const RegularGroup& lambda) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f.find(lambda.conjugate(f.reps[i] * f.reps[j])) == f.size()) return false;
  return true;
}

}  // namespace qhol
