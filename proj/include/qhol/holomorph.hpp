#pragma once

#include <vector>

#include "qhol/catalog.hpp"
#include "qhol/family.hpp"
#include "qhol/iso.hpp"
#include "qhol/perm_group.hpp"

namespace qhol {

struct HolContext {
  RegularContext ctx;
  PermGroup aut;                // A(G), the identity-point stabilizer in Hol
  PermGroup hol;                // generate(rho(G) ∪ A(G))
  std::vector<Perm> hol_gens;

  std::size_t degree() const noexcept { return ctx.order(); }
  // Every element of Hol is uniquely lambda(g) a with a in A(G).
  bool in_hol(const Perm& p) const;
};

HolContext build_hol(RegularContext ctx, std::uint64_t iso_nodes = kDefaultIsoNodes);

// beta with beta src beta^-1 == dst, where iso_points[x] = y means the
// isomorphism sends src.at(x) to dst.at(y).  Throws InternalError if the
// resulting beta does not conjugate src onto dst.
Perm conjugator(const RegularGroup& src, const RegularGroup& dst,
                const std::vector<std::size_t>& iso_points);

// Members of s that are normal in Hol(G).  Normal + regular + same order as
// lambda(G) forces the full normalizer to be Hol(G), since Hol(G) is the full
// normalizer of a conjugate of lambda(G) and the two normalizers are
// conjugate of equal order.
ParamFamily compute_H(const HolContext& hc, const ParamFamily& s);

// Whether the reps' induced product on H-conjugates closes up: for all i,j
// some k has reps[i] reps[j] lambda (..)^-1 == members[k].
bool cosets_closed(const ParamFamily& f, const RegularGroup& lambda);

}  // namespace qhol
