#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhol/family.hpp"
#include "qhol/holomorph.hpp"
#include "qhol/perm_group.hpp"

namespace qhol {

enum class ZsVerdict { zs, not_zs, inconclusive };

struct ComplementOptions {
  std::size_t max_count = 10'000;
  std::uint64_t max_nodes = 100'000'000;
  bool transcript = false;
};

struct ComplementStats {
  std::uint64_t nodes = 0;            // closure attempts
  std::uint64_t coset_collisions = 0; // two elements of one coset
  std::uint64_t non_candidates = 0;   // element acting non-semiregularly on the family
  std::vector<std::size_t> coset_order;
  std::vector<std::size_t> candidates_per_coset;  // indexed by coset
};

struct ComplementSearch {
  std::vector<PermGroup> complements;
  ZsVerdict verdict = ZsVerdict::inconclusive;
  bool exhaustive = false;  // every branch visited (count not capped)
  ComplementStats stats;
  std::string transcript;
};

// Subgroups P of the coset union  U reps[i] Hol  meeting every coset exactly
// once.  f must be conj-closed.  Each P is found along exactly one search path.
//
// An element of such a P acts on the family by conjugation; P acts regularly,
// so only elements whose action has no fixed point and a single cycle length
// L, with x^L == 1, can occur.  Cosets are visited fewest candidates first.
ComplementSearch find_complements(const HolContext& hc, const ParamFamily& f,
                                  const ComplementOptions& opt = {});

// Isomorphism-class names with multiplicities, in name order.
std::map<std::string, std::size_t> classify_complements(const std::vector<PermGroup>& cs);

// Whether some subgroup of p is isomorphic to m.
bool contains_subgroup_isomorphic(const PermGroup& p, const PermGroup& m);

struct NholReport {
  std::size_t t_order = 0;  // |H(G)| = |NHol : Hol|
  bool t_elementary_2 = false;  // coset loop is associative with x*x == 0 throughout
  bool t_klein4 = false;
  ComplementSearch search;      // complements to Hol in NHol
  std::optional<std::string> complement_name;
  // nontrivial cosets c with b^2 in Hol for its rep b, fixed by the reflection
  // map, and containing no involution
  std::vector<std::size_t> involution_free_fixed_cosets;
};

// h must be H(G) as returned by compute_H.
NholReport nhol_split(const HolContext& hc, const ParamFamily& h,
                      const ComplementOptions& opt = {});

}  // namespace qhol
