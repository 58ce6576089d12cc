#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qhol/family.hpp"
#include "qhol/holomorph.hpp"

namespace qhol {

struct EnumOptions {
  std::uint64_t max_nodes = 2'000'000'000;
  std::uint64_t iso_nodes = kDefaultIsoNodes;
};

struct EnumStats {
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;       // after order/semiregularity filtering
  std::uint64_t commute_prunes = 0;
  std::uint64_t closure_fails = 0;    // closure not semiregular
  std::uint64_t divisor_prunes = 0;
  std::uint64_t histogram_prunes = 0;
  std::uint64_t regular_found = 0;
  std::uint64_t iso_rejects = 0;
};

// All regular subgroups of Hol(G) isomorphic to G, lambda(G) first, the rest
// in canonical order, each with a conjugator from lambda(G).
//
// Depth-first over partial semiregular subgroups H <= Hol: at each node the
// smallest point p outside H's orbit of 0 must be reached by the unique
// element of N sending 0 to p, so the branch is over elements lambda(p) a
// (a in A(G)) whose cycles all have one length lying in G's order spectrum.
// Each N is reached along exactly one path.
ParamFamily enumerate_S(const HolContext& hc, const EnumOptions& opt = {},
                        EnumStats* stats = nullptr);

// Members of S normalized by lambda(G).
ParamFamily compute_SR(const HolContext& hc, const ParamFamily& s);

// beta_i^-1 lambda beta_i for each rep; each is checked to be normalized by lambda.
std::vector<RegularGroup> phi_images(const HolContext& hc, const ParamFamily& f);

// R(G): Hol-conjugates of the phi images of s (s must be all of S(G)).
std::vector<RegularGroup> compute_R(const HolContext& hc, const ParamFamily& s);

struct ReflectionReport {
  std::size_t s_count = 0;
  std::size_t r_count = 0;         // Hol-conjugates of the phi images
  bool all_normalized_by_lambda = false;
  bool all_regular = false;
};
// R(G) realised as the Hol-conjugacy closure of phi(S); compared to |S|.
ReflectionReport reflection_check(const HolContext& hc, const ParamFamily& s);

struct NotInvClosed {
  std::size_t index;  // rep whose phi image has no Hol-conjugate among members
};
// Re-chooses reps inside their Hol cosets so phi maps the family onto itself.
std::variant<ParamFamily, NotInvClosed> select_inv_closed(const HolContext& hc,
                                                          const ParamFamily& f);

struct ConjWitness {
  std::size_t i;
  std::size_t j;
  Perm product;            // reps[i] * reps[j]
  RegularGroup escaping;   // product lambda product^-1, not a member
};
std::optional<ConjWitness> conj_closed_check(const HolContext& hc, const ParamFamily& f);
std::optional<ConjWitness> conj_closed_check(const RegularGroup& lambda, const ParamFamily& f);

}  // namespace qhol
