#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhol/family.hpp"
#include "qhol/holomorph.hpp"
#include "qhol/regsets.hpp"

namespace qhol {

// adj[i][j]: members[i] normalizes members[j].
struct NormDigraph {
  std::size_t size = 0;
  std::vector<std::vector<bool>> adj;
};

NormDigraph norm_digraph(const ParamFamily& sr);

// Members normalized by every member of S∩R.  Throws InternalError if Q
// fails to be a clique or to contain H.
ParamFamily compute_Q(const NormDigraph& dg, const ParamFamily& sr, const ParamFamily& h);

// Same set, computed as: M (with conjugator b) is kept iff every N in S∩R
// satisfies b^-1 N b <= Hol(G), i.e. N <= Norm(M).
ParamFamily compute_Q_via_normalizers(const HolContext& hc, const ParamFamily& sr);

// Greedy extension of Q inside S∩R by members mutually normalizing with all
// chosen so far; returns the indices (into sr) if strictly larger than Q.
std::optional<std::vector<std::size_t>> larger_clique(const NormDigraph& dg,
                                                      const ParamFamily& sr,
                                                      const ParamFamily& q);

struct StructuralReport {
  bool h_divides_q = false;
  bool h_orbits_partition_q = false;   // classes {b H b^-1 : b rep of M} partition Q
  bool q_conjugation_invariant = false;  // b Q b^-1 == Q for each rep b
  bool proper_subset_checked = false;  // non-abelian with odd |S∩R|
  bool proper_subset_holds = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

StructuralReport structural_checks(const HolContext& hc, const ParamFamily& q,
                                   const ParamFamily& h, std::size_t sr_size);

// A union of left cosets reps[i] Hol(G).
struct CosetUnion {
  std::vector<Perm> reps;
  std::size_t hol_order = 0;
  bool closed = false;

  std::size_t order() const { return reps.size() * hol_order; }
};

enum class QholVerdict { group, not_closed, inconclusive };

struct QholResult {
  CosetUnion cu;
  QholVerdict verdict = QholVerdict::inconclusive;
  std::optional<ConjWitness> witness;
  bool orbit_is_q = false;      // orbit of lambda under <reps, Hol> equals Q
  bool order_verified = false;  // |<reps, Hol>| == |Q| |Hol| by closure
  // products rep_i h rep_j (h in Hol) checked to conjugate lambda into Q
  std::uint64_t products_checked = 0;
  bool products_exhaustive = false;
  std::string note;
};

struct QholOptions {
  // Products of two coset elements are checked for every triple
  // (rep_i, h, rep_j) when |QHol| is at most this, else by random sampling.
  std::uint64_t exhaustive_limit = 100'000;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 20240611;
};

QholResult build_qhol(const HolContext& hc, const ParamFamily& q, const QholOptions& opt = {});

// Left-loop table of a conj-closed family: a*b = c with
// reps[a] reps[b] lambda (..)^-1 == members[c].
struct LoopTable {
  std::size_t size = 0;
  std::vector<std::size_t> table;  // row-major

  std::size_t op(std::size_t a, std::size_t b) const { return table[a * size + b]; }
  bool rows_are_permutations() const;
  bool zero_is_right_identity() const;
  bool associative() const;
};

// Throws std::invalid_argument naming the witness pair if not conj-closed.
LoopTable loop_table(const RegularGroup& lambda, const ParamFamily& f);

struct PipelineCounts {
  std::size_t s = 0, sr = 0, q = 0, h = 0;
};
PipelineCounts count_families(const std::string& spec, const EnumOptions& opt = {});

struct CoprimeReport {
  std::string spec1, spec2;
  std::size_t q1 = 0, q2 = 0, q_product = 0;
  bool holds = false;
};
// |Q(G1 x G2)| against |Q(G1)| |Q(G2)|; requires coprime orders.
CoprimeReport coprime_product_check(const std::string& spec1, const std::string& spec2,
                                    const EnumOptions& opt = {});

}  // namespace qhol
