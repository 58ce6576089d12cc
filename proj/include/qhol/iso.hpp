#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhol/catalog.hpp"
#include "qhol/group_table.hpp"
#include "qhol/perm_group.hpp"

namespace qhol {

inline constexpr std::uint64_t kDefaultIsoNodes = 10'000'000;
inline constexpr std::size_t kNamingCap = 128;

struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t exponent = 1;
  std::vector<std::size_t> order_hist;  // order_hist[k] = #elements of order k
  std::size_t center = 0;
  std::size_t derived = 0;
  std::size_t involutions = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::uint64_t hash() const;
};

Fingerprint fingerprint(const GroupTable& g);

// Greedy: repeatedly add the element that enlarges the generated subgroup most.
std::vector<std::size_t> minimal_generating_set(const GroupTable& g);

// Backtracking over images of a generating set of the source group,
// pruned by element order and centralizer size.  Reusable against many
// targets.  Exceeding the node budget throws BudgetExceeded.
class IsoMatcher {
 public:
  explicit IsoMatcher(const GroupTable& src);

  const GroupTable& source() const noexcept { return src_; }
  const Fingerprint& source_fingerprint() const noexcept { return fp_; }

  std::optional<std::vector<std::size_t>> find(const GroupTable& dst,
                                               std::uint64_t max_nodes = kDefaultIsoNodes) const;
  std::vector<std::vector<std::size_t>> all(const GroupTable& dst,
                                            std::uint64_t max_nodes = kDefaultIsoNodes) const;

 private:
  bool search(const GroupTable& dst, std::uint64_t max_nodes, bool want_all,
              std::vector<std::vector<std::size_t>>& out) const;

  GroupTable src_;
  Fingerprint fp_;
  std::vector<std::size_t> gens_;
  std::vector<std::pair<std::size_t, std::size_t>> gen_inv_;  // (order, |C(g)|)
};

std::optional<std::vector<std::size_t>> find_isomorphism(
    const GroupTable& a, const GroupTable& b, std::uint64_t max_nodes = kDefaultIsoNodes);

// Map between element lists of two permutation groups (by sorted index).
std::optional<std::vector<std::size_t>> isomorphic(
    const PermGroup& a, const PermGroup& b, std::uint64_t max_nodes = kDefaultIsoNodes);

std::vector<std::vector<std::size_t>> automorphisms(
    const GroupTable& g, std::uint64_t max_nodes = kDefaultIsoNodes);

// A(G): automorphisms as point permutations fixing point 0.
PermGroup automorphism_group(const RegularContext& ctx,
                             std::uint64_t max_nodes = kDefaultIsoNodes);

// Display name from the naming pool, or "order-k, fingerprint h".
std::string name_table(const GroupTable& g);
std::string name_group(const PermGroup& g);

}  // namespace qhol
