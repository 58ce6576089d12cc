#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "qhol/perm.hpp"
#include "qhol/regular.hpp"

namespace qhol {

// Regular subgroups with conjugators: reps[i] lambda reps[i]^-1 == members[i].
// Index 0 is lambda(G) itself with the identity rep.
struct ParamFamily {
  std::vector<RegularGroup> members;
  std::vector<Perm> reps;
  // sigma[i] = j with reps[i]^-1 lambda reps[i] == members[j]
  std::optional<std::vector<std::size_t>> sigma;

  std::size_t size() const noexcept { return members.size(); }
  // Index of g among members, or size() if absent.
  std::size_t find(const RegularGroup& g) const;
  void rebuild_index();

 private:
  std::unordered_multimap<std::uint64_t, std::size_t> index_;
};

}  // namespace qhol
