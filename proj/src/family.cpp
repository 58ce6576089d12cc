#include "qhol/family.hpp"

namespace qhol {

std::size_t ParamFamily::find(const RegularGroup& g) const {
  auto [lo, hi] = index_.equal_range(g.key());
  for (auto it = lo; it != hi; ++it)
    if (members[it->second] == g) return it->second;
  return members.size();
}

void ParamFamily::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < members.size(); ++i) index_.emplace(members[i].key(), i);
}

}  // namespace qhol
