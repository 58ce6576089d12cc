#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qhol/perm.hpp"
#include "qhol/perm_group.hpp"

namespace qhol {

// Regular subgroup of Sym(d) stored by the image of point 0: at(x) is the
// unique element sending 0 to x.  Membership and equality are O(d).
class RegularGroup {
 public:
  RegularGroup() = default;

  static std::optional<RegularGroup> from_group(const PermGroup& g);
  // by_point[x](0) == x and the list is closed; checked.
  static RegularGroup from_by_point(std::vector<Perm> by_point);
  // Closure of gens, provided it is regular.
  static std::optional<RegularGroup> generate(const std::vector<Perm>& gens,
                                              std::size_t degree);

  std::size_t degree() const noexcept { return by_point_.size(); }
  const Perm& at(std::size_t x) const { return by_point_[x]; }
  const std::vector<Perm>& by_point() const noexcept { return by_point_; }
  const std::vector<Perm>& generators() const noexcept { return gens_; }
  std::uint64_t key() const noexcept { return key_; }

  bool contains(const Perm& q) const { return by_point_[q[0]] == q; }
  // b N b^-1 == N, tested on generators.
  bool normalized_by(const Perm& b) const;
  bool normalizes(const RegularGroup& other) const;
  RegularGroup conjugate(const Perm& b) const;
  PermGroup to_perm_group() const;
  std::vector<Perm> sorted_elements() const;

  friend bool operator==(const RegularGroup& a, const RegularGroup& b) {
    return a.key_ == b.key_ && a.by_point_ == b.by_point_;
  }
  friend bool operator<(const RegularGroup& a, const RegularGroup& b) {
    return a.by_point_ < b.by_point_;
  }

 private:
  void finish();

  std::vector<Perm> by_point_;
  std::vector<Perm> gens_;
  std::uint64_t key_ = 0;
};

struct RegularGroupHash {
  std::size_t operator()(const RegularGroup& g) const noexcept { return g.key(); }
};

}  // namespace qhol
