#pragma once

#include <cstddef>
#include <vector>

#include "qhol/perm.hpp"

namespace qhol {

inline constexpr std::size_t kDefaultGroupCap = 10'000'000;

// Subgroup of Sym(d) held as its full element list, sorted lexicographically
// on image arrays.
class PermGroup {
 public:
  PermGroup() = default;

  // Closure of gens under products.  Throws BudgetExceeded past cap.
  static PermGroup generate(std::vector<Perm> gens, std::size_t degree,
                            std::size_t cap = kDefaultGroupCap);
  // Caller guarantees elements form a group; only sorting/dedup is done.
  // Empty gens are filled in greedily.
  static PermGroup from_elements_unchecked(std::vector<Perm> elements,
                                           std::vector<Perm> gens);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& generators() const noexcept { return gens_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  bool contains(const Perm& p) const;
  // Index of p in elements(), or order() if absent.
  std::size_t index_of(const Perm& p) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
};

// Greedy generating set of the group whose element list is given.
std::vector<Perm> generating_set(const std::vector<Perm>& elements);

bool is_transitive(const PermGroup& g);
bool is_regular(const PermGroup& g);
// a n a^-1 in N for all generators a of A and n of N.
bool normalizes(const PermGroup& a, const PermGroup& n);
bool normalizes_bruteforce(const PermGroup& a, const PermGroup& n);
PermGroup normalizer_in(const PermGroup& ambient, const PermGroup& n);
PermGroup centralizer_in(const PermGroup& ambient, const PermGroup& n);
PermGroup conjugate_group(const Perm& b, const PermGroup& n);
PermGroup intersection(const PermGroup& a, const PermGroup& b);

}  // namespace qhol
