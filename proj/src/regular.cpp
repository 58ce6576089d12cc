#include "qhol/regular.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhol/errors.hpp"

namespace qhol {

std::optional<RegularGroup> RegularGroup::from_group(const PermGroup& g) {
  if (!is_regular(g)) return std::nullopt;
  std::vector<Perm> by(g.degree());
  for (const auto& p : g.elements()) by[p[0]] = p;
  RegularGroup r;
  r.by_point_ = std::move(by);
  r.finish();
  return r;
}

RegularGroup RegularGroup::from_by_point(std::vector<Perm> by_point) {
  std::size_t d = by_point.size();
  if (d == 0) throw std::invalid_argument("empty regular group");
  for (std::size_t x = 0; x < d; ++x)
    if (by_point[x].degree() != d || by_point[x][0] != x)
      throw std::invalid_argument("by_point list is not a transversal of 0");
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Perm p = by_point[x] * by_point[y];
      if (by_point[p[0]] != p)
        throw std::invalid_argument("by_point list is not closed");
    }
  RegularGroup r;
  r.by_point_ = std::move(by_point);
  r.finish();
  return r;
}

std::optional<RegularGroup> RegularGroup::generate(const std::vector<Perm>& gens,
                                                   std::size_t degree) {
  try {
    return from_group(PermGroup::generate(gens, degree, degree));
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

void RegularGroup::finish() {
  std::size_t d = by_point_.size();
  // Greedy generators: walk points, add the element for any point not yet
  // in the orbit of 0 under the chosen ones.
  std::vector<bool> in(d, false);
  std::vector<std::size_t> orbit{0};
  in[0] = true;
  gens_.clear();
  for (std::size_t x = 1; x < d && orbit.size() < d; ++x) {
    if (in[x]) continue;
    gens_.push_back(by_point_[x]);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : gens_) {
        std::size_t y = g[orbit[head]];
        if (!in[y]) {
          in[y] = true;
          orbit.push_back(y);
        }
      }
    }
  }
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& p : by_point_) {
    h ^= p.hash();
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  key_ = h;
}

bool RegularGroup::normalized_by(const Perm& b) const {
  for (const auto& g : gens_)
    if (!contains(b.conj(g))) return false;
  return true;
}

bool RegularGroup::normalizes(const RegularGroup& other) const {
  for (const auto& g : gens_)
    if (!other.normalized_by(g)) return false;
  return true;
}

RegularGroup RegularGroup::conjugate(const Perm& b) const {
  std::size_t d = by_point_.size();
  std::vector<Perm> by(d);
  for (const auto& p : by_point_) {
    Perm c = b.conj(p);
    by[c[0]] = c;
  }
  RegularGroup r;
  r.by_point_ = std::move(by);
  r.finish();
  return r;
}

PermGroup RegularGroup::to_perm_group() const {
  return PermGroup::from_elements_unchecked(by_point_, gens_);
}

std::vector<Perm> RegularGroup::sorted_elements() const {
  std::vector<Perm> out = by_point_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qhol
