#include "qhol/perm_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "qhol/errors.hpp"

namespace qhol {

std::vector<Perm> generating_set(const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  if (elements.empty()) return gens;
  std::size_t degree = elements.front().degree();
  PermGroup sub = PermGroup::generate({}, degree);
  for (const auto& p : elements) {
    if (sub.order() == elements.size()) break;
    if (sub.contains(p)) continue;
    gens.push_back(p);
    sub = PermGroup::generate(gens, degree);
  }
  return gens;
}

PermGroup PermGroup::generate(std::vector<Perm> gens, std::size_t degree,
                              std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("group cap must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  PermGroup out;
  out.degree_ = degree;
  std::vector<Perm> real_gens;
  for (const auto& g : gens)
    if (!g.is_identity()) real_gens.push_back(g);

  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue;
  Perm e = Perm::identity(degree);
  seen.insert(e);
  queue.push_back(e);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : real_gens) {
      Perm next = g * queue[head];
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw BudgetExceeded("group generation exceeded cap", seen.size() - 1);
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  out.elements_ = std::move(queue);
  out.gens_ = std::move(gens);
  return out;
}

PermGroup PermGroup::from_elements_unchecked(std::vector<Perm> elements,
                                             std::vector<Perm> gens) {
  PermGroup out;
  if (elements.empty()) throw std::invalid_argument("empty element list");
  out.degree_ = elements.front().degree();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  out.elements_ = std::move(elements);
  if (gens.empty()) gens = generating_set(out.elements_);
  out.gens_ = std::move(gens);
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

bool is_transitive(const PermGroup& g) {
  std::size_t d = g.degree();
  if (d == 0) return false;
  std::vector<bool> hit(d, false);
  std::size_t count = 0;
  for (const auto& p : g.elements()) {
    if (!hit[p[0]]) {
      hit[p[0]] = true;
      ++count;
    }
  }
  return count == d;
}

bool is_regular(const PermGroup& g) {
  return g.order() == g.degree() && is_transitive(g);
}

bool normalizes(const PermGroup& a, const PermGroup& n) {
  if (a.degree() != n.degree()) return false;
  for (const auto& x : a.generators())
    for (const auto& y : n.generators())
      if (!n.contains(x.conj(y))) return false;
  return true;
}

bool normalizes_bruteforce(const PermGroup& a, const PermGroup& n) {
  if (a.degree() != n.degree()) return false;
  for (const auto& x : a.elements())
    for (const auto& y : n.elements())
      if (!n.contains(x * y * x.inverse())) return false;
  return true;
}

PermGroup normalizer_in(const PermGroup& ambient, const PermGroup& n) {
  std::vector<Perm> keep;
  for (const auto& a : ambient.elements()) {
    bool ok = true;
    for (const auto& y : n.generators())
      if (!n.contains(a.conj(y))) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(a);
  }
  return PermGroup::from_elements_unchecked(std::move(keep), {});
}

PermGroup centralizer_in(const PermGroup& ambient, const PermGroup& n) {
  std::vector<Perm> keep;
  for (const auto& a : ambient.elements()) {
    bool ok = true;
    for (const auto& y : n.generators())
      if (a * y != y * a) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(a);
  }
  return PermGroup::from_elements_unchecked(std::move(keep), {});
}

PermGroup conjugate_group(const Perm& b, const PermGroup& n) {
  std::vector<Perm> els;
  els.reserve(n.order());
  for (const auto& x : n.elements()) els.push_back(b.conj(x));
  std::vector<Perm> gens;
  for (const auto& g : n.generators()) gens.push_back(b.conj(g));
  return PermGroup::from_elements_unchecked(std::move(els), std::move(gens));
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> out;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return PermGroup::from_elements_unchecked(std::move(out), {});
}

}  // namespace qhol
