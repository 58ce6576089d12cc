#pragma once

// Slow reference implementations used only by tests.  Each works straight
// from definitions, with no shared code paths beyond Perm arithmetic.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qhol/group_table.hpp"
#include "qhol/perm.hpp"

namespace oracle {

using qhol::Perm;

// Products of everything with everything until nothing new appears, or
// until more than `cap` elements are present.
inline std::set<Perm> naive_closure(const std::vector<Perm>& gens, std::size_t degree,
                                    std::size_t cap = SIZE_MAX) {
  std::set<Perm> s{Perm::identity(degree)};
  s.insert(gens.begin(), gens.end());
  for (;;) {
    std::set<Perm> next = s;
    for (const auto& a : s) {
      for (const auto& b : s) next.insert(a * b);
      if (next.size() > cap) return next;
    }
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

inline bool naive_normalizes(const std::set<Perm>& a, const std::set<Perm>& n) {
  for (const auto& x : a)
    for (const auto& y : n)
      if (!n.count(x * y * x.inverse())) return false;
  return true;
}

inline bool naive_regular(const std::set<Perm>& g, std::size_t degree) {
  if (g.size() != degree) return false;
  std::set<std::size_t> hit;
  for (const auto& p : g) hit.insert(p[0]);
  return hit.size() == degree;
}

// All bijections a -> b (as index maps) preserving products; small orders only.
inline std::vector<std::vector<std::size_t>> naive_isomorphisms(const qhol::GroupTable& a,
                                                                const qhol::GroupTable& b,
                                                                bool stop_at_first = false) {
  std::vector<std::vector<std::size_t>> out;
  if (a.order() != b.order()) return out;
  std::size_t n = a.order();
  std::vector<std::size_t> f(n);
  std::iota(f.begin(), f.end(), 0);
  // identity must go to identity; permute the rest.
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        ok = f[a.mul(x, y)] == b.mul(f[x], f[y]);
    if (ok) {
      out.push_back(f);
      if (stop_at_first) return out;
    }
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return out;
}

inline std::size_t naive_center(const qhol::GroupTable& g) {
  std::size_t c = 0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool z = true;
    for (std::size_t b = 0; b < g.order(); ++b) z = z && g.mul(a, b) == g.mul(b, a);
    c += z;
  }
  return c;
}

// Norm_{S_d}(g) by running over all of S_d.
inline std::set<Perm> naive_normalizer_in_symmetric(const std::set<Perm>& g, std::size_t degree) {
  std::vector<std::size_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::set<Perm> out;
  do {
    Perm p = Perm::from_images(std::span<const std::size_t>(img));
    bool ok = true;
    for (const auto& x : g) {
      if (!g.count(p * x * p.inverse())) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Every regular subgroup of `ambient` generated by at most `rank` of its
// fixed-point-free elements.
inline std::set<std::set<Perm>> naive_regular_subgroups(const std::set<Perm>& ambient,
                                                        std::size_t degree, std::size_t rank) {
  auto free_of_points = [&](const Perm& p) {
    for (std::size_t x = 0; x < degree; ++x)
      if (p[x] == x) return false;
    return true;
  };
  std::vector<Perm> fpf;
  for (const auto& p : ambient)
    if (free_of_points(p)) fpf.push_back(p);
  std::set<std::set<Perm>> out;
  std::vector<Perm> pick;
  auto rec = [&](auto&& self, std::size_t from, const std::set<Perm>& cur) -> void {
    for (std::size_t i = from; i < fpf.size(); ++i) {
      if (cur.count(fpf[i])) continue;
      pick.push_back(fpf[i]);
      auto c = naive_closure(pick, degree, degree);
      bool semi = c.size() <= degree;
      for (const auto& x : c)
        if (semi && !x.is_identity()) semi = free_of_points(x);
      if (semi) {
        if (c.size() == degree) out.insert(c);
        else if (pick.size() < rank) self(self, i + 1, c);
      }
      pick.pop_back();
    }
  };
  rec(rec, 0, {Perm::identity(degree)});
  return out;
}

// Cayley table of a permutation group given as a set, identity first.
inline qhol::GroupTable table_of(const std::set<Perm>& g) {
  std::vector<Perm> el(g.begin(), g.end());
  std::size_t n = el.size();
  std::size_t deg = el.front().degree();
  auto id = std::find(el.begin(), el.end(), Perm::identity(deg));
  std::iter_swap(el.begin(), id);
  std::vector<std::uint8_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<std::uint8_t>(
          std::find(el.begin(), el.end(), el[a] * el[b]) - el.begin());
  std::vector<std::string> labels;
  std::vector<std::size_t> gens;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("e" + std::to_string(a));
    gens.push_back(a);
  }
  return qhol::GroupTable::from_mul(n, std::move(mul), std::move(labels), std::move(gens));
}

// Subgroups of `whole` of order `order` meeting `hol` trivially, found by
// closing every pair of elements.
inline std::set<std::set<Perm>> naive_complements(const std::set<Perm>& whole,
                                                  const std::set<Perm>& hol,
                                                  std::size_t order, std::size_t degree) {
  std::vector<Perm> el(whole.begin(), whole.end());
  std::set<std::set<Perm>> out;
  Perm id = Perm::identity(degree);
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i; j < el.size(); ++j) {
      if (order % el[i].order() || order % el[j].order()) continue;
      auto c = naive_closure({el[i], el[j]}, degree, order);
      if (c.size() != order) continue;
      bool meets = false;
      for (const auto& x : c) meets = meets || (x != id && hol.count(x));
      if (!meets) out.insert(c);
    }
  return out;
}

}  // namespace oracle
