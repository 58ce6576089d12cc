#include "qhol/iso.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qhol/errors.hpp"

namespace qhol {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::size_t centralizer_size(const GroupTable& g, std::size_t a) {
  std::size_t c = 0;
  for (std::size_t b = 0; b < g.order(); ++b) c += g.mul(a, b) == g.mul(b, a);
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> element_invariants(const GroupTable& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) out[a] = {g.element_order(a), centralizer_size(g, a)};
  return out;
}

}  // namespace

std::uint64_t Fingerprint::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(order);
  mix(abelian);
  mix(exponent);
  for (auto c : order_hist) mix(c);
  mix(center);
  mix(derived);
  mix(involutions);
  return h;
}

Fingerprint fingerprint(const GroupTable& g) {
  Fingerprint fp;
  std::size_t n = g.order();
  fp.order = n;
  fp.abelian = g.is_abelian();
  fp.order_hist.assign(n + 1, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = g.element_order(a);
    fp.order_hist[k]++;
    fp.exponent = std::lcm(fp.exponent, k);
    fp.involutions += k == 2;
    fp.center += centralizer_size(g, a) == n;
  }
  std::vector<std::size_t> comms;
  std::vector<bool> seen(n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  fp.derived = subgroup_closure(g, comms).size();
  return fp;
}

std::vector<std::size_t> minimal_generating_set(const GroupTable& g) {
  std::vector<std::size_t> gens;
  std::size_t n = g.order();
  std::size_t have = 1;
  while (have < n) {
    std::size_t best = kUnset, best_size = have;
    std::vector<bool> in(n, false);
    for (auto x : subgroup_closure(g, gens)) in[x] = true;
    for (std::size_t x = 1; x < n; ++x) {
      if (in[x]) continue;
      auto trial = gens;
      trial.push_back(x);
      std::size_t s = subgroup_closure(g, trial).size();
      if (s > best_size) {
        best_size = s;
        best = x;
      }
    }
    gens.push_back(best);
    have = best_size;
  }
  return gens;
}

IsoMatcher::IsoMatcher(const GroupTable& src)
    : src_(src), fp_(fingerprint(src)), gens_(minimal_generating_set(src)) {
  auto inv = element_invariants(src_);
  for (auto g : gens_) gen_inv_.push_back(inv[g]);
}

bool IsoMatcher::search(const GroupTable& dst, std::uint64_t max_nodes, bool want_all,
                        std::vector<std::vector<std::size_t>>& out) const {
  if (dst.order() != src_.order()) return false;
  if (fingerprint(dst) != fp_) return false;
  std::size_t n = dst.order();
  std::size_t k = gens_.size();
  if (k == 0) {
    out.push_back({0});
    return true;
  }
  auto dinv = element_invariants(dst);
  std::vector<std::vector<std::size_t>> cands(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t b = 0; b < n; ++b)
      if (dinv[b] == gen_inv_[i]) cands[i].push_back(b);

  std::uint64_t nodes = 0;
  std::vector<std::size_t> images;
  std::vector<std::size_t> prefix;
  bool done = false;

  auto rec = [&](auto&& self, std::size_t level) -> void {
    for (auto b : cands[level]) {
      if (++nodes > max_nodes)
        throw BudgetExceeded("isomorphism search exceeded node budget", nodes);
      images.push_back(b);
      prefix.push_back(gens_[level]);
      auto m = extend_hom(src_, prefix, images, dst);
      bool ok = m.has_value();
      if (ok) {
        std::vector<bool> used(n, false);
        for (auto v : *m) {
          if (v == kUnset) continue;
          if (used[v]) {
            ok = false;
            break;
          }
          used[v] = true;
        }
      }
      if (ok) {
        if (level + 1 == k) {
          out.push_back(std::move(*m));
          if (!want_all) done = true;
        } else {
          self(self, level + 1);
        }
      }
      images.pop_back();
      prefix.pop_back();
      if (done) return;
    }
  };
  rec(rec, 0);
  return !out.empty();
}

std::optional<std::vector<std::size_t>> IsoMatcher::find(const GroupTable& dst,
                                                         std::uint64_t max_nodes) const {
  std::vector<std::vector<std::size_t>> out;
  if (!search(dst, max_nodes, false, out)) return std::nullopt;
  return out.front();
}

std::vector<std::vector<std::size_t>> IsoMatcher::all(const GroupTable& dst,
                                                      std::uint64_t max_nodes) const {
  std::vector<std::vector<std::size_t>> out;
  search(dst, max_nodes, true, out);
  return out;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const GroupTable& a,
                                                         const GroupTable& b,
                                                         std::uint64_t max_nodes) {
  return IsoMatcher(a).find(b, max_nodes);
}

std::optional<std::vector<std::size_t>> isomorphic(const PermGroup& a, const PermGroup& b,
                                                   std::uint64_t max_nodes) {
  if (a.order() != b.order()) return std::nullopt;
  return find_isomorphism(table_from_perm_group(a), table_from_perm_group(b), max_nodes);
}

std::vector<std::vector<std::size_t>> automorphisms(const GroupTable& g,
                                                    std::uint64_t max_nodes) {
  return IsoMatcher(g).all(g, max_nodes);
}

PermGroup automorphism_group(const RegularContext& ctx, std::uint64_t max_nodes) {
  auto auts = automorphisms(ctx.table, max_nodes);
  std::vector<Perm> perms;
  perms.reserve(auts.size());
  for (const auto& f : auts) perms.push_back(Perm::from_images(std::span<const std::size_t>(f)));
  return PermGroup::from_elements_unchecked(std::move(perms), {});
}

namespace {

struct PoolItem {
  const CatalogEntry* entry;
  GroupTable table;
  Fingerprint fp;
};

const std::vector<PoolItem>& pool_tables() {
  static const std::vector<PoolItem> items = [] {
    std::vector<PoolItem> out;
    for (const auto& e : naming_pool()) {
      GroupTable t = build_table(e.spec);
      Fingerprint fp = fingerprint(t);
      out.push_back({&e, std::move(t), std::move(fp)});
    }
    return out;
  }();
  return items;
}

}  // namespace

std::string name_table(const GroupTable& g) {
  if (g.order() == 1) return "1";
  Fingerprint fp = fingerprint(g);
  if (g.order() <= kNamingCap) {
    IsoMatcher m(g);
    for (const auto& item : pool_tables()) {
      if (item.fp != fp) continue;
      try {
        if (m.find(item.table)) return item.entry->display;
      } catch (const BudgetExceeded&) {
        // fall through to the fingerprint name
      }
    }
  }
  std::ostringstream out;
  out << "order-" << g.order() << ", fingerprint " << std::hex << fp.hash();
  return out.str();
}

std::string name_group(const PermGroup& g) {
  if (g.order() == 1) return "1";
  if (g.order() > 255) {
    std::ostringstream out;
    out << "order-" << g.order();
    return out.str();
  }
  return name_table(table_from_perm_group(g));
}

}  // namespace qhol
