#include "qhol/group_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhol/errors.hpp"

namespace qhol {

namespace {

std::string power_label(const std::string& sym, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return sym;
  return sym + "^" + std::to_string(k);
}

std::string join_label(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + b;
}

}  // namespace

GroupTable GroupTable::from_mul(std::size_t n, std::vector<std::uint8_t> mul,
                                std::vector<std::string> labels,
                                std::vector<std::size_t> gens) {
  if (n == 0 || n > 255) throw std::invalid_argument("group order out of range");
  if (mul.size() != n * n) throw std::invalid_argument("table size mismatch");
  if (labels.size() != n) throw std::invalid_argument("label count mismatch");
  GroupTable t;
  t.n_ = n;
  t.mul_ = std::move(mul);
  t.labels_ = std::move(labels);
  t.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (t.mul(0, a) != a || t.mul(a, 0) != a)
      throw InternalError("table: 0 is not an identity");
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t r = t.mul(a, b), c = t.mul(b, a);
      if (r >= n || c >= n || row[r] || col[c])
        throw InternalError("table: not a Latin square");
      row[r] = col[c] = true;
      if (r == 0) t.inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = t.mul(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (t.mul(ab, c) != t.mul(a, t.mul(b, c)))
          throw InternalError("table: not associative");
    }
  for (auto g : gens)
    if (g >= n) throw std::invalid_argument("generator index out of range");
  if (subgroup_closure(t, gens).size() != n)
    throw InternalError("table: preferred generators do not generate");
  t.gens_ = std::move(gens);
  return t;
}

std::size_t GroupTable::power(std::size_t a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  std::size_t acc = 0;
  for (long long i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

std::size_t GroupTable::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::vector<std::size_t>> extend_hom(
    const GroupTable& src, const std::vector<std::size_t>& gens,
    const std::vector<std::size_t>& images, const GroupTable& dst) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(src.order(), kUnset);
  std::vector<std::size_t> queue{0};
  map[0] = 0;
  // Checking f(s g) = f(s) f(g) on every edge of the Cayley graph is enough
  // for f to be a homomorphism on the generated subgroup.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t g = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::size_t h = src.mul(gens[i], g);
      std::size_t img = dst.mul(images[i], map[g]);
      if (map[h] == kUnset) {
        map[h] = img;
        queue.push_back(h);
      } else if (map[h] != img) {
        return std::nullopt;
      }
    }
  }
  return map;
}

std::vector<std::size_t> subgroup_closure(const GroupTable& g,
                                          const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> out{0};
  in[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (auto s : gens) {
      std::size_t h = g.mul(s, out[head]);
      if (!in[h]) {
        in[h] = true;
        out.push_back(h);
      }
    }
  return out;
}

GroupTable cyclic_table(std::size_t n, const std::string& symbol) {
  std::vector<std::uint8_t> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = power_label(symbol, a);
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<std::uint8_t>((a + b) % n);
  }
  std::vector<std::size_t> gens;
  if (n > 1) gens.push_back(1);
  return GroupTable::from_mul(n, std::move(mul), std::move(labels), std::move(gens));
}

GroupTable dihedral_table(std::size_t n) {
  // index i = x^i, index n+i = t x^i;
  // (t^a x^b)(t^c x^d) = t^(a+c) x^((-1)^c b + d).
  std::size_t N = 2 * n;
  std::vector<std::uint8_t> mul(N * N);
  std::vector<std::string> labels(N);
  for (std::size_t p = 0; p < N; ++p) {
    std::size_t a = p / n, b = p % n;
    labels[p] = join_label(a ? "t" : "1", power_label("x", b));
    for (std::size_t q = 0; q < N; ++q) {
      std::size_t c = q / n, d = q % n;
      std::size_t e = ((c ? n - b : b) + d) % n;
      mul[p * N + q] = static_cast<std::uint8_t>(((a + c) % 2) * n + e);
    }
  }
  std::vector<std::size_t> gens{1 % N, n};
  if (n == 1) gens = {1};
  return GroupTable::from_mul(N, std::move(mul), std::move(labels), std::move(gens));
}

GroupTable dicyclic_table(std::size_t n) {
  // a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1; index i + 2n j for a^i x^j.
  std::size_t m = 2 * n, N = 4 * n;
  std::vector<std::uint8_t> mul(N * N);
  std::vector<std::string> labels(N);
  for (std::size_t p = 0; p < N; ++p) {
    std::size_t i = p % m, j = p / m;
    labels[p] = join_label(power_label("a", i), j ? "x" : "1");
    for (std::size_t q = 0; q < N; ++q) {
      std::size_t k = q % m, l = q / m;
      std::size_t e = j ? (i + m - k) % m : (i + k) % m;
      std::size_t f = j + l;
      if (f == 2) {
        e = (e + n) % m;
        f = 0;
      }
      mul[p * N + q] = static_cast<std::uint8_t>(e + m * f);
    }
  }
  return GroupTable::from_mul(N, std::move(mul), std::move(labels), {1, m});
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  std::size_t na = a.order(), nb = b.order(), N = na * nb;
  if (N > 255) throw std::invalid_argument("direct product too large");
  // index = ia * nb + ib
  std::vector<std::uint8_t> mul(N * N);
  std::vector<std::string> labels(N);
  for (std::size_t p = 0; p < N; ++p) {
    std::size_t pa = p / nb, pb = p % nb;
    if (pa == 0 && pb == 0)
      labels[p] = "1";
    else
      labels[p] = "(" + a.label(pa) + "," + b.label(pb) + ")";
    for (std::size_t q = 0; q < N; ++q) {
      std::size_t qa = q / nb, qb = q % nb;
      mul[p * N + q] = static_cast<std::uint8_t>(a.mul(pa, qa) * nb + b.mul(pb, qb));
    }
  }
  std::vector<std::size_t> gens;
  for (auto g : a.gens()) gens.push_back(g * nb);
  for (auto g : b.gens()) gens.push_back(g);
  return GroupTable::from_mul(N, std::move(mul), std::move(labels), std::move(gens));
}

GroupTable semidirect_product(const GroupTable& n, const GroupTable& h,
                              const std::vector<std::vector<std::size_t>>& gen_actions) {
  std::size_t nn = n.order(), nh = h.order(), N = nn * nh;
  if (N > 255) throw std::invalid_argument("semidirect product too large");
  if (gen_actions.size() != h.gens().size())
    throw std::invalid_argument("one action per generator of H required");
  std::vector<std::vector<std::size_t>> gen_auts;
  for (const auto& imgs : gen_actions) {
    auto f = extend_hom(n, n.gens(), imgs, n);
    if (!f) throw std::invalid_argument("action is not an endomorphism of N");
    std::vector<std::size_t> s = *f;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < nn; ++i)
      if (s[i] != i) throw std::invalid_argument("action is not bijective");
    gen_auts.push_back(*f);
  }
  // phi over all of H via the Cayley graph of H.
  std::vector<std::vector<std::size_t>> phi(nh);
  std::vector<std::size_t> ident(nn);
  for (std::size_t i = 0; i < nn; ++i) ident[i] = i;
  phi[0] = ident;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t g = queue[head];
    for (std::size_t i = 0; i < h.gens().size(); ++i) {
      std::size_t t = h.mul(h.gens()[i], g);
      std::vector<std::size_t> comp(nn);
      for (std::size_t x = 0; x < nn; ++x) comp[x] = gen_auts[i][phi[g][x]];
      if (phi[t].empty()) {
        phi[t] = std::move(comp);
        queue.push_back(t);
      } else if (phi[t] != comp) {
        throw std::invalid_argument("action is not a homomorphism H -> Aut(N)");
      }
    }
  }
  // (n1,h1)(n2,h2) = (n1 phi_h1(n2), h1 h2); index = ih * nn + in.
  std::vector<std::uint8_t> mul(N * N);
  std::vector<std::string> labels(N);
  for (std::size_t p = 0; p < N; ++p) {
    std::size_t ph = p / nn, pn = p % nn;
    labels[p] = join_label(n.label(pn), h.label(ph));
    for (std::size_t q = 0; q < N; ++q) {
      std::size_t qh = q / nn, qn = q % nn;
      mul[p * N + q] = static_cast<std::uint8_t>(h.mul(ph, qh) * nn + n.mul(pn, phi[ph][qn]));
    }
  }
  std::vector<std::size_t> gens;
  for (auto g : n.gens()) gens.push_back(g);
  for (auto g : h.gens()) gens.push_back(g * nn);
  return GroupTable::from_mul(N, std::move(mul), std::move(labels), std::move(gens));
}

GroupTable table_from_perm_group(const PermGroup& g) {
  const auto& els = g.elements();
  std::size_t N = els.size();
  if (N > 255) throw std::invalid_argument("group too large for a table");
  std::vector<std::uint8_t> mul(N * N);
  std::vector<std::string> labels(N);
  for (std::size_t a = 0; a < N; ++a) {
    labels[a] = to_cycles(els[a]);
    for (std::size_t b = 0; b < N; ++b) {
      std::size_t c = g.index_of(els[a] * els[b]);
      if (c == N) throw InternalError("element list is not closed");
      mul[a * N + b] = static_cast<std::uint8_t>(c);
    }
  }
  std::vector<std::size_t> gens;
  for (const auto& s : g.generators()) {
    std::size_t i = g.index_of(s);
    if (i == N) throw InternalError("generator outside group");
    gens.push_back(i);
  }
  return GroupTable::from_mul(N, std::move(mul), std::move(labels), std::move(gens));
}

}  // namespace qhol
