#include "qhol/forms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qhol/catalog.hpp"
#include "qhol/holomorph.hpp"
#include "qhol/quasi.hpp"
#include "qhol/regsets.hpp"
#include "qhol/zappa.hpp"

namespace qhol {

void CheckReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

int valuation(std::int64_t x, std::int64_t p) {
  if (x == 0) return 1 << 20;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::int64_t mult_order(std::int64_t u, std::int64_t mod) {
  u = ((u % mod) + mod) % mod;
  std::int64_t x = u % mod, k = 1;
  while (x != 1 % mod) {
    x = x * u % mod;
    if (++k > mod) return 0;
  }
  return k;
}

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t md(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
}

Perm perm_of(std::size_t d, auto&& f) {
  std::vector<std::size_t> img(d);
  for (std::size_t x = 0; x < d; ++x) img[x] = f(x);
  return Perm::from_images(std::span<const std::size_t>(img));
}

RegularGroup cyclic_regular(const Perm& g) {
  auto r = RegularGroup::generate({g}, g.degree());
  if (!r) throw std::logic_error("closed-form generator is not regular: " + to_cycles(g));
  return *r;
}

// Sorted element list of <g>.
std::vector<Perm> span_of(const Perm& g) {
  return PermGroup::generate({g}, g.degree()).elements();
}

std::set<std::vector<Perm>> as_sets(const std::vector<RegularGroup>& gs) {
  std::set<std::vector<Perm>> out;
  for (const auto& g : gs) out.insert(g.sorted_elements());
  return out;
}

std::set<std::vector<Perm>> as_sets(const ParamFamily& f) { return as_sets(f.members); }

// modulus p^L fitting comfortably in 62 bits
std::int64_t big_mod(std::int64_t p, int& L) {
  std::int64_t q = 1;
  L = 0;
  while (q <= (std::int64_t{1} << 40) / p) {
    q *= p;
    ++L;
  }
  return q;
}

struct Pipeline {
  HolContext hc;
  ParamFamily s, sr, h, q;
};

Pipeline run_pipeline(const std::string& spec) {
  Pipeline pl{build_hol(build(spec)), {}, {}, {}, {}};
  pl.s = enumerate_S(pl.hc);
  pl.sr = compute_SR(pl.hc, pl.s);
  pl.h = compute_H(pl.hc, pl.s);
  pl.q = compute_Q(norm_digraph(pl.sr), pl.sr, pl.h);
  return pl;
}

std::string tag(std::int64_t p, std::int64_t n) {
  return "p=" + std::to_string(p) + ",n=" + std::to_string(n) + ": ";
}

}  // namespace

CyclicForms CyclicForms::make(std::int64_t p, std::int64_t n) {
  if (p < 2 || n < 1 || ipow(p, n) > static_cast<std::int64_t>(kMaxDegree))
    throw std::invalid_argument("need p^n <= 64");
  CyclicForms c;
  c.p = p;
  c.n = n;
  c.m = n / 2;
  c.N = ipow(p, n);
  c.P = ipow(p, n - c.m);
  c.u = 1 + c.P;
  std::size_t d = static_cast<std::size_t>(c.N);
  std::int64_t N = c.N, P = c.P;
  c.sigma = perm_of(d, [&](std::size_t x) { return md(x + 1, N); });
  for (std::int64_t i = 1; i <= P; ++i)
    c.sigma_i.push_back(perm_of(d, [&](std::size_t x) {
      return md(x, P) == i - 1 ? md(x + P, N) : static_cast<std::int64_t>(x);
    }));
  c.gamma = Perm::identity(d);
  c.beta = Perm::identity(d);
  for (std::int64_t i = 1; i <= P; ++i) {
    c.gamma = c.gamma * c.sigma_i[i - 1].pow(i - 1);
    c.beta = c.beta * c.sigma_i[i - 1].pow(t(i - 1));
  }
  return c;
}

Perm CyclicForms::n_gen(std::int64_t e) const { return gamma.pow(e) * sigma; }

Perm CyclicForms::affine(std::int64_t s, std::int64_t shift) const {
  return perm_of(static_cast<std::size_t>(N),
                 [&](std::size_t x) { return md(s * static_cast<std::int64_t>(x) + shift, N); });
}

CheckReport cyclic_lemma_suite(std::int64_t p, std::int64_t n) {
  CheckReport r;
  CyclicForms c = CyclicForms::make(p, n);
  std::string at = tag(p, n);

  r.expect(c.gamma.conj(c.sigma) == c.sigma.pow(c.u), at + "gamma sigma gamma^-1 == sigma^u");
  r.expect(c.gamma[0] == 0, at + "gamma fixes the first point");
  HolContext hc = build_hol(build("C:" + std::to_string(c.N)));
  r.expect(hc.aut.contains(c.gamma), at + "gamma in A(G)");
  Perm prod = Perm::identity(c.N);
  for (const auto& s : c.sigma_i) prod = prod * s;
  r.expect(prod == c.sigma.pow(c.P), at + "sigma^(p^(n-m)) == product of sigma_i");

  // valuation identities; they rest on u == 1 mod p (mod 4 when p = 2)
  int L = 0;
  std::int64_t mod = big_mod(p, L);
  bool lte = p > 2 || (n - c.m) >= 2;
  int vu = (n % 2 == 0) ? static_cast<int>(c.m) : static_cast<int>(c.m) + 1;
  bool a_holds = true, b_holds = true;
  std::int64_t kmax = std::min<std::int64_t>(4 * c.N, 400);
  std::int64_t upow = 1;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    upow = mulmod(upow, c.u % mod, mod);
    int v = valuation(md(upow - 1, mod), p);
    int want = vu + valuation(k, p);
    if (want < L && v != want) a_holds = false;
  }
  for (std::int64_t e = 1; e <= std::min<std::int64_t>(c.N, 64); ++e) {
    std::int64_t ue = 1;
    for (std::int64_t k = 0; k < e; ++k) ue = mulmod(ue, c.u % mod, mod);
    std::int64_t sum = 0, term = 1;
    for (std::int64_t tt = 1; tt <= std::min<std::int64_t>(2 * c.N, 128); ++tt) {
      sum = (sum + term) % mod;
      term = mulmod(term, ue, mod);
      int want = valuation(tt, p);
      if (want < L && valuation(sum, p) != want) b_holds = false;
    }
  }
  if (lte) {
    r.expect(a_holds, at + "v_p(u^k - 1) formula");
    r.expect(b_holds, at + "v_p(1 + u^e + ... + u^(e(t-1))) == v_p(t)");
  } else {
    ++r.checks;
    if (!a_holds)
      r.flag(at + "v_p(u^k - 1) formula fails here: u = " + std::to_string(c.u) +
             " is not 1 mod 4");
    if (!b_holds)
      r.flag(at + "v_p(geometric sum) == v_p(t) fails here: u = " + std::to_string(c.u) +
             " is not 1 mod 4");
  }
  std::int64_t ord = mult_order(c.u, c.N);
  r.expect(ord == ipow(p, c.m), at + "|u| == p^m (mod p^n)");
  if (ord != ipow(2, c.m))
    r.flag(at + "|u| = " + std::to_string(ord) + ", not 2^m = " + std::to_string(ipow(2, c.m)));

  bool orders = true;
  for (std::int64_t e = 0; e < ipow(p, c.m); ++e) {
    bool ok = static_cast<std::int64_t>(c.n_gen(e).order()) == c.N;
    if (lte) r.expect(ok, at + "|gamma^e sigma| == p^n for e=" + std::to_string(e));
    orders = orders && ok;
  }
  if (!lte && !orders) r.flag(at + "|gamma^e sigma| < p^n for some e: u is not 1 mod 4");
  return r;
}

std::vector<RegularGroup> cyclic_SR_closed_form(std::int64_t p, std::int64_t n) {
  CyclicForms c = CyclicForms::make(p, n);
  std::vector<RegularGroup> out;
  for (std::int64_t e = 0; e < ipow(p, c.m); ++e) {
    RegularGroup g = cyclic_regular(c.n_gen(e));
    for (const auto& o : out)
      if (o == g) throw std::logic_error("closed-form S∩R members coincide");
    out.push_back(std::move(g));
  }
  return out;
}

C2nIndexSets c2n_Q_and_H(std::int64_t n) {
  if (n < 3 || n > 6) throw std::invalid_argument("need 3 <= n <= 6");
  std::int64_t N = ipow(2, n), r = (n - 3) / 2;
  auto powers = [&](std::int64_t g) {
    std::vector<std::int64_t> out;
    std::int64_t x = 1;
    do {
      out.push_back(x);
      x = x * g % N;
    } while (x != 1);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto pw = [&](std::int64_t b, std::int64_t e) {
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < e; ++k) x = x * b % N;
    return x;
  };
  C2nIndexSets s;
  s.s_set = powers(5);
  s.q_set = powers(pw(5, ipow(2, r)));
  s.h_set = {1, pw(5, ipow(2, n - 3))};
  std::sort(s.h_set.begin(), s.h_set.end());
  s.h_set.erase(std::unique(s.h_set.begin(), s.h_set.end()), s.h_set.end());
  return s;
}

CheckReport cyclic_pipeline_check(std::int64_t p, std::int64_t n) {
  CheckReport r;
  CyclicForms c = CyclicForms::make(p, n);
  std::string at = tag(p, n);
  Pipeline pl = run_pipeline("C:" + std::to_string(c.N));
  const auto& lambda = pl.hc.ctx.lambda_reg;

  if (p > 2 || n - c.m >= 2 || c.m == 0) {
    auto closed = cyclic_SR_closed_form(p, n);
    r.expect(closed.front() == lambda, at + "N_0 == lambda(G)");
    r.expect(as_sets(closed) == as_sets(pl.sr), at + "S∩R == {<gamma^e sigma>}");
  } else {
    r.expect(pl.sr.size() == 1, at + "S∩R == {lambda(G)}");
    r.flag(at + "<gamma sigma> is not regular, so S∩R has 1 member, not p^m");
  }
  r.expect(as_sets(pl.q) == as_sets(pl.sr), at + "Q == S∩R");

  if (p > 2) {
    r.expect(pl.h.size() == 1, at + "H == {lambda(G)}");
    // each member has a generator (sigma^i, delta^(p^k (p-1))), i a unit, m-1 <= k <= n-1
    std::int64_t N = c.N, pi = 2;
    while (mult_order(pi, N) != (p - 1) * ipow(p, n - 1)) ++pi;
    std::set<std::int64_t> mults;
    for (std::int64_t k = std::max<std::int64_t>(0, c.m - 1); k <= n - 1; ++k) {
      std::int64_t a = 1;
      for (std::int64_t j = 0; j < ipow(p, k) * (p - 1); ++j) a = a * pi % N;
      mults.insert(a);
    }
    for (std::size_t k = 0; k < pl.sr.size(); ++k) {
      bool found = false;
      const auto& g = pl.sr.members[k];
      for (std::size_t x = 0; x < g.degree() && !found; ++x) {
        if (static_cast<std::int64_t>(x) % p == 0) continue;
        std::int64_t a = md(static_cast<std::int64_t>(g.at(x)[1]) - static_cast<std::int64_t>(x), N);
        found = mults.contains(a) && g.at(x) == c.affine(a, static_cast<std::int64_t>(x));
      }
      r.expect(found, at + "S∩R member " + std::to_string(k) + " has a generator of the stated shape");
    }
  } else if (n >= 3) {
    auto idx = c2n_Q_and_H(n);
    auto groups = [&](const std::vector<std::int64_t>& ss) {
      std::vector<RegularGroup> out;
      for (auto s : ss) out.push_back(cyclic_regular(c.affine(s)));
      return out;
    };
    r.expect(as_sets(groups(idx.s_set)) == as_sets(pl.s), at + "S == {N_s : s in <5>}");
    r.expect(as_sets(groups(idx.q_set)) == as_sets(pl.q), at + "Q == {N_s : s in <5^(2^r)>}");
    r.expect(as_sets(groups(idx.h_set)) == as_sets(pl.h), at + "H == {N_1, N_(5^(2^(n-3)))}");
    r.expect(pl.q.size() == static_cast<std::size_t>(ipow(2, n / 2)), at + "|Q| == 2^[n/2]");
  } else {
    r.expect(pl.s.size() == 1, at + "S == {lambda(G)}");
  }
  return r;
}

CheckReport beta_parameterization_check(std::int64_t p, std::int64_t n) {
  CheckReport r;
  CyclicForms c = CyclicForms::make(p, n);
  std::string at = tag(p, n);
  Pipeline pl = run_pipeline("C:" + std::to_string(c.N));
  const auto& lambda = pl.hc.ctx.lambda_reg;
  std::int64_t pm = ipow(p, c.m);
  if (p == 2 && n == 2) {
    r.expect(pl.q.size() == 1, at + "Q == {lambda(G)}");
    r.flag(at + "gamma sigma has order 2, so beta does not parameterize anything beyond lambda(G)");
    return r;
  }
  std::vector<RegularGroup> ne;
  for (std::int64_t e = 0; e < pm; ++e) ne.push_back(cyclic_regular(c.n_gen(e)));

  if (p > 2 || n % 2 == 1) {
    for (std::int64_t e = 0; e < pm; ++e)
      r.expect(c.beta.pow(e).conj(c.sigma) == c.n_gen(e),
               at + "beta^e sigma beta^-e == gamma^e sigma, e=" + std::to_string(e));
    r.expect(static_cast<std::int64_t>(c.beta.order()) == pm, at + "|beta| == p^m");
    ParamFamily f;
    bool all_in_q = true, outside_hol = true;
    for (std::int64_t e = 0; e < pm; ++e) {
      Perm b = c.beta.pow(e);
      f.members.push_back(lambda.conjugate(b));
      f.reps.push_back(b);
      all_in_q = all_in_q && pl.q.find(f.members.back()) < pl.q.size();
      if (e > 0) outside_hol = outside_hol && !pl.hc.in_hol(b);
    }
    f.rebuild_index();
    std::set<std::vector<Perm>> distinct = as_sets(f);
    r.expect(all_in_q && distinct.size() == pl.q.size(), at + "<beta> parameterizes Q");
    r.expect(outside_hol, at + "<beta> meets Hol trivially");
    r.expect(!conj_closed_check(lambda, f).has_value(), at + "<beta> is conj-closed");
  } else {
    for (std::int64_t k = 0; 2 * k < pm; ++k)
      r.expect(c.beta.pow(2 * k).conj(c.gamma * c.sigma) == c.n_gen(2 * k + 1),
               at + "beta^2k gamma sigma beta^-2k == gamma^(2k+1) sigma, k=" + std::to_string(k));
    std::vector<RegularGroup> odd_orbit, even_orbit, odd_want, even_want;
    Perm b2 = c.beta.pow(2);
    for (std::int64_t k = 0; 2 * k < pm; ++k) {
      odd_orbit.push_back(ne[1].conjugate(b2.pow(k)));
      even_orbit.push_back(lambda.conjugate(b2.pow(k)));
      odd_want.push_back(ne[2 * k + 1]);
      even_want.push_back(ne[2 * k]);
    }
    r.expect(as_sets(odd_orbit) == as_sets(odd_want), at + "<beta^2> orbit of N_1 is the odd N_e");
    r.expect(as_sets(even_orbit) == as_sets(even_want), at + "<beta^2> orbit of lambda is the even N_e");
    r.expect(pl.q.find(lambda.conjugate(c.beta)) == pl.q.size(), at + "beta lambda beta^-1 not in Q");
    ComplementOptions opt;
    opt.max_count = 1;
    auto cs = find_complements(pl.hc, pl.q, opt);
    r.expect(cs.verdict == ZsVerdict::zs, at + "QHol has a complement to Hol");
  }
  return r;
}

DihedralForms DihedralForms::make(std::int64_t n) {
  if (n < 3 || 2 * n > static_cast<std::int64_t>(kMaxDegree))
    throw std::invalid_argument("need 3 <= n <= 32");
  DihedralForms d;
  d.n = n;
  for (std::int64_t u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1 && u * u % n == 1) d.upsilon.push_back(u);
  auto block = [&](auto&& in) {
    std::vector<std::size_t> b;
    for (std::int64_t a = 0; a < 2; ++a)
      for (std::int64_t x = 0; x < n; ++x)
        if (in(a, x)) b.push_back(d.pt(a, x));
    std::sort(b.begin(), b.end());
    return b;
  };
  d.blocks.push_back(block([](auto a, auto) { return a == 0; }));
  d.blocks.push_back(block([](auto a, auto) { return a == 1; }));
  if (n % 2 == 0) {
    d.blocks.push_back(block([](auto, auto x) { return x % 2 == 0; }));
    d.blocks.push_back(block([](auto, auto x) { return x % 2 == 1; }));
    d.blocks.push_back(block([](auto a, auto x) { return (x + a) % 2 == 0; }));
    d.blocks.push_back(block([](auto a, auto x) { return (x + a) % 2 == 1; }));
  }
  if (n % 8 == 0) {
    std::int64_t v = n / 2 + 1;
    d.i_sub.assign(n, -1);
    std::int64_t e = 0;
    d.i_sub[0] = 0;
    for (std::int64_t k = 1; k < n; ++k) {
      e = (1 + e) * v % n;
      if (d.i_sub[e] != -1) throw std::logic_error("i-subscript recurrence revisits an index");
      d.i_sub[e] = k;
    }
  }
  return d;
}

std::size_t DihedralForms::pt(std::int64_t a, std::int64_t b) const {
  return static_cast<std::size_t>(md(a, 2) * n + md(b, n));
}

Perm DihedralForms::phi(std::int64_t i, std::int64_t j) const {
  return perm_of(2 * n, [&](std::size_t x) {
    std::int64_t a = x / n, b = x % n;
    return pt(a, i * a + j * b);
  });
}

Perm DihedralForms::tau(std::int64_t u) const {
  return perm_of(2 * n, [&](std::size_t x) {
    std::int64_t a = x / n, b = x % n;
    return a == 0 ? x : pt(1, u * b);
  });
}

Perm DihedralForms::k_xy(std::int64_t u) const {
  return perm_of(2 * n, [&](std::size_t x) {
    std::int64_t a = x / n, b = x % n;
    return a == 0 ? pt(0, b + 1) : pt(1, b + u);
  });
}

Perm DihedralForms::k_xy_tilde(std::int64_t u) const {
  if (i_sub.empty()) throw std::logic_error("tilde forms need 8 | n");
  std::int64_t v = n / 2 + 1;
  auto ix = [&](std::int64_t e) { return i_sub[md(e, n)]; };
  std::vector<std::size_t> img(2 * n, 2 * n);
  for (std::int64_t c = 0; c < n; ++c) {
    img[pt(0, ix((c + 1) * v) - 1)] = pt(0, ix((c + 2) * v) - 1);
    img[pt(1, ix((1 + c * u) * v) - 1)] = pt(1, ix((1 + (c + 1) * u) * v) - 1);
  }
  if (std::find(img.begin(), img.end(), 2 * n) != img.end())
    throw std::logic_error("tilde cycles do not cover the points");
  return Perm::from_images(std::span<const std::size_t>(img));
}

Perm DihedralForms::psi() const {
  if (i_sub.empty()) throw std::logic_error("psi needs 8 | n");
  std::int64_t v = n / 2 + 1;
  return perm_of(2 * n, [&](std::size_t x) {
    std::int64_t a = x / n, c = x % n;
    return pt(a, i_sub[md((c + 1) * v, n)] - 1);
  });
}

std::size_t DihedralForms::r_count_formula() const {
  std::size_t y = upsilon.size(), h = static_cast<std::size_t>(n / 2);
  if (n % 8 == 0) return (h + 2) * y;
  if (n % 4 == 0) return (h + 1) * y;
  if (n % 2 == 0) return static_cast<std::size_t>(n + 1) * y;
  return y;
}

std::size_t DihedralForms::q_count_formula() const {
  if (n == 4) return 6;
  return (n % 8 == 0 ? 2 : 1) * upsilon.size();
}

int block_type(const DihedralForms& df, const RegularGroup& g) {
  for (const auto& e : g.by_point()) {
    if (static_cast<std::int64_t>(e.order()) != df.n) continue;
    std::vector<std::size_t> orb;
    std::size_t x = 0;
    do {
      orb.push_back(x);
      x = e[x];
    } while (x != 0);
    std::sort(orb.begin(), orb.end());
    for (std::size_t i = 0; i + 1 < df.blocks.size(); i += 2)
      if (orb == df.blocks[i]) return static_cast<int>(i / 2);
    return -1;
  }
  return -1;
}

CheckReport dihedral_suite(std::int64_t n) {
  CheckReport r;
  DihedralForms df = DihedralForms::make(n);
  std::string at = "D_" + std::to_string(n) + ": ";
  Pipeline pl = run_pipeline("D:" + std::to_string(n));
  const auto& hc = pl.hc;
  const auto& lambda = hc.ctx.lambda_reg;
  std::vector<RegularGroup> rr = compute_R(hc, pl.s);

  for (auto u : df.upsilon) r.expect(u * u % n == 1, at + "u^2 == 1 for u in Upsilon");
  r.expect(rr.size() == df.r_count_formula(), at + "|R| matches the Upsilon count formula");
  r.expect(rr.size() == pl.s.size(), at + "|R| == |S|");
  r.expect(pl.q.size() == df.q_count_formula(), at + "|Q| matches the Upsilon count");
  if (n % 2 == 1) r.expect(as_sets(pl.q) == as_sets(pl.h), at + "Q == H for odd n");

  // H from rho and phi; with rho(g)(h) = h g^-1 the x-part index is 1-u
  const Perm& rx = hc.ctx.rho_of[df.pt(0, 1)];
  const Perm& rt = hc.ctx.rho_of[df.pt(1, 0)];
  std::vector<RegularGroup> hform;
  for (auto u : df.upsilon) {
    auto g = RegularGroup::generate({rx * df.phi(1 - u, 1), rt * df.phi(0, u)}, 2 * n);
    r.expect(g.has_value(), at + "closed-form H member is regular");
    if (g) hform.push_back(*g);
  }
  r.expect(as_sets(hform) == as_sets(pl.h), at + "H == {<rho(x) phi_(1-u,1), rho(t) phi_(0,u)>}");

  // blocks of S∩R members
  std::vector<int> types;
  for (const auto& g : pl.sr.members) {
    int b = block_type(df, g);
    types.push_back(b);
    r.expect(b >= 0, at + "S∩R member supported on a block pair");
  }
  for (const auto& g : rr) r.expect(block_type(df, g) >= 0, at + "R member supported on a block pair");

  // characteristic subgroups of H and Q
  auto char_sets = [&](const std::vector<RegularGroup>& gs) {
    std::set<std::vector<Perm>> out;
    for (const auto& g : gs)
      for (const auto& e : g.by_point())
        if (static_cast<std::int64_t>(e.order()) == n) {
          out.insert(span_of(e));
          break;
        }
    return out;
  };
  if (n != 4) {
    std::set<std::vector<Perm>> kx, kt;
    for (auto u : df.upsilon) kx.insert(span_of(df.k_xy(u)));
    r.expect(kx == char_sets(pl.h.members), at + "H characteristic subgroups == <k_X k_Y>");
    std::set<std::vector<Perm>> want = kx;
    if (n % 8 == 0) {
      std::int64_t v = n / 2 + 1;
      for (auto u : df.upsilon) want.insert(span_of(df.k_xy_tilde(u)));
      Perm psi = df.psi();
      r.expect(psi.order() == 2, at + "psi has order 2");
      for (auto u : df.upsilon) {
        r.expect(psi.conj(df.k_xy(u)) == df.k_xy_tilde(u), at + "psi k_X k_Y psi^-1 == tilde");
        for (auto w : df.upsilon) {
          Perm a = df.k_xy(u), b = df.k_xy(w), at_ = df.k_xy_tilde(u), bt = df.k_xy_tilde(w);
          r.expect(a * b == b * a, at + "k_X k_Y commute");
          r.expect(at_ * bt == bt * at_, at + "tilde k_X k_Y commute");
        }
        r.expect(df.k_xy(u).conj(df.k_xy_tilde(u)) == df.k_xy_tilde(u).pow(v),
                 at + "k (tilde k) k^-1 == (tilde k)^v");
        r.expect(df.k_xy_tilde(u).conj(df.k_xy(u)) == df.k_xy(u).pow(v),
                 at + "(tilde k) k (tilde k)^-1 == k^v");
      }
      for (std::int64_t b = 0; b < n / 2; ++b)
        for (std::int64_t a = b; a <= b + 1 && a < n / 2; ++a)
          r.expect(df.i_sub[md(b + a * v, n)] == md(a + b, n), at + "i_(b+av) == a+b");
    }
    r.expect(want == char_sets(pl.q.members), at + "Q characteristic subgroups match closed forms");
    for (std::size_t k = 0; k < pl.q.size(); ++k)
      r.expect(block_type(df, pl.q.members[k]) == 0, at + "Q members are W(X0,Y0)");
  }

  // members off the X0/Y0 blocks and rho(D_n)
  std::size_t off_normalized = 0;
  for (std::size_t k = 0; k < pl.sr.size(); ++k) {
    if (types[k] <= 0) continue;
    bool norm = true;
    for (const auto& g : hc.ctx.rho.generators()) norm = norm && pl.sr.members[k].normalized_by(g);
    off_normalized += norm;
  }
  if (n % 2 == 0 && n > 4)
    r.expect(off_normalized == 0, at + "no W(X1,Y1)/W(X2,Y2) member normalized by rho");
  if (n == 4) r.expect(off_normalized == 4, at + "four W(X1,Y1)/W(X2,Y2) members survive");

  // elementary abelian complement
  auto parameterizes_q = [&](const PermGroup& m) {
    std::set<std::vector<Perm>> orbit;
    bool in_q = true;
    for (const auto& x : m.elements()) {
      RegularGroup c = lambda.conjugate(x);
      in_q = in_q && pl.q.find(c) < pl.q.size();
      orbit.insert(c.sorted_elements());
    }
    return in_q && m.order() == pl.q.size() && orbit.size() == pl.q.size();
  };
  auto elementary = [](const PermGroup& m) {
    for (const auto& x : m.elements())
      if (!(x * x).is_identity()) return false;
    return true;
  };
  if (n == 4) {
    r.flag(at + "|Q| = 6, so no elementary abelian 2-group parameterizes Q");
  } else {
    std::vector<Perm> gens;
    for (auto u : df.upsilon) gens.push_back(df.tau(u));
    PermGroup m = PermGroup::generate(gens, 2 * n);
    r.expect(elementary(m), at + "tau group is elementary abelian");
    if (n % 8 != 0) {
      r.expect(parameterizes_q(m), at + "tau group parameterizes Q");
    } else {
      r.expect(m.order() == pl.h.size(), at + "tau group has order |H|");
      gens.push_back(df.psi());
      PermGroup mp = PermGroup::generate(gens, 2 * n);
      if (!elementary(mp) || !parameterizes_q(mp))
        r.flag(at + "<tau_u, psi> is not an elementary abelian parameter group (order " +
               std::to_string(mp.order()) + ")");
      ComplementOptions opt;
      auto cs = find_complements(hc, pl.q, opt);
      bool any = false;
      for (const auto& c : cs.complements) any = any || elementary(c);
      r.expect(any, at + "some complement parameterizing Q is elementary abelian");
    }
  }

  if (n % 2 == 0 && n > 4) {
    bool found = false;
    for (const auto& g : rr) {
      if (block_type(df, g) != 1) continue;
      bool inside = true;
      for (const auto& x : g.generators()) inside = inside && hc.in_hol(x);
      found = found || !inside;
    }
    r.expect(found, at + "some W(X1,Y1) member of R is not inside Hol");
  }
  return r;
}

}  // namespace qhol
