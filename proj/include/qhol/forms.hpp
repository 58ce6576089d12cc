#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhol/perm.hpp"
#include "qhol/regular.hpp"

namespace qhol {

// Outcome of a batch of identity checks.  Failures are violated identities;
// flags record statements that were checked in a corrected form.
struct CheckReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> flags;

  void expect(bool ok, const std::string& what);
  void flag(const std::string& what) { flags.push_back(what); }
  bool ok() const { return failures.empty(); }
};

// p-adic valuation; v_p(0) is reported as a large sentinel.
int valuation(std::int64_t x, std::int64_t p);
std::int64_t mult_order(std::int64_t u, std::int64_t mod);

// Points 0..p^n-1 stand for the labels 1..p^n; sigma(x) = x+1.
struct CyclicForms {
  std::int64_t p = 0, n = 0, m = 0;  // m = floor(n/2)
  std::int64_t N = 0;                // p^n
  std::int64_t P = 0;                // p^(n-m), number of sigma_i
  std::int64_t u = 0;                // 1 + p^(n-m)
  Perm sigma, gamma, beta;
  std::vector<Perm> sigma_i;         // sigma_i[i-1] for i = 1..P

  static CyclicForms make(std::int64_t p, std::int64_t n);
  static std::int64_t t(std::int64_t j) { return j * (j + 1) / 2; }
  // generator gamma^e sigma of N_e
  Perm n_gen(std::int64_t e) const;
  // x -> s x + 1, the pair (sigma, delta_s)
  Perm affine(std::int64_t s, std::int64_t shift = 1) const;
};

CheckReport cyclic_lemma_suite(std::int64_t p, std::int64_t n);
// The p^m groups <gamma^e sigma>, checked pairwise distinct.
std::vector<RegularGroup> cyclic_SR_closed_form(std::int64_t p, std::int64_t n);
// Closed-form S∩R, Q and H (and S for p = 2) against the enumeration.
CheckReport cyclic_pipeline_check(std::int64_t p, std::int64_t n);

struct C2nIndexSets {
  std::vector<std::int64_t> s_set;  // <5>
  std::vector<std::int64_t> q_set;  // <5^(2^r)>, r = floor((n-3)/2)
  std::vector<std::int64_t> h_set;  // {1, 5^(2^(n-3))}
};
C2nIndexSets c2n_Q_and_H(std::int64_t n);

CheckReport beta_parameterization_check(std::int64_t p, std::int64_t n);

// Points: x^b -> b, t x^b -> n + b.
struct DihedralForms {
  std::int64_t n = 0;
  std::vector<std::int64_t> upsilon;  // u with u^2 = 1 mod n
  std::vector<std::vector<std::size_t>> blocks;  // X0,Y0,X1,Y1,X2,Y2 (X1.. only for even n)
  std::vector<std::int64_t> i_sub;  // i_e for e in Z_n when 8 | n

  static DihedralForms make(std::int64_t n);
  std::size_t pt(std::int64_t a, std::int64_t b) const;  // point of t^a x^b
  Perm phi(std::int64_t i, std::int64_t j) const;  // t^a x^b -> t^a x^(ia+jb)
  Perm tau(std::int64_t u) const;                  // x^i -> x^i, t x^i -> t x^(ui)
  Perm k_xy(std::int64_t u) const;                 // k_X k_Y
  Perm k_xy_tilde(std::int64_t u) const;           // requires 8 | n
  Perm psi() const;                                // requires 8 | n
  // closed-form count of R(D_n, [D_n])
  std::size_t r_count_formula() const;
  std::size_t q_count_formula() const;  // n > 4 or n odd
};

// 0, 1, 2 for the block pair supporting the order-n cyclic subgroup of a
// regular dihedral group, or -1 if none.
int block_type(const DihedralForms& df, const RegularGroup& g);

CheckReport dihedral_suite(std::int64_t n);

}  // namespace qhol
