#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhol/perm_group.hpp"

namespace qhol {

// Finite group as a Cayley table on indices 0..n-1, identity at 0.
class GroupTable {
 public:
  GroupTable() = default;

  // Verifies identity, Latin rows/columns and associativity.
  static GroupTable from_mul(std::size_t n, std::vector<std::uint8_t> mul,
                             std::vector<std::string> labels,
                             std::vector<std::size_t> gens);

  std::size_t order() const noexcept { return n_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Preferred generators (indices); drives how lambda/rho generators look.
  const std::vector<std::size_t>& gens() const noexcept { return gens_; }
  std::size_t power(std::size_t a, long long k) const;
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> inv_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> gens_;
};

// Map on elements, extended from generator images along the Cayley graph.
// Returns nullopt if the assignment is not a homomorphism.
std::optional<std::vector<std::size_t>> extend_hom(
    const GroupTable& src, const std::vector<std::size_t>& gens,
    const std::vector<std::size_t>& images, const GroupTable& dst);

std::vector<std::size_t> subgroup_closure(const GroupTable& g,
                                          const std::vector<std::size_t>& gens);

GroupTable cyclic_table(std::size_t n, const std::string& symbol = "s");
GroupTable dihedral_table(std::size_t n);   // order 2n
GroupTable dicyclic_table(std::size_t n);   // order 4n
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
// N x| H where H's i-th generator acts on N by the automorphism whose images
// of N.gens() are gen_actions[i].
GroupTable semidirect_product(const GroupTable& n, const GroupTable& h,
                              const std::vector<std::vector<std::size_t>>& gen_actions);
// Elements in canonical sorted order; identity lands at index 0.
GroupTable table_from_perm_group(const PermGroup& g);

}  // namespace qhol
