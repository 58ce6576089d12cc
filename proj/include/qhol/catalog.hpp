#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qhol/group_table.hpp"
#include "qhol/perm_group.hpp"
#include "qhol/regular.hpp"

namespace qhol {

// A group acting on its own elements.  Point i is element i of the table.
struct RegularContext {
  std::string spec;
  GroupTable table;
  std::vector<Perm> lambda_of;  // lambda(g)(h) = g h
  std::vector<Perm> rho_of;     // rho(g)(h) = h g^-1
  PermGroup lambda;
  PermGroup rho;
  RegularGroup lambda_reg;

  std::size_t order() const noexcept { return table.order(); }
  std::size_t center_order() const;
};

// Builds lambda/rho and checks the context invariants.
RegularContext make_context(GroupTable table, std::string spec);

// Group-spec grammar:
//   C:n  AB:d1xd2x..  D:n (order 2n)  DIC:n (order 4n)  Q:8
//   SD:a:b:k  (C_a x| C_b, b a b^-1 = a^k)   DP:spec1*spec2
//   named: A4 S4 SL23 HEIS3 C9sC3 SG16_3 SG16_13 SG18_4 SG24_8 SG36_3
//          SG36_7 SG36_9 SG40_8 C3xS4 C3xA4sC2
GroupTable build_table(std::string_view spec);
// Context whose points are the points of a given regular permutation group:
// a*b = N_a(b) where N_a sends 0 to a, so lambda equals the group itself.
RegularContext context_from_regular(const PermGroup& g, std::string spec);
RegularContext build(std::string_view spec);

struct CatalogEntry {
  std::string spec;
  std::string display;
};

// Rows of the reference tables, in table order.
const std::vector<CatalogEntry>& table_catalog();
// Candidates used when naming groups (table rows, small building blocks
// and the two order-72 specials).
const std::vector<CatalogEntry>& naming_pool();

}  // namespace qhol
