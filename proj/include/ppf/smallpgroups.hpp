#pragma once

#include "ppf/group.hpp"

#include <string>
#include <vector>

namespace ppf::sim {

struct SmallGroup {
  std::string name;
  std::shared_ptr<grp::PermutationGroup> group;
};

// All p-groups of order up to the inventory bound, one per isomorphism
// class, in a deterministic order (ascending order, then construction
// order).  The bound is 16 for p = 2, 27 for p = 3 and p^2 otherwise; the
// corpus this toolkit targets never needs larger members.
const std::vector<SmallGroup>& p_group_inventory(int p);
int p_group_inventory_bound(int p);

} // namespace ppf::sim
