#pragma once

#include <span>
#include <vector>

#include "rloop/table.hpp"

namespace rloop {

// Finite group by Cayley table.  from_table() runs the full group
// validation (associativity over all triples, two-sided inverses) and
// throws StructuralError when it fails.
class FiniteGroup {
public:
  static FiniteGroup from_table(CayleyTable table, int identity);

  int order() const { return table_.order(); }
  int identity() const { return identity_; }
  int op(int x, int y) const { return table_.entry(x, y); }
  int inverse(int x) const { return inverses_[static_cast<std::size_t>(x)]; }
  const CayleyTable& table() const { return table_; }
  const std::string& name(int index) const { return table_.name(index); }

private:
  FiniteGroup(CayleyTable table, int identity, std::vector<int> inverses);

  CayleyTable table_;
  int identity_;
  std::vector<int> inverses_;
};

struct Subgroup {
  std::vector<int> members;  // ascending, contains the identity
  int order() const { return static_cast<int>(members.size()); }
  bool contains(int element) const;
};

// Smallest subgroup containing the generators (BFS closure under product;
// inverses come for free in a finite group).
Subgroup subgroup_closure(const FiniteGroup& group, std::span<const int> generators);

// Checks that the given members really form a subgroup; throws
// PreconditionFailed otherwise.  Used for subgroups supplied by name.
Subgroup subgroup_from_members(const FiniteGroup& group, std::span<const int> members);

// Partition of the group into right cosets Hx.  The coset containing the
// identity (H itself) comes first; the rest are ordered by their minimal
// element index.  Elements within a coset are ascending.
std::vector<std::vector<int>> right_cosets(const FiniteGroup& group, const Subgroup& subgroup);

}  // namespace rloop
