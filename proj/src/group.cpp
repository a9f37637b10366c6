#include "rloop/group.hpp"

#include <algorithm>
#include <deque>

#include "rloop/errors.hpp"

namespace rloop {

FiniteGroup::FiniteGroup(CayleyTable table, int identity, std::vector<int> inverses)
    : table_(std::move(table)), identity_(identity), inverses_(std::move(inverses)) {}

FiniteGroup FiniteGroup::from_table(CayleyTable table, int identity) {
  ValidationReport report = validate(table, identity, TableKind::group);
  if (!report.valid()) {
    std::string msg = "not a group:";
    for (const auto& v : report.violations) msg += " [" + v.axiom + "] " + v.message + ";";
    throw StructuralError(msg);
  }
  int n = table.order();
  std::vector<int> inverses(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int q = 0; q < n; ++q)
      if (table.entry(x, q) == identity) {
        inverses[static_cast<std::size_t>(x)] = q;
        break;
      }
  return FiniteGroup(std::move(table), identity, std::move(inverses));
}

bool Subgroup::contains(int element) const {
  return std::binary_search(members.begin(), members.end(), element);
}

Subgroup subgroup_closure(const FiniteGroup& group, std::span<const int> generators) {
  std::vector<char> in(static_cast<std::size_t>(group.order()), 0);
  std::deque<int> frontier;
  auto add = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      frontier.push_back(x);
    }
  };
  add(group.identity());
  for (int g : generators) {
    if (g < 0 || g >= group.order())
      throw StructuralError("generator index " + std::to_string(g) + " out of range");
    add(g);
  }
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    for (int y = 0; y < group.order(); ++y)
      if (in[static_cast<std::size_t>(y)]) {
        add(group.op(x, y));
        add(group.op(y, x));
      }
  }
  Subgroup out;
  for (int x = 0; x < group.order(); ++x)
    if (in[static_cast<std::size_t>(x)]) out.members.push_back(x);
  return out;
}

Subgroup subgroup_from_members(const FiniteGroup& group, std::span<const int> members) {
  Subgroup candidate;
  candidate.members.assign(members.begin(), members.end());
  std::sort(candidate.members.begin(), candidate.members.end());
  candidate.members.erase(std::unique(candidate.members.begin(), candidate.members.end()),
                          candidate.members.end());
  if (!candidate.contains(group.identity()))
    throw PreconditionFailed("subgroup", "member set does not contain the identity");
  for (int x : candidate.members) {
    if (x < 0 || x >= group.order())
      throw PreconditionFailed("subgroup", "member index out of range");
    if (!candidate.contains(group.inverse(x)))
      throw PreconditionFailed("subgroup",
                               "member set not closed under inverse at '" + group.name(x) + "'");
    for (int y : candidate.members)
      if (!candidate.contains(group.op(x, y)))
        throw PreconditionFailed("subgroup", "member set not closed under product at '" +
                                                 group.name(x) + "*" + group.name(y) + "'");
  }
  return candidate;
}

std::vector<std::vector<int>> right_cosets(const FiniteGroup& group, const Subgroup& subgroup) {
  int n = group.order();
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> cosets;
  // identity's coset first, then sweep by minimal unassigned element
  std::vector<int> seeds;
  seeds.push_back(group.identity());
  for (int x = 0; x < n; ++x) seeds.push_back(x);
  for (int seed : seeds) {
    if (assigned[static_cast<std::size_t>(seed)]) continue;
    std::vector<int> coset;
    for (int h : subgroup.members) {
      int y = group.op(h, seed);
      assigned[static_cast<std::size_t>(y)] = 1;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace rloop
