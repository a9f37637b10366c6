#include "doctest.h"

#include <set>

#include "corpus.hpp"
#include "rloop/errors.hpp"
#include "rloop/group.hpp"
#include "rloop/looptab.hpp"

using namespace rloop;
using namespace rloop::testing;

TEST_CASE("corpus group files validate as groups") {
  for (const std::string& file : corpus_group_files()) {
    FiniteGroup g = load_group(file);
    for (int x = 0; x < g.order(); ++x) {
      CHECK(g.op(g.inverse(x), x) == g.identity());
      CHECK(g.op(x, g.inverse(x)) == g.identity());
    }
  }
}

TEST_CASE("non-groups are rejected with the axiom in the message") {
  LoopFile file = read_looptab_file(data_dir() + "/loop5.looptab");
  try {
    FiniteGroup::from_table(file.table, file.identity);
    FAIL_CHECK("loop5 must not validate as a group");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  }
}

TEST_CASE("subgroup closure") {
  FiniteGroup s3 = load_group("s3.grouptab");
  int r = *s3.table().index_of("r");
  int a = *s3.table().index_of("a");

  CHECK(subgroup_closure(s3, std::vector<int>{}).members ==
        std::vector<int>{s3.identity()});
  CHECK(subgroup_closure(s3, std::vector<int>{a}).order() == 2);
  CHECK(subgroup_closure(s3, std::vector<int>{r}).order() == 3);
  CHECK(subgroup_closure(s3, std::vector<int>{r, a}).order() == 6);
}

TEST_CASE("subgroup_from_members validates closure") {
  FiniteGroup s3 = load_group("s3.grouptab");
  int r = *s3.table().index_of("r");
  int R = *s3.table().index_of("R");
  int a = *s3.table().index_of("a");

  Subgroup h = subgroup_from_members(s3, std::vector<int>{s3.identity(), r, R});
  CHECK(h.order() == 3);
  CHECK_THROWS_AS(subgroup_from_members(s3, std::vector<int>{s3.identity(), r}),
                  PreconditionFailed);
  CHECK_THROWS_AS(subgroup_from_members(s3, std::vector<int>{r, R}), PreconditionFailed);
  CHECK_THROWS_AS(subgroup_from_members(s3, std::vector<int>{s3.identity(), r, a}),
                  PreconditionFailed);
}

TEST_CASE("right cosets partition the group") {
  for (const std::string& file : corpus_group_files()) {
    FiniteGroup g = load_group(file);
    // one subgroup per cyclic generator keeps this cheap and varied
    for (int gen = 0; gen < g.order(); ++gen) {
      Subgroup h = subgroup_closure(g, std::vector<int>{gen});
      auto cosets = right_cosets(g, h);
      CHECK(static_cast<int>(cosets.size()) * h.order() == g.order());
      std::set<int> seen;
      for (const auto& coset : cosets) {
        CHECK(static_cast<int>(coset.size()) == h.order());
        for (int x : coset) CHECK(seen.insert(x).second);
      }
      CHECK(static_cast<int>(seen.size()) == g.order());
      // identity's coset first, and it is H itself
      CHECK(cosets[0] == h.members);
    }
  }
}

TEST_CASE("coset shapes in S3") {
  FiniteGroup s3 = load_group("s3.grouptab");
  Subgroup whole = subgroup_closure(s3, std::vector<int>{1, 3});
  CHECK(right_cosets(s3, whole).size() == 1);

  Subgroup order2 = subgroup_closure(s3, std::vector<int>{*s3.table().index_of("a")});
  auto cosets2 = right_cosets(s3, order2);
  CHECK(cosets2.size() == 3);

  Subgroup order3 = subgroup_closure(s3, std::vector<int>{*s3.table().index_of("r")});
  auto cosets3 = right_cosets(s3, order3);
  CHECK(cosets3.size() == 2);
}
