#include "doctest.h"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "rloop/errors.hpp"
#include "rloop/transversal.hpp"

using namespace rloop;
using namespace rloop::testing;

namespace {

std::vector<Transversal> all_nrts(const FiniteGroup& g, const Subgroup& h) {
  NrtEnumerator it(g, h);
  std::vector<Transversal> out;
  while (auto t = it.next()) out.push_back(*t);
  return out;
}

// independent oracle: scan every subset of the right size containing the
// identity and count those hitting each coset exactly once
int brute_force_nrt_count(const FiniteGroup& g, const Subgroup& h) {
  auto cosets = right_cosets(g, h);
  int m = static_cast<int>(cosets.size());
  std::vector<int> coset_of(static_cast<std::size_t>(g.order()), -1);
  for (int c = 0; c < m; ++c)
    for (int x : cosets[static_cast<std::size_t>(c)])
      coset_of[static_cast<std::size_t>(x)] = c;

  int count = 0;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == m) {
      std::vector<char> hit(static_cast<std::size_t>(m), 0);
      bool ok = true;
      for (int x : pick) {
        if (hit[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(x)])]) ok = false;
        hit[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(x)])] = 1;
      }
      if (ok && std::find(pick.begin(), pick.end(), g.identity()) != pick.end()) ++count;
      return;
    }
    for (int x = start; x < g.order(); ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("NRT counts for S3 match the brute-force census") {
  FiniteGroup s3 = load_group("s3.grouptab");
  for (const char* gen : {"a", "b", "c"}) {
    Subgroup h = subgroup_closure(s3, std::vector<int>{*s3.table().index_of(gen)});
    auto nrts = all_nrts(s3, h);
    CHECK(nrts.size() == 4);
    CHECK(NrtEnumerator(s3, h).total().str() == "4");
    CHECK(brute_force_nrt_count(s3, h) == 4);
  }
  Subgroup h3 = subgroup_closure(s3, std::vector<int>{*s3.table().index_of("r")});
  CHECK(all_nrts(s3, h3).size() == 3);
  CHECK(brute_force_nrt_count(s3, h3) == 3);
}

TEST_CASE("H = G yields the single transversal {1}") {
  FiniteGroup z4 = load_group("z4.grouptab");
  Subgroup whole = subgroup_closure(z4, std::vector<int>{1});
  auto nrts = all_nrts(z4, whole);
  REQUIRE(nrts.size() == 1);
  CHECK(nrts[0].chosen == std::vector<int>{0});
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
  FiniteGroup d4 = load_group("d4.grouptab");
  Subgroup h = subgroup_closure(d4, std::vector<int>{*d4.table().index_of("r2")});
  auto nrts = all_nrts(d4, h);
  CHECK(nrts.size() == 8);  // three non-identity cosets, two choices each
  std::set<std::vector<int>> seen;
  for (const auto& t : nrts) CHECK(seen.insert(t.chosen).second);
  CHECK(std::is_sorted(nrts.begin(), nrts.end(), [](const auto& a, const auto& b) {
    return a.chosen < b.chosen;
  }));
}

TEST_CASE("transversal_from_elements validates its input") {
  FiniteGroup s3 = load_group("s3.grouptab");
  int r = *s3.table().index_of("r");
  int R = *s3.table().index_of("R");
  int a = *s3.table().index_of("a");
  Subgroup h = subgroup_closure(s3, std::vector<int>{a});

  Transversal t = transversal_from_elements(s3, h, std::vector<int>{s3.identity(), r, R});
  CHECK(t.chosen[0] == s3.identity());

  CHECK_THROWS_AS(transversal_from_elements(s3, h, std::vector<int>{s3.identity(), r}),
                  PreconditionFailed);
  CHECK_THROWS_AS(
      transversal_from_elements(s3, h, std::vector<int>{a, r, R}),
      PreconditionFailed);  // not normalized: a replaces the identity
}

TEST_CASE("induced operation on the cyclic transversal of S3 is Z3") {
  FiniteGroup s3 = load_group("s3.grouptab");
  Subgroup h = subgroup_closure(s3, std::vector<int>{*s3.table().index_of("a")});
  int r = *s3.table().index_of("r");
  int R = *s3.table().index_of("R");
  Transversal t = transversal_from_elements(s3, h, std::vector<int>{s3.identity(), r, R});
  RightLoopTable induced = induced_operation(s3, h, t);

  // the subgroup {e, r, R} is its own multiplication: a cyclic group
  REQUIRE(induced.order() == 3);
  int ir = *induced.table().index_of("r");
  int iR = *induced.table().index_of("R");
  CHECK(induced.op(ir, ir) == iR);
  CHECK(induced.op(ir, iR) == induced.identity());
  CHECK(validate(induced.table(), 0, TableKind::group).valid());
}

TEST_CASE("every induced operation is a right loop normalized at 1") {
  FiniteGroup s3 = load_group("s3.grouptab");
  for (const char* gen : {"a", "b", "c", "r"}) {
    Subgroup h = subgroup_closure(s3, std::vector<int>{*s3.table().index_of(gen)});
    for (const Transversal& t : all_nrts(s3, h)) {
      RightLoopTable induced = induced_operation(s3, h, t);  // ctor validates
      for (int y = 0; y < induced.order(); ++y) CHECK(induced.op(0, y) == y);

      // oracle: the entry is the unique member of S inside H(x*y)
      for (int i = 0; i < induced.order(); ++i)
        for (int j = 0; j < induced.order(); ++j) {
          int x = t.chosen[static_cast<std::size_t>(i)];
          int y = t.chosen[static_cast<std::size_t>(j)];
          int product = s3.op(x, y);
          std::vector<int> intersection;
          for (int hh : h.members)
            for (int s : t.chosen)
              if (s3.op(hh, product) == s) intersection.push_back(s);
          REQUIRE(intersection.size() == 1);
          CHECK(t.chosen[static_cast<std::size_t>(induced.op(i, j))] == intersection[0]);
        }
    }
  }
}

TEST_CASE("c-groupoid data for a subgroup transversal has trivial f") {
  FiniteGroup s3 = load_group("s3.grouptab");
  Subgroup h = subgroup_closure(s3, std::vector<int>{*s3.table().index_of("a")});
  int r = *s3.table().index_of("r");
  int R = *s3.table().index_of("R");
  Transversal t = transversal_from_elements(s3, h, std::vector<int>{s3.identity(), r, R});
  CGroupoidData data = c_groupoid(s3, h, t);

  for (int i = 0; i < data.s_count(); ++i)
    for (int j = 0; j < data.s_count(); ++j)
      CHECK(data.h_elements[static_cast<std::size_t>(data.f_at(i, j))] == s3.identity());
  CHECK(theta_action_check(s3, data).ok());
}

TEST_CASE("c-groupoid identities across every NRT of S3") {
  FiniteGroup s3 = load_group("s3.grouptab");
  for (const char* gen : {"a", "b", "c", "r"}) {
    Subgroup h = subgroup_closure(s3, std::vector<int>{*s3.table().index_of(gen)});
    bool some_nontrivial_f = false;
    for (const Transversal& t : all_nrts(s3, h)) {
      CGroupoidData data = c_groupoid(s3, h, t);  // construction re-verifies

      // normalization rows: f(1, y) = 1 and theta(x, 1) = x
      for (int j = 0; j < data.s_count(); ++j)
        CHECK(data.h_elements[static_cast<std::size_t>(data.f_at(0, j))] == s3.identity());
      for (int i = 0; i < data.s_count(); ++i)
        CHECK(data.theta_at(i, 0) == i);

      CHECK(theta_action_check(s3, data).ok());

      bool is_subgroup_nrt = true;
      for (int x : t.chosen)
        for (int y : t.chosen)
          if (std::find(t.chosen.begin(), t.chosen.end(), s3.op(x, y)) == t.chosen.end())
            is_subgroup_nrt = false;
      if (!is_subgroup_nrt) {
        bool nontrivial = false;
        for (int i = 0; i < data.s_count(); ++i)
          for (int j = 0; j < data.s_count(); ++j)
            if (data.h_elements[static_cast<std::size_t>(data.f_at(i, j))] != s3.identity())
              nontrivial = true;
        CHECK(nontrivial);
        some_nontrivial_f = true;
      }
    }
    if (std::string(gen) != "r") CHECK(some_nontrivial_f);
  }
}

TEST_CASE("full NRT sweep over every subgroup of D4 and Q8") {
  for (const std::string& file : {std::string("d4.grouptab"), std::string("q8.grouptab")}) {
    FiniteGroup g = load_group(file);
    std::set<std::vector<int>> subgroups;
    for (int x = 0; x < g.order(); ++x)
      for (int y = x; y < g.order(); ++y)
        subgroups.insert(subgroup_closure(g, std::vector<int>{x, y}).members);

    for (const auto& members : subgroups) {
      Subgroup h{members};
      NrtEnumerator it(g, h);
      BigInt expected = it.total();
      int count = 0;
      while (auto t = it.next()) {
        ++count;
        RightLoopTable induced = induced_operation(g, h, *t);  // ctor validates
        CHECK(induced.op(0, 1 % induced.order()) == 1 % induced.order());
        CGroupoidData data = c_groupoid(g, h, *t);
        CHECK(theta_action_check(g, data).ok());
      }
      CHECK(BigInt(count) == expected);
    }
  }
}

namespace {

// S4 by composing permutations of {0,1,2,3}; identity is element 0 and
// names spell out the image tuple (p0123, p0132, ...)
FiniteGroup make_s4() {
  std::vector<std::array<int, 4>> elems;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::array<int, 4>& q) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == q) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::string> names;
  for (const auto& e : elems) {
    std::string name = "p";
    for (int v : e) name += static_cast<char>('0' + v);
    names.push_back(name);
  }
  std::vector<int> entries;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      std::array<int, 4> ab;
      for (int x = 0; x < 4; ++x)
        ab[static_cast<std::size_t>(x)] =
            a[static_cast<std::size_t>(b[static_cast<std::size_t>(x)])];
      entries.push_back(index_of(ab));
    }
  return FiniteGroup::from_table(CayleyTable(std::move(names), std::move(entries)), 0);
}

}  // namespace

TEST_CASE("full NRT sweep at order 24") {
  FiniteGroup s4 = make_s4();

  // H = <(01)>: 11 non-identity cosets, 2^11 transversals
  Subgroup h2 = subgroup_closure(s4, std::vector<int>{*s4.table().index_of("p1023")});
  REQUIRE(h2.order() == 2);
  NrtEnumerator it2(s4, h2);
  CHECK(it2.total().str() == "2048");
  int count = 0;
  while (auto t = it2.next()) {
    ++count;
    RightLoopTable induced = induced_operation(s4, h2, *t);  // ctor validates
    if (count % 128 == 0) {
      CGroupoidData data = c_groupoid(s4, h2, *t);
      CHECK(theta_action_check(s4, data).ok());
    }
  }
  CHECK(count == 2048);

  // H = A4 from two 3-cycles: a single non-identity coset, 12 choices
  Subgroup a4 = subgroup_closure(
      s4, std::vector<int>{*s4.table().index_of("p1203"), *s4.table().index_of("p0231")});
  REQUIRE(a4.order() == 12);
  NrtEnumerator it12(s4, a4);
  CHECK(it12.total().str() == "12");
  int found = 0;
  while (auto t = it12.next()) {
    ++found;
    RightLoopTable induced = induced_operation(s4, a4, *t);
    CHECK(induced.order() == 2);
    CGroupoidData data = c_groupoid(s4, a4, *t);
    CHECK(theta_action_check(s4, data).ok());
  }
  CHECK(found == 12);
}

TEST_CASE("corrupted theta fails the action check") {
  FiniteGroup s3 = load_group("s3.grouptab");
  Subgroup h = subgroup_closure(s3, std::vector<int>{*s3.table().index_of("a")});
  NrtEnumerator it(s3, h);
  CGroupoidData data = c_groupoid(s3, h, *it.next());
  data.theta[1] = data.theta[1] == 0 ? 1 : 0;  // break one entry
  CHECK(!theta_action_check(s3, data).ok());
}

TEST_CASE("c-groupoid export format") {
  FiniteGroup z4 = load_group("z4.grouptab");
  Subgroup h = subgroup_closure(z4, std::vector<int>{2});
  Transversal t = transversal_from_elements(z4, h, std::vector<int>{0, 1});
  CGroupoidData data = c_groupoid(z4, h, t);
  std::ostringstream out;
  write_cgroupoid(out, z4, data);
  CHECK(out.str() ==
        "f:\n"
        "0 0 -> 0\n"
        "0 1 -> 0\n"
        "1 0 -> 0\n"
        "1 1 -> 2\n"
        "sigma:\n"
        "0 0 -> 0\n"
        "0 2 -> 2\n"
        "1 0 -> 0\n"
        "1 2 -> 2\n"
        "theta:\n"
        "0 0 -> 0\n"
        "0 2 -> 0\n"
        "1 0 -> 1\n"
        "1 2 -> 1\n");
}
