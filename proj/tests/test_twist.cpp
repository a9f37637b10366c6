#include "doctest.h"

#include "corpus.hpp"
#include "rloop/errors.hpp"
#include "rloop/looptab.hpp"
#include "rloop/twist.hpp"

using namespace rloop;
using namespace rloop::testing;

namespace {

Permutation negation_mod(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (n - i) % n;
  return Permutation(std::move(images));
}

// independent latin-column scan, no shared code with validate()
bool columns_bijective(const RightLoopTable& t) {
  for (int c = 0; c < t.order(); ++c) {
    std::vector<char> seen(static_cast<std::size_t>(t.order()), 0);
    for (int r = 0; r < t.order(); ++r) {
      int v = t.op(r, c);
      if (seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("empty B returns the table unchanged for any eta") {
  TestRng rng(11);
  for (const std::string& file : corpus_loop_files()) {
    RightLoopTable loop = load_loop(file);
    Permutation eta = random_identity_fixing_perm(loop.order(), loop.identity(), rng);
    RightLoopTable twisted = twist(loop, TwistSpec({}, eta));
    CHECK(twisted == loop);
    CHECK(looptab_string(twisted.table(), twisted.identity()) ==
          looptab_string(loop.table(), loop.identity()));
  }
}

TEST_CASE("z6 twisted at B={2} with negation") {
  RightLoopTable z6 = cyclic_group(6);
  RightLoopTable twisted = twist(z6, TwistSpec({2}, negation_mod(6)));

  // column 2 becomes r -> 2 - r; everything else untouched
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      int expected = c == 2 ? ((2 - r) % 6 + 6) % 6 : (r + c) % 6;
      CHECK(twisted.op(r, c) == expected);
    }
  CHECK(columns_bijective(twisted));
  CHECK(twisted.identity() == 0);
}

TEST_CASE("translation identities for the named examples") {
  RightLoopTable z6 = cyclic_group(6);

  SUBCASE("B={2}, eta=negation") {
    TwistSpec spec({2}, negation_mod(6));
    RightLoopTable twisted = twist(z6, spec);
    CHECK(translation_identities(z6, spec, twisted).ok());
    // the twisted column of 2 is L_2 after eta: r -> 2 + (-r)
    Permutation expected = z6.left_translation(2).perm() * spec.eta;
    CHECK(twisted.right_translation(2) == expected);
  }

  SUBCASE("B={2,5}, eta=swap of 1 and 3") {
    TwistSpec spec({2, 5}, Permutation({0, 3, 2, 1, 4, 5}));
    RightLoopTable twisted = twist(z6, spec);
    TranslationIdentityReport report = translation_identities(z6, spec, twisted);
    CHECK(report.ok());
  }

  SUBCASE("B empty") {
    TwistSpec spec({}, negation_mod(6));
    RightLoopTable twisted = twist(z6, spec);
    for (int y = 0; y < 6; ++y)
      CHECK(twisted.right_translation(y) == z6.right_translation(y));
  }
}

TEST_CASE("spec violations") {
  RightLoopTable z6 = cyclic_group(6);
  CHECK_THROWS_AS(twist(z6, TwistSpec({0}, negation_mod(6))), SpecViolation);
  // eta moving the identity
  CHECK_THROWS_AS(twist(z6, TwistSpec({2}, Permutation({1, 0, 2, 3, 4, 5}))), SpecViolation);
  // degree mismatch
  CHECK_THROWS_AS(twist(z6, TwistSpec({2}, Permutation({0, 2, 1}))), SpecViolation);
  CHECK_THROWS_AS(twist(z6, TwistSpec({9}, negation_mod(6))), SpecViolation);
}

TEST_CASE("twist requires a loop, not just a right loop") {
  RightLoopTable z6 = cyclic_group(6);
  RightLoopTable twisted = twist(z6, TwistSpec({2}, negation_mod(6)));
  // the twisted table has non-bijective rows, so it cannot be twisted again
  CHECK_THROWS_AS(twist(twisted, TwistSpec({1}, Permutation::identity(6))),
                  PreconditionFailed);
}

TEST_CASE("columns outside B are copied verbatim") {
  TestRng rng(23);
  for (const std::string& file : {std::string("z8.grouptab"), std::string("steiner10.looptab")}) {
    RightLoopTable loop = load_loop(file);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> b = random_b_subset(loop.order(), loop.identity(), rng);
      TwistSpec spec(b, random_identity_fixing_perm(loop.order(), loop.identity(), rng));
      RightLoopTable twisted = twist(loop, spec);
      for (int c = 0; c < loop.order(); ++c) {
        if (spec.in_b(c)) continue;
        for (int r = 0; r < loop.order(); ++r) CHECK(twisted.op(r, c) == loop.op(r, c));
      }
    }
  }
}

TEST_CASE("identity eta on a commutative loop changes nothing") {
  TestRng rng(5);
  for (const std::string& file :
       {std::string("z6.grouptab"), std::string("e8.grouptab"), std::string("steiner10.looptab")}) {
    RightLoopTable loop = load_loop(file);
    std::vector<int> b = random_b_subset(loop.order(), loop.identity(), rng);
    RightLoopTable twisted = twist(loop, TwistSpec(b, Permutation::identity(loop.order())));
    CHECK(twisted == loop);
  }
}

TEST_CASE("sampled twists stay right loops with correct translations") {
  TestRng rng(31);
  for (const std::string& file : corpus_loop_files()) {
    RightLoopTable loop = load_loop(file);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<int> b = random_b_subset(loop.order(), loop.identity(), rng);
      TwistSpec spec(b, random_identity_fixing_perm(loop.order(), loop.identity(), rng));
      RightLoopTable twisted = twist(loop, spec);  // construction validates
      CHECK(columns_bijective(twisted));
      CHECK(translation_identities(loop, spec, twisted).ok());
    }
  }
}
