#include "doctest.h"

#include <stdexcept>

#include "rloop/permutation.hpp"

using rloop::Permutation;

TEST_CASE("permutation rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({-1, 0}), std::invalid_argument);
}

TEST_CASE("composition applies the right factor first") {
  // f = (0 1), g = (1 2); (f*g)(1) = f(g(1)) = f(2) = 2
  Permutation f({1, 0, 2});
  Permutation g({0, 2, 1});
  Permutation fg = f * g;
  CHECK(fg(0) == 1);
  CHECK(fg(1) == 2);
  CHECK(fg(2) == 0);
  Permutation gf = g * f;
  CHECK(gf(0) == 2);
  CHECK(fg != gf);
}

TEST_CASE("inverse composes to identity") {
  Permutation p({2, 0, 3, 1});
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
  CHECK(Permutation::identity(5).is_identity());
  CHECK(p.inverse().inverse() == p);
}
