#pragma once

#include <vector>

#include "rloop/table.hpp"

namespace rloop {

// Parameters of the column twist: a set B of non-identity elements and a
// permutation eta fixing the identity.
struct TwistSpec {
  std::vector<int> b;  // sorted, unique
  Permutation eta;

  TwistSpec(std::vector<int> b_elements, Permutation eta);
  bool in_b(int element) const;
  // Throws SpecViolation unless identity is outside B, eta fixes it and
  // degrees match.
  void check_against(const RightLoopTable& table) const;
};

// Rebuilds the table with x*'y = x*y for y outside B and x*'y = y*eta(x)
// for y in B.  Requires the input to be a loop (rows bijective as well as
// columns); the output is a validated right loop with the same identity.
// Columns outside B are copied unchanged, so an empty B returns the input
// table itself.
RightLoopTable twist(const RightLoopTable& loop, const TwistSpec& spec);

struct TranslationIdentityReport {
  // elements y whose twisted right translation differs from the predicted
  // one (original column for y outside B, left translation after eta for y
  // in B); must be empty for tables produced by twist()
  std::vector<int> failing;
  bool ok() const { return failing.empty(); }
};

TranslationIdentityReport translation_identities(const RightLoopTable& base,
                                                 const TwistSpec& spec,
                                                 const RightLoopTable& twisted);

}  // namespace rloop
