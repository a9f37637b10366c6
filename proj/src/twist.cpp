#include "rloop/twist.hpp"

#include <algorithm>

#include "rloop/errors.hpp"

namespace rloop {

TwistSpec::TwistSpec(std::vector<int> b_elements, Permutation eta)
    : b(std::move(b_elements)), eta(std::move(eta)) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
}

bool TwistSpec::in_b(int element) const {
  return std::binary_search(b.begin(), b.end(), element);
}

void TwistSpec::check_against(const RightLoopTable& table) const {
  if (eta.degree() != table.order())
    throw SpecViolation("eta degree " + std::to_string(eta.degree()) +
                        " does not match table order " + std::to_string(table.order()));
  for (int y : b) {
    if (y < 0 || y >= table.order())
      throw SpecViolation("B element index " + std::to_string(y) + " out of range");
    if (y == table.identity())
      throw SpecViolation("B contains the identity element");
  }
  if (eta(table.identity()) != table.identity())
    throw SpecViolation("eta moves the identity element");
}

RightLoopTable twist(const RightLoopTable& loop, const TwistSpec& spec) {
  spec.check_against(loop);
  ValidationReport loop_report = validate(loop.table(), loop.identity(), TableKind::loop);
  if (!loop_report.valid())
    throw PreconditionFailed("loop", "twist input must be a loop; " +
                                         loop_report.violations.front().message);

  int n = loop.order();
  std::vector<int> entries(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int v = spec.in_b(c) ? loop.op(c, spec.eta(r)) : loop.op(r, c);
      entries[static_cast<std::size_t>(r) * n + c] = v;
    }
  return RightLoopTable(CayleyTable(loop.table().names(), std::move(entries)),
                        loop.identity());
}

TranslationIdentityReport translation_identities(const RightLoopTable& base,
                                                 const TwistSpec& spec,
                                                 const RightLoopTable& twisted) {
  TranslationIdentityReport report;
  for (int y = 0; y < base.order(); ++y) {
    Permutation got = twisted.right_translation(y);
    if (!spec.in_b(y)) {
      if (got != base.right_translation(y)) report.failing.push_back(y);
      continue;
    }
    // twisted column of y in B must be L_y composed after eta
    Permutation expected = base.left_translation(y).perm() * spec.eta;
    if (got != expected) report.failing.push_back(y);
  }
  return report;
}

}  // namespace rloop
