#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rloop/affine.hpp"
#include "rloop/table.hpp"
#include "rloop/twist.hpp"

namespace rloop {

enum class LoopProperty { loop, commutative, inverse_property };

std::string_view property_name(LoopProperty property);

struct PropertyReport {
  LoopProperty property;
  bool holds;
  // violating tuples: (x, y1, y2) for a non-bijective row, (x, y) for a
  // non-commuting pair, (x) for an element with no two-sided I.P. inverse
  std::vector<std::vector<int>> witnesses;
  // a -> a^-1, present exactly when inverse_property holds
  std::optional<std::vector<int>> inverse_map;
};

// Exhaustive scan of the table for the requested property.  The
// inverse-property check looks for a single x^-1 per x satisfying both
// x^-1(xy) = y and (yx)x^-1 = y for all y.
PropertyReport check_property(const RightLoopTable& table, LoopProperty property);

// a -> 1/a (the left inverse: (1/a) * a = 1).  Defined in any right loop.
std::vector<int> left_inverse_map(const RightLoopTable& table);

struct Lemma1Report {
  std::vector<int> failing;                 // a with inverse(L_{1/a}) != L_a
  std::vector<int> double_inverse_failing;  // a with 1/(1/a) != a
  bool ok() const { return failing.empty() && double_inverse_failing.empty(); }
};

// For an I.P. loop, the inverse of the left translation by 1/a is the left
// translation by a, and taking the left inverse twice returns a.  Throws
// PreconditionFailed when the table is not an I.P. loop.
Lemma1Report lemma1_check(const RightLoopTable& table);

// Word in right translations; letters are applied first to last, so the
// realized map is the composition with the first letter innermost.
struct TranslationWord {
  struct Letter {
    int generator;  // meaning is the caller's (element index, generator slot)
    int exponent;   // +1 or -1
    bool operator==(const Letter&) const = default;
  };
  std::vector<Letter> letters;
  bool operator==(const TranslationWord&) const = default;
};

struct AlphaResult {
  RightLoopTable twisted;
  TranslationWord word;  // generators are element indices of the base table
  Permutation realized;
};

// The four-letter word R'_b (R'_{1/a})^-1 R'_b (R'_{1/a})^-1 over the twist
// of the base by B = {1/a, b}, realized as a permutation (rightmost letter
// applied first).  The base must be a commutative I.P. loop and a, b
// non-identity; violations raise PreconditionFailed naming the property.
AlphaResult build_alpha(const RightLoopTable& base, int a, int b, const Permutation& eta);

struct AlphaIdentityReport {
  std::vector<int> mismatch_points;
  bool ok() const { return mismatch_points.empty(); }
};

// Pointwise comparison of the realized alpha with L_b L_a L_b L_a built
// from the base loop's left translations.  eta cancels between each letter
// and the inverse that follows it, so the result must be eta-independent.
AlphaIdentityReport alpha_identity_check(const RightLoopTable& base, int a, int b,
                                         const Permutation& eta);

struct SupportReport {
  std::uint64_t moved_count;
  std::vector<int> moved_points;
  bool is_identity;
};

SupportReport support(const Permutation& p);

struct MulGroupResult {
  std::uint64_t order;  // closure size found; a lower bound when !closed
  int generator_count;  // distinct right translations
  bool closed;
};

// Breadth-first closure of all right translations under composition and
// inversion.  Stops once the closure would exceed cap.
MulGroupResult right_mult_group(const RightLoopTable& table, std::uint64_t cap);

struct HomogeneityMap {
  int via;  // q = y/x, the left-translating element
  std::vector<int> images;
  bool bijective;  // left translations in a right loop need not be
                   // bijections; reported, never assumed
};

// t -> (y/x) * t; always sends x to y.
HomogeneityMap homogeneity_map(const RightLoopTable& table, int x, int y);

struct PermWitnessHit {
  TranslationWord word;  // generator = index into the generator vector
  Permutation realized;
  SupportReport moved;
};

struct AffineWitnessHit {
  TranslationWord word;
  AffineMap realized;
  SupportClass moved;
};

// Breadth-first search over words in the generators and their inverses, up
// to max_len letters, deduplicated by realized map (the element, not the
// spelling, carries the support).  Returns every non-identity element whose
// support is finite and at most max_support, sorted by (support, word
// length, word); an empty result is meaningful.
std::vector<PermWitnessHit> witness_search(const std::vector<Permutation>& generators,
                                           int max_len, std::uint64_t max_support);
std::vector<AffineWitnessHit> witness_search(const std::vector<AffineMap>& generators,
                                             int max_len, std::uint64_t max_support);

// All distinct maps realized by words up to max_len (identity included),
// in deterministic order.  The affine witness search reduces to classifying
// these.
std::vector<AffineMap> affine_word_closure(const std::vector<AffineMap>& generators,
                                           int max_len);

}  // namespace rloop
