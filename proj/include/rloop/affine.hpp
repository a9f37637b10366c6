#pragma once

#include <compare>
#include <iosfwd>

#include "rloop/bigint.hpp"

namespace rloop {

// x -> sign*x + offset with sign in {+1, -1}; the right translations of the
// twisted integer loops all have this shape, and the shape is closed under
// composition and inverse, so symbolic word arithmetic stays exact.
class AffineMap {
public:
  AffineMap() : sign_(1) {}
  AffineMap(int sign, BigInt offset);

  static AffineMap identity() { return AffineMap(); }
  static AffineMap translation(BigInt offset) { return AffineMap(1, std::move(offset)); }
  static AffineMap reflection(BigInt offset) { return AffineMap(-1, std::move(offset)); }

  int sign() const { return sign_; }
  const BigInt& offset() const { return offset_; }

  BigInt apply(const BigInt& x) const;
  bool is_identity() const { return sign_ == 1 && offset_.is_zero(); }

  // (f * g)(x) == f(g(x)); offsets combine as sign(f)*offset(g) + offset(f)
  friend AffineMap operator*(const AffineMap& f, const AffineMap& g);
  AffineMap inverse() const;  // (s, c) -> (s, -s*c)

  std::strong_ordering operator<=>(const AffineMap& rhs) const = default;

private:
  int sign_;
  BigInt offset_;
};

std::ostream& operator<<(std::ostream& os, const AffineMap& map);

// Exact moved-point census of an affine map on the integers:
//   identity            -> empty
//   translation, c != 0 -> all integers
//   reflection x -> c-x -> everything except c/2 when c is even,
//                          all integers when c is odd
enum class SupportTag { empty, all_integers, all_but_one };

struct SupportClass {
  SupportTag tag;
  BigInt fixed_point;  // meaningful only for all_but_one
  bool is_finite() const { return tag == SupportTag::empty; }
};

SupportClass affine_support(const AffineMap& map);

std::ostream& operator<<(std::ostream& os, const SupportClass& support);

}  // namespace rloop
