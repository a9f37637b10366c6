#include "rloop/affine.hpp"

#include <ostream>
#include <stdexcept>

namespace rloop {

AffineMap::AffineMap(int sign, BigInt offset) : sign_(sign), offset_(std::move(offset)) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("affine sign must be +1 or -1");
}

BigInt AffineMap::apply(const BigInt& x) const {
  return sign_ > 0 ? x + offset_ : offset_ - x;
}

AffineMap operator*(const AffineMap& f, const AffineMap& g) {
  BigInt offset = f.sign_ > 0 ? g.offset_ + f.offset_ : f.offset_ - g.offset_;
  return AffineMap(f.sign_ * g.sign_, std::move(offset));
}

AffineMap AffineMap::inverse() const {
  return AffineMap(sign_, sign_ > 0 ? -offset_ : offset_);
}

std::ostream& operator<<(std::ostream& os, const AffineMap& map) {
  if (map.sign() > 0)
    os << "x+" << map.offset();
  else
    os << map.offset() << "-x";
  return os;
}

SupportClass affine_support(const AffineMap& map) {
  if (map.is_identity()) return {SupportTag::empty, BigInt()};
  if (map.sign() > 0) return {SupportTag::all_integers, BigInt()};
  // fixed points of x -> c-x solve 2x = c
  if (map.offset().is_even()) return {SupportTag::all_but_one, map.offset().half()};
  return {SupportTag::all_integers, BigInt()};
}

std::ostream& operator<<(std::ostream& os, const SupportClass& support) {
  switch (support.tag) {
    case SupportTag::empty: os << "empty"; break;
    case SupportTag::all_integers: os << "all-integers"; break;
    case SupportTag::all_but_one: os << "all-but-one(" << support.fixed_point << ")"; break;
  }
  return os;
}

}  // namespace rloop
