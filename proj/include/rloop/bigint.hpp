#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rloop {

// Exact signed integer of unbounded width.  Offsets of affine maps and
// exponents of dihedral elements grow under word composition, so the whole
// symbolic layer runs on this type instead of a fixed-width integer.
//
// Only the operations the algebra needs are provided: addition, subtraction,
// negation, comparison, parity, exact halving, small multiplication and
// powering (transversal counting).
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t value);

  // Accepts an optional leading '+' or '-' followed by decimal digits.
  static BigInt from_string(std::string_view text);

  static BigInt pow(std::uint32_t base, unsigned exponent);

  std::string str() const;
  std::optional<std::int64_t> to_int64() const;

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_even() const;

  // Quotient by two, rounding toward zero.  Callers only halve even values.
  BigInt half() const;

  BigInt mul_small(std::uint32_t factor) const;

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }

  std::strong_ordering operator<=>(const BigInt& rhs) const;
  bool operator==(const BigInt& rhs) const = default;

private:
  using Mag = std::vector<std::uint32_t>;

  static constexpr std::uint32_t kBase = 1'000'000'000;
  static constexpr int kBaseDigits = 9;

  // sign_ in {-1, 0, +1}; mag_ holds base-1e9 limbs, least significant first,
  // no trailing zero limbs, empty exactly when sign_ == 0.
  int sign_ = 0;
  Mag mag_;

  BigInt(int sign, Mag mag);

  static int compare_mag(const Mag& a, const Mag& b);
  static Mag add_mag(const Mag& a, const Mag& b);
  static Mag sub_mag(const Mag& a, const Mag& b);  // requires a >= b
};

std::ostream& operator<<(std::ostream& os, const BigInt& value);

}  // namespace rloop
