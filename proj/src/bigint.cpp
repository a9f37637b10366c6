#include "rloop/bigint.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace rloop {

BigInt::BigInt(std::int64_t value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  // avoid overflow when negating INT64_MIN
  std::uint64_t mag = value < 0 ? ~static_cast<std::uint64_t>(value) + 1
                                : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    mag_.push_back(static_cast<std::uint32_t>(mag % kBase));
    mag /= kBase;
  }
}

BigInt::BigInt(int sign, Mag mag) : sign_(sign), mag_(std::move(mag)) {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::from_string(std::string_view text) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  if (pos == text.size())
    throw std::invalid_argument("integer literal has no digits: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad integer literal: '" + std::string(text) + "'");

  Mag mag;
  // consume digits in base-1e9 chunks from the least significant end
  for (std::size_t end = text.size(); end > pos;) {
    std::size_t begin = end >= pos + kBaseDigits ? end - kBaseDigits : pos;
    std::uint32_t limb = 0;
    for (std::size_t i = begin; i < end; ++i)
      limb = limb * 10 + static_cast<std::uint32_t>(text[i] - '0');
    mag.push_back(limb);
    end = begin;
  }
  return BigInt(sign, std::move(mag));
}

BigInt BigInt::pow(std::uint32_t base, unsigned exponent) {
  BigInt result(1);
  for (unsigned i = 0; i < exponent; ++i) result = result.mul_small(base);
  return result;
}

std::string BigInt::str() const {
  if (sign_ == 0) return "0";
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out += std::to_string(mag_.back());
  for (std::size_t i = mag_.size() - 1; i-- > 0;) {
    std::string limb = std::to_string(mag_[i]);
    out.append(kBaseDigits - limb.size(), '0');
    out += limb;
  }
  return out;
}

std::optional<std::int64_t> BigInt::to_int64() const {
  std::uint64_t acc = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    if (acc > (UINT64_MAX - mag_[i]) / kBase) return std::nullopt;
    acc = acc * kBase + mag_[i];
  }
  if (sign_ >= 0)
    return acc <= static_cast<std::uint64_t>(INT64_MAX)
               ? std::optional<std::int64_t>(static_cast<std::int64_t>(acc))
               : std::nullopt;
  if (acc > static_cast<std::uint64_t>(INT64_MAX) + 1) return std::nullopt;
  return static_cast<std::int64_t>(~acc + 1);
}

bool BigInt::is_even() const { return mag_.empty() || mag_[0] % 2 == 0; }

BigInt BigInt::half() const {
  Mag out(mag_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    std::uint64_t cur = carry * kBase + mag_[i];
    out[i] = static_cast<std::uint32_t>(cur / 2);
    carry = cur % 2;
  }
  return BigInt(sign_, std::move(out));
}

BigInt BigInt::mul_small(std::uint32_t factor) const {
  if (factor == 0 || sign_ == 0) return BigInt();
  Mag out;
  out.reserve(mag_.size() + 1);
  std::uint64_t carry = 0;
  for (std::uint32_t limb : mag_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
    out.push_back(static_cast<std::uint32_t>(cur % kBase));
    carry = cur / kBase;
  }
  while (carry != 0) {
    out.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  return BigInt(sign_, std::move(out));
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

int BigInt::compare_mag(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

BigInt::Mag BigInt::add_mag(const Mag& a, const Mag& b) {
  Mag out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < a.size() || i < b.size(); ++i) {
    std::uint32_t cur = carry;
    if (i < a.size()) cur += a[i];
    if (i < b.size()) cur += b[i];
    carry = cur >= kBase ? 1 : 0;
    out.push_back(cur >= kBase ? cur - kBase : cur);
  }
  if (carry) out.push_back(carry);
  return out;
}

BigInt::Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
  Mag out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                       (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    borrow = cur < 0 ? 1 : 0;
    out.push_back(static_cast<std::uint32_t>(cur < 0 ? cur + kBase : cur));
  }
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) return *this = rhs;
  if (sign_ == rhs.sign_) {
    mag_ = add_mag(mag_, rhs.mag_);
    return *this;
  }
  int cmp = compare_mag(mag_, rhs.mag_);
  if (cmp == 0) return *this = BigInt();
  if (cmp > 0) {
    mag_ = sub_mag(mag_, rhs.mag_);
  } else {
    mag_ = sub_mag(rhs.mag_, mag_);
    sign_ = rhs.sign_;
  }
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_)
    return sign_ < rhs.sign_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int cmp = compare_mag(mag_, rhs.mag_);
  if (sign_ < 0) cmp = -cmp;
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
  return os << value.str();
}

}  // namespace rloop
