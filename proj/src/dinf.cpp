#include "rloop/dinf.hpp"

#include <algorithm>
#include <ostream>

#include "rloop/errors.hpp"

namespace rloop {

ZBLoop::ZBLoop(std::vector<BigInt> b) : b_(std::move(b)) {
  std::sort(b_.begin(), b_.end());
  b_.erase(std::unique(b_.begin(), b_.end()), b_.end());
  for (const BigInt& v : b_)
    if (v.is_zero()) throw SpecViolation("B must not contain 0 (the identity)");
}

bool ZBLoop::in_b(const BigInt& k) const {
  return std::binary_search(b_.begin(), b_.end(), k);
}

BigInt ZBLoop::op(const BigInt& i, const BigInt& k) const {
  return in_b(k) ? k - i : i + k;
}

BigInt ZBLoop::right_divide(const BigInt& z, const BigInt& k) const {
  return in_b(k) ? k - z : z - k;
}

AffineMap ZBLoop::right_translation(const BigInt& k) const {
  return in_b(k) ? AffineMap::reflection(k) : AffineMap::translation(k);
}

DinfElement dinf_product(const DinfElement& a, const DinfElement& b) {
  // moving y^i1 past x^j2 flips the exponent's sign
  BigInt power = b.flip ? b.power - a.power : a.power + b.power;
  return DinfElement{a.flip != b.flip, std::move(power)};
}

DinfElement dinf_inverse(const DinfElement& a) {
  // (j,i)^-1 = (j, -(-1)^j i)
  return DinfElement{a.flip, a.flip ? a.power : -a.power};
}

std::ostream& operator<<(std::ostream& os, const DinfElement& e) {
  if (e.flip) os << "x";
  if (!e.power.is_zero())
    os << "y^" << e.power;
  else if (!e.flip)
    os << "1";
  return os;
}

BigInt transversal_op(const ZBLoop& loop, const BigInt& i, const BigInt& k) {
  DinfElement ti{loop.in_b(i), i};
  DinfElement tk{loop.in_b(k), k};
  DinfElement product = dinf_product(ti, tk);

  // right coset H·p = {p, x·p}; left-multiplying by x toggles the flip and
  // keeps the power, so both coset members share the power
  DinfElement candidates[2] = {product, DinfElement{!product.flip, product.power}};
  const DinfElement* hit = nullptr;
  for (const DinfElement& c : candidates) {
    if (c.flip == loop.in_b(c.power)) {
      if (hit) throw Error("coset met the transversal twice");
      hit = &c;
    }
  }
  if (!hit) throw Error("coset missed the transversal");
  return hit->power;
}

IsoReport isomorphism_check(const ZBLoop& loop, long window) {
  IsoReport report;
  BigInt bound(window);
  for (const BigInt& v : loop.b())
    if (v < -bound || bound < v)
      report.warnings.push_back("B element " + v.str() + " lies outside the window [-" +
                                std::to_string(window) + ", " + std::to_string(window) + "]");

  for (long i = -window; i <= window; ++i)
    for (long k = -window; k <= window; ++k) {
      BigInt bi(i), bk(k);
      BigInt via_transversal = transversal_op(loop, bi, bk);
      BigInt via_loop = loop.op(bi, bk);
      ++report.pairs_checked;
      if (via_transversal != via_loop)
        report.mismatches.push_back({std::move(bi), std::move(bk), std::move(via_transversal),
                                     std::move(via_loop)});
    }
  return report;
}

void write_dinf_window(std::ostream& out, const ZBLoop& loop, long window) {
  for (long i = -window; i <= window; ++i) {
    for (long k = -window; k <= window; ++k) {
      if (k > -window) out << " ";
      out << transversal_op(loop, BigInt(i), BigInt(k));
    }
    out << "\n";
  }
}

void write_dinf_looptab(std::ostream& out, const ZBLoop& loop, long window) {
  long n = 2 * window + 1;
  out << "# window [-" << window << ", " << window << "] of an infinite table; entries "
      << "outside the window are written as _\n";
  out << "# this is a truncation, not a right loop: boundary columns are partial\n";
  out << "looptab 1\n" << n << "\n";
  // identity first per the format, then the rest in numeric order
  out << "0";
  for (long i = -window; i <= window; ++i)
    if (i != 0) out << " " << i;
  out << "\n";
  BigInt lo(-window), hi(window);
  auto emit_row = [&](long i) {
    bool first = true;
    auto cell = [&](long k) {
      BigInt v = loop.op(BigInt(i), BigInt(k));
      if (!first) out << " ";
      first = false;
      if (v < lo || hi < v)
        out << "_";
      else
        out << v;
    };
    cell(0);
    for (long k = -window; k <= window; ++k)
      if (k != 0) cell(k);
    out << "\n";
  };
  emit_row(0);
  for (long i = -window; i <= window; ++i)
    if (i != 0) emit_row(i);
}

}  // namespace rloop
