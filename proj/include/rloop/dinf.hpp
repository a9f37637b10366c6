#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rloop/affine.hpp"
#include "rloop/bigint.hpp"

namespace rloop {

// The twisted integer loop Z^B: integers under i ∘ k = i+k for k outside B
// and k-i for k in B, where B is a finite set of nonzero integers.  B may be
// empty, which leaves plain integer addition.  The carrier is all of Z; B's
// characteristic function is the whole representation.
class ZBLoop {
public:
  ZBLoop() = default;
  // Throws SpecViolation if B contains zero.
  explicit ZBLoop(std::vector<BigInt> b);

  const std::vector<BigInt>& b() const { return b_; }
  bool in_b(const BigInt& k) const;

  // i ∘ k, exact
  BigInt op(const BigInt& i, const BigInt& k) const;
  // unique q with q ∘ k == z
  BigInt right_divide(const BigInt& z, const BigInt& k) const;
  // right translation by k as an affine map: x+k for k outside B, k-x inside
  AffineMap right_translation(const BigInt& k) const;

private:
  std::vector<BigInt> b_;  // sorted, unique, nonzero
};

// Element x^j y^i of the infinite dihedral group <x, y | x^2 = 1,
// xyx = y^-1>: flip is the exponent of x, power the exponent of y.
struct DinfElement {
  bool flip = false;
  BigInt power;

  bool operator==(const DinfElement&) const = default;
};

// (j1,i1)·(j2,i2) = (j1 xor j2, (-1)^j2 * i1 + i2)
DinfElement dinf_product(const DinfElement& a, const DinfElement& b);
DinfElement dinf_inverse(const DinfElement& a);

std::ostream& operator<<(std::ostream& os, const DinfElement& e);

// The transversal T_B = { x^χB(i) y^i : i in Z } of H = {1, x} in the
// infinite dihedral group, with its induced operation: the product t_i t_k
// is computed in the group and the result's coset is intersected with T_B.
// Returns the index of the unique representative found.
BigInt transversal_op(const ZBLoop& loop, const BigInt& i, const BigInt& k);

// Compares transversal_op against the loop operation on the whole window
// [-N, N] x [-N, N].  Mismatches must be empty; a warning is recorded when
// B reaches outside the window.
struct IsoReport {
  struct Mismatch {
    BigInt i, k, via_transversal, via_loop;
  };
  std::vector<Mismatch> mismatches;
  std::vector<std::string> warnings;
  std::uint64_t pairs_checked = 0;
  bool ok() const { return mismatches.empty(); }
};

IsoReport isomorphism_check(const ZBLoop& loop, long window);

// The induced table on the window, one row per i in [-N, N], entries
// separated by single spaces.
void write_dinf_window(std::ostream& out, const ZBLoop& loop, long window);

// LOOPTAB-shaped dump of the window.  Entries that land outside [-N, N]
// are written as '_': the file is a truncation of an infinite table, not a
// right loop, and the header comment says so.  The standard reader rejects
// it by design.
void write_dinf_looptab(std::ostream& out, const ZBLoop& loop, long window);

}  // namespace rloop
