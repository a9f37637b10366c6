#pragma once

#include <iosfwd>
#include <optional>

#include "rloop/bigint.hpp"
#include "rloop/group.hpp"

namespace rloop {

// One chosen representative per right coset, in the coset order of
// right_cosets(); chosen[0] is always the group identity (normalization).
struct Transversal {
  std::vector<int> chosen;
};

// Throws PreconditionFailed unless chosen picks exactly one element per
// coset and is normalized.
Transversal transversal_from_elements(const FiniteGroup& group, const Subgroup& subgroup,
                                      std::span<const int> elements);

// Streams every normalized right transversal.  The identity coset is pinned
// to the identity; the remaining cosets run through their members in index
// order, last coset fastest, so the sequence is lexicographic over the
// choice tuple and reproducible across runs.
class NrtEnumerator {
public:
  NrtEnumerator(const FiniteGroup& group, const Subgroup& subgroup);

  std::optional<Transversal> next();
  // |H| ^ (number of non-identity cosets)
  const BigInt& total() const { return total_; }
  const std::vector<std::vector<int>>& cosets() const { return cosets_; }

private:
  std::vector<std::vector<int>> cosets_;
  std::vector<std::size_t> odometer_;  // per non-identity coset
  BigInt total_;
  int identity_ = 0;
  bool done_ = false;
};

// The induced operation on the transversal: x ∘ y is the unique member of S
// in the right coset of x·y.  Result is a validated right loop whose
// elements inherit the group's names; its identity is element 0.
RightLoopTable induced_operation(const FiniteGroup& group, const Subgroup& subgroup,
                                 const Transversal& transversal);

// The decomposition data of a transversal: for x, y in S and h in H,
//   x·y = f(x,y) · (x∘y)          f(x,y) in H
//   x·h = sigma(x,h) · theta(x,h)  sigma in H, theta in S
// Stored densely; indices refer to s_elements / h_elements.
struct CGroupoidData {
  std::vector<int> s_elements;  // group element ids, coset order
  std::vector<int> h_elements;  // group element ids, ascending
  std::vector<int> f;           // |S| x |S|, values index h_elements
  std::vector<int> sigma;       // |S| x |H|, values index h_elements
  std::vector<int> theta;       // |S| x |H|, values index s_elements

  int s_count() const { return static_cast<int>(s_elements.size()); }
  int h_count() const { return static_cast<int>(h_elements.size()); }
  int f_at(int x, int y) const { return f[static_cast<std::size_t>(x) * s_elements.size() + y]; }
  int sigma_at(int x, int h) const {
    return sigma[static_cast<std::size_t>(x) * h_elements.size() + h];
  }
  int theta_at(int x, int h) const {
    return theta[static_cast<std::size_t>(x) * h_elements.size() + h];
  }
};

// Extracts (f, sigma, theta) and re-verifies the reconstruction identities
// x·y == f(x,y)·(x∘y) and x·h == sigma(x,h)·theta(x,h) for every pair
// before returning.
CGroupoidData c_groupoid(const FiniteGroup& group, const Subgroup& subgroup,
                         const Transversal& transversal);

struct ThetaActionReport {
  struct Failure {
    int x, h1, h2;  // indices into s_elements / h_elements; h2 < 0 marks a
                    // failing theta(x, 1) = x check
  };
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

// Verifies that theta is a right action: theta(theta(x,h),h') equals
// theta(x, h·h') for all triples and theta(x, 1) = x.
ThetaActionReport theta_action_check(const FiniteGroup& group, const CGroupoidData& data);

// Line-oriented export: sections "f:", "sigma:", "theta:", one mapping per
// line using group element names, ordered by index.
void write_cgroupoid(std::ostream& out, const FiniteGroup& group, const CGroupoidData& data);

}  // namespace rloop
