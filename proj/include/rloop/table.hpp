#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rloop/permutation.hpp"

namespace rloop {

// Finite magma presented by its Cayley table.  Elements are dense indices
// into a name table; entry(r, c) is the product r * c.
class CayleyTable {
public:
  // Throws StructuralError on duplicate/empty/illegal names, wrong entry
  // count or out-of-range indices.  Legal name characters: [A-Za-z0-9_+-].
  CayleyTable(std::vector<std::string> names, std::vector<int> entries);

  int order() const { return order_; }
  int entry(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * order_ + col];
  }
  const std::string& name(int index) const { return names_[static_cast<std::size_t>(index)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  // Column of u as a map r -> r*u; a permutation whenever the table is a
  // right loop.
  std::vector<int> column(int u) const;
  std::vector<int> row(int u) const;

  bool operator==(const CayleyTable&) const = default;

private:
  int order_;
  std::vector<std::string> names_;
  std::vector<int> entries_;  // row-major, order_ x order_
};

bool is_legal_element_name(std::string_view name);

enum class TableKind { right_loop, loop, group };

std::string_view table_kind_name(TableKind kind);
std::optional<TableKind> table_kind_from_name(std::string_view name);

struct Violation {
  std::string axiom;    // stable token, e.g. "column-bijective"
  std::string message;  // human-readable, includes the witness
};

struct ValidationReport {
  TableKind kind;
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Exhaustive axiom check.  Always reports every violation found, with a
// concrete witness in each message:
//   right_loop: two-sided identity, every column bijective
//   loop:       additionally every row bijective
//   group:      additionally associativity (n^3 triples) and two-sided
//               inverses
ValidationReport validate(const CayleyTable& table, int identity, TableKind kind);

// Row map of a single element; bijective iff the element is left-invertible
// everywhere.
struct LeftTranslation {
  std::vector<int> images;
  bool bijective;
  // Throws Error when not bijective.
  Permutation perm() const;
};

// A validated right loop.  Construction checks the right-loop axioms and
// throws StructuralError (carrying the report) when they fail; all later
// operations may rely on column bijectivity.
class RightLoopTable {
public:
  RightLoopTable(CayleyTable table, int identity);

  const CayleyTable& table() const { return table_; }
  int identity() const { return identity_; }
  int order() const { return table_.order(); }
  int op(int x, int y) const { return table_.entry(x, y); }
  const std::string& name(int index) const { return table_.name(index); }

  // unique q with q * x == y
  int right_divide(int y, int x) const;
  // unique q with x * q == y; throws NotLeftSolvable when x's row is not a
  // bijection
  int left_divide(int x, int y) const;

  Permutation right_translation(int u) const;
  LeftTranslation left_translation(int u) const;

  bool operator==(const RightLoopTable&) const = default;

private:
  CayleyTable table_;
  int identity_;
};

}  // namespace rloop
