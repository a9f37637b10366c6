#include "rloop/table.hpp"

#include <sstream>
#include <unordered_set>

#include "rloop/errors.hpp"

namespace rloop {

bool is_legal_element_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '+' || c == '-';
    if (!ok) return false;
  }
  return true;
}

CayleyTable::CayleyTable(std::vector<std::string> names, std::vector<int> entries)
    : order_(static_cast<int>(names.size())),
      names_(std::move(names)),
      entries_(std::move(entries)) {
  if (order_ == 0) throw StructuralError("table has no elements");
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names_) {
    if (!is_legal_element_name(name))
      throw StructuralError("illegal element name '" + name + "'");
    if (!seen.insert(name).second)
      throw StructuralError("duplicate element name '" + name + "'");
  }
  if (entries_.size() != static_cast<std::size_t>(order_) * order_) {
    std::ostringstream msg;
    msg << "table is not square: got " << entries_.size() << " entries for order " << order_;
    throw StructuralError(msg.str());
  }
  for (int v : entries_)
    if (v < 0 || v >= order_)
      throw StructuralError("table entry index " + std::to_string(v) + " out of range");
}

std::optional<int> CayleyTable::index_of(std::string_view name) const {
  for (int i = 0; i < order_; ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

std::vector<int> CayleyTable::column(int u) const {
  std::vector<int> out(static_cast<std::size_t>(order_));
  for (int r = 0; r < order_; ++r) out[static_cast<std::size_t>(r)] = entry(r, u);
  return out;
}

std::vector<int> CayleyTable::row(int u) const {
  std::vector<int> out(static_cast<std::size_t>(order_));
  for (int c = 0; c < order_; ++c) out[static_cast<std::size_t>(c)] = entry(u, c);
  return out;
}

std::string_view table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::right_loop: return "right-loop";
    case TableKind::loop: return "loop";
    case TableKind::group: return "group";
  }
  return "?";
}

std::optional<TableKind> table_kind_from_name(std::string_view name) {
  if (name == "right-loop") return TableKind::right_loop;
  if (name == "loop") return TableKind::loop;
  if (name == "group") return TableKind::group;
  return std::nullopt;
}

namespace {

// Finds the first pair of rows colliding in column c, if any.
std::optional<std::pair<int, int>> column_collision(const CayleyTable& t, int c) {
  int n = t.order();
  std::vector<int> first_row(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    int v = t.entry(r, c);
    if (first_row[static_cast<std::size_t>(v)] >= 0)
      return std::make_pair(first_row[static_cast<std::size_t>(v)], r);
    first_row[static_cast<std::size_t>(v)] = r;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> row_collision(const CayleyTable& t, int r) {
  int n = t.order();
  std::vector<int> first_col(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < n; ++c) {
    int v = t.entry(r, c);
    if (first_col[static_cast<std::size_t>(v)] >= 0)
      return std::make_pair(first_col[static_cast<std::size_t>(v)], c);
    first_col[static_cast<std::size_t>(v)] = c;
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate(const CayleyTable& table, int identity, TableKind kind) {
  if (identity < 0 || identity >= table.order())
    throw StructuralError("identity index out of range");

  ValidationReport report{kind, {}};
  int n = table.order();
  auto nm = [&](int i) -> const std::string& { return table.name(i); };

  for (int c = 0; c < n; ++c)
    if (table.entry(identity, c) != c)
      report.violations.push_back(
          {"identity-left", "1*" + nm(c) + " = " + nm(table.entry(identity, c)) + ", expected " + nm(c)});
  for (int r = 0; r < n; ++r)
    if (table.entry(r, identity) != r)
      report.violations.push_back(
          {"identity-right", nm(r) + "*1 = " + nm(table.entry(r, identity)) + ", expected " + nm(r)});

  for (int c = 0; c < n; ++c)
    if (auto hit = column_collision(table, c))
      report.violations.push_back(
          {"column-bijective", "column " + nm(c) + ": rows " + nm(hit->first) + " and " +
                                   nm(hit->second) + " both map to " + nm(table.entry(hit->first, c))});

  if (kind == TableKind::loop || kind == TableKind::group) {
    for (int r = 0; r < n; ++r)
      if (auto hit = row_collision(table, r))
        report.violations.push_back(
            {"row-bijective", "row " + nm(r) + ": columns " + nm(hit->first) + " and " +
                                  nm(hit->second) + " both map to " + nm(table.entry(r, hit->first))});
  }

  if (kind == TableKind::group) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (table.entry(table.entry(x, y), z) != table.entry(x, table.entry(y, z))) {
            report.violations.push_back(
                {"associativity", "(" + nm(x) + "*" + nm(y) + ")*" + nm(z) + " = " +
                                      nm(table.entry(table.entry(x, y), z)) + " but " + nm(x) +
                                      "*(" + nm(y) + "*" + nm(z) + ") = " +
                                      nm(table.entry(x, table.entry(y, z)))});
          }
        }
    for (int x = 0; x < n; ++x) {
      bool has_inverse = false;
      for (int q = 0; q < n; ++q)
        if (table.entry(x, q) == identity && table.entry(q, x) == identity) {
          has_inverse = true;
          break;
        }
      if (!has_inverse)
        report.violations.push_back({"inverses", nm(x) + " has no two-sided inverse"});
    }
  }

  return report;
}

Permutation LeftTranslation::perm() const {
  if (!bijective) throw Error("left translation is not a bijection");
  return Permutation(images);
}

RightLoopTable::RightLoopTable(CayleyTable table, int identity)
    : table_(std::move(table)), identity_(identity) {
  ValidationReport report = validate(table_, identity_, TableKind::right_loop);
  if (!report.valid()) {
    std::string msg = "not a right loop:";
    for (const auto& v : report.violations) msg += " [" + v.axiom + "] " + v.message + ";";
    throw StructuralError(msg);
  }
}

int RightLoopTable::right_divide(int y, int x) const {
  for (int q = 0; q < order(); ++q)
    if (op(q, x) == y) return q;
  // column bijectivity makes this unreachable
  throw Error("right division failed on a validated table");
}

int RightLoopTable::left_divide(int x, int y) const {
  LeftTranslation row = left_translation(x);
  if (!row.bijective) throw NotLeftSolvable(name(x));
  for (int q = 0; q < order(); ++q)
    if (row.images[static_cast<std::size_t>(q)] == y) return q;
  throw Error("left division failed on a bijective row");
}

Permutation RightLoopTable::right_translation(int u) const {
  return Permutation(table_.column(u));
}

LeftTranslation RightLoopTable::left_translation(int u) const {
  std::vector<int> images = table_.row(u);
  bool bij = is_bijection(images);
  return LeftTranslation{std::move(images), bij};
}

}  // namespace rloop
