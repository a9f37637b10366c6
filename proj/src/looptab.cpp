#include "rloop/looptab.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "rloop/errors.hpp"

namespace rloop {

namespace {

// Whitespace-separated tokens with '#'-to-end-of-line comments stripped,
// each tagged with its line for error messages.
struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back({tok, lineno});
  }
  return tokens;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

LoopFile read_looptab(std::istream& in, const std::string& source) {
  std::vector<Token> tokens = tokenize(in);
  std::size_t pos = 0;
  auto next = [&](const char* expected) -> const Token& {
    if (pos >= tokens.size()) {
      int line = tokens.empty() ? 1 : tokens.back().line;
      fail(source, line, std::string("unexpected end of file, expected ") + expected);
    }
    return tokens[pos++];
  };

  const Token& magic = next("'looptab' or 'grouptab'");
  FileKind declared;
  if (magic.text == "looptab")
    declared = FileKind::looptab;
  else if (magic.text == "grouptab")
    declared = FileKind::grouptab;
  else
    fail(source, magic.line, "bad magic '" + magic.text + "', expected 'looptab' or 'grouptab'");

  const Token& version = next("format version");
  if (version.text != "1") fail(source, version.line, "unsupported version '" + version.text + "'");

  const Token& order_tok = next("table order");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(order_tok.text, &used);
    if (used != order_tok.text.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    fail(source, order_tok.line, "bad table order '" + order_tok.text + "'");
  }
  if (n <= 0) fail(source, order_tok.line, "table order must be positive");

  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Token& t = next("element name");
    if (!is_legal_element_name(t.text))
      fail(source, t.line, "illegal element name '" + t.text + "'");
    if (!index.emplace(t.text, i).second)
      fail(source, t.line, "duplicate element name '" + t.text + "'");
    names.push_back(t.text);
  }

  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Token& t = next("table entry");
      auto it = index.find(t.text);
      if (it == index.end()) fail(source, t.line, "unknown element name '" + t.text + "'");
      entries.push_back(it->second);
    }

  if (pos != tokens.size())
    fail(source, tokens[pos].line, "trailing content '" + tokens[pos].text + "'");

  return LoopFile{CayleyTable(std::move(names), std::move(entries)), 0, declared};
}

LoopFile read_looptab_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_looptab(in, path);
}

void write_looptab(std::ostream& out, const CayleyTable& table, int identity,
                   FileKind kind) {
  int n = table.order();
  // old index -> output position, identity forced to the front
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(identity);
  for (int i = 0; i < n; ++i)
    if (i != identity) order.push_back(i);

  for (const auto& name : table.names())
    if (!is_legal_element_name(name))
      throw StructuralError("element name '" + name + "' is not serializable");

  out << (kind == FileKind::looptab ? "looptab" : "grouptab") << " 1\n" << n << "\n";
  for (int i = 0; i < n; ++i) out << (i ? " " : "") << table.name(order[static_cast<std::size_t>(i)]);
  out << "\n";
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int v = table.entry(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(c)]);
      out << (c ? " " : "") << table.name(v);
    }
    out << "\n";
  }
}

std::string looptab_string(const CayleyTable& table, int identity, FileKind kind) {
  std::ostringstream out;
  write_looptab(out, table, identity, kind);
  return out.str();
}

}  // namespace rloop
