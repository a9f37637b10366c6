#pragma once

#include <iosfwd>
#include <string>

#include "rloop/table.hpp"

namespace rloop {

// LOOPTAB v1: line-oriented UTF-8 text, '#' starts a comment, blank lines
// ignored.
//   looptab 1            (or "grouptab 1")
//   n
//   n element names      (first name is the identity)
//   n lines of n names   (line r, token c is r*c)
//
// The parser enforces structure only (counts, known names, no duplicates);
// axiom checking is validate()'s job, so files holding broken tables can
// still be loaded for diagnosis.

enum class FileKind { looptab, grouptab };

struct LoopFile {
  CayleyTable table;
  int identity;  // always 0 by the format, kept explicit
  FileKind declared;
};

LoopFile read_looptab(std::istream& in, const std::string& source = "<input>");
LoopFile read_looptab_file(const std::string& path);

// Canonical form: no comments, single-space separation, one trailing newline
// per line.  If the identity is not element 0, elements are reordered so it
// comes first.
void write_looptab(std::ostream& out, const CayleyTable& table, int identity,
                   FileKind kind = FileKind::looptab);
std::string looptab_string(const CayleyTable& table, int identity,
                           FileKind kind = FileKind::looptab);

}  // namespace rloop
