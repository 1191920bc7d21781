#pragma once

#include <iosfwd>
#include <string>

#include "qhx/quiver.hpp"

namespace qhx {

/// Quiver text format (UTF-8, line-based):
///   # comment to end of line
///   quiver <name> | digraph <name> | graph <name>
///   v <id>
///   e <id> <source> <target>
/// Under a `graph` header each `e` line declares one undirected edge; the
/// reflection partner is materialized as `<id>~`, except that a loop becomes
/// a single reflection-fixed edge. `b <in> <out>` trailer lines (emitted by
/// the blowup command) are skipped. Identifiers must be nonempty, free of
/// whitespace and of '#'.
Quiver parse_quiver(std::istream& in);
Quiver parse_quiver(const std::string& text);

std::string serialize_quiver(const Quiver& g);

}  // namespace qhx
