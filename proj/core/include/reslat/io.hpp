#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/graph.hpp"

namespace reslat {

// Result of parsing an algebra text file. Syntax problems land in
// diagnostics (with line numbers); axiom violations land in report.
struct ParseResult {
    std::optional<ResiduatedLattice> algebra;
    ValidationReport report;
    std::vector<std::string> diagnostics;
    std::vector<std::string> names; // resolved element names (empty on syntax error)

    explicit operator bool() const { return algebra.has_value(); }
};

// Grammar:
//   size N
//   elements n0 n1 ... n{N-1}      (optional; defaults e0..e{N-1})
//   order                          (N rows of N 0/1 entries, row x col y: x <= y)
//   mult                           (N rows of N element names)
//   impl                           (optional, same shape as mult)
// '#' starts a comment line; blank lines are ignored. Element 0 is bottom,
// element N-1 is top.
ParseResult parse_algebra(const std::string &text);
ParseResult parse_algebra_file(const std::string &path);

// parse(serialize(a)) reproduces identical tables.
std::string serialize(const ResiduatedLattice &a);

// Deterministic DOT: vertices in canonical order, edges min-endpoint first.
std::string export_dot(const LabeledGraph &g, const std::string &name = "reslat");

// One JSON object per line, fixed key order, "inf" for infinite
// diameter/girth, hex-encoded keys.
std::string catalog_line(const CatalogRecord &rec);
std::string invariants_json(const GraphInvariants &inv);

} // namespace reslat
