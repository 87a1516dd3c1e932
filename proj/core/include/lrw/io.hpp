#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "lrw/graph.hpp"
#include "lrw/matroid.hpp"
#include "lrw/profiles.hpp"
#include "lrw/width.hpp"

namespace lrw {

// Line-oriented text formats. Every writer is deterministic: the same object
// always serializes to the same bytes. Parsers read by token, so extra
// whitespace and line breaks are interchangeable; failures throw ParseError.

/// `field <p> <k> <poly low-to-high>` then `sigma identity|negation|
/// frobenius <j>|table <q values>`.
void write_header(std::ostream& out, const Field& f, const SesquiMorphism& sigma);
std::pair<FieldPtr, SesquiMorphism> read_header(std::istream& in);

/// A graph file with or without the boundaried extension section.
struct GraphInput {
    SGraph base;
    std::optional<BoundariedSGraph> boundaried;
};

/// Header, `n <count>`, `names <ids>`, then the n x n adjacency grid.
void write_graph(std::ostream& out, const SGraph& g);
/// write_graph plus `s <s>`, `gamma` with one row of s values per vertex in
/// names order, and `mu <k>` with one `<v1> <v2> <t> <mult>` line per triple.
void write_boundaried(std::ostream& out, const BoundariedSGraph& g);
/// Accepts both layouts; `names` and the whole extension are optional.
GraphInput read_graph_input(std::istream& in);

/// Header, `elements <ids>`, `rows <r>`, then the r x |E| representation
/// grid. Reading re-reduces, so a written matroid reads back equal.
void write_matroid(std::ostream& out, const RepMatroid& m);
RepMatroid read_matroid(std::istream& in);

/// `width <k>`, `order <ids>`, `cuts <n-1 values>`.
void write_layout(std::ostream& out, const LinearLayout& lay);
LinearLayout read_layout(std::istream& in);

/// Certificate dump: per-position N/M/P blocks plus the row and column
/// coefficient assignments. Write-only; layouts are the exchange format.
void write_encoding(std::ostream& out, const LinearEncoding& e);

/// Header, `profile s <s> t <t>`, per-index Y1/Y2/Z1/Z2/M blocks, then the
/// mu section in the graph-file triple format.
void write_profile(std::ostream& out, const LinearSProfile& e);
LinearSProfile read_profile(std::istream& in);

/// File wrappers; parse failures are rethrown with the path prepended.
GraphInput load_graph_file(const std::string& path);
RepMatroid load_matroid_file(const std::string& path);
LinearLayout load_layout_file(const std::string& path);
LinearSProfile load_profile_file(const std::string& path);

} // namespace lrw
