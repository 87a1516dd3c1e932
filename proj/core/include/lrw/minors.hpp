#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/width.hpp"

namespace lrw {

struct PivotSequence {
    std::vector<std::pair<int, int>> pairs;
};

SGraph apply_pivots(const SGraph& g, const PivotSequence& seq);

/// All graphs reachable from the seed by the generating operation, found by
/// breadth-first search deduplicated on canonical forms. If the limit is hit
/// the member list is a proper subset and truncated is set.
struct Orbit {
    SGraph seed;
    std::vector<SGraph> members;
    std::set<std::string> forms;
    bool truncated = false;
};

Orbit pivot_orbit(const SGraph& g, std::size_t limit = 200000);
/// Local-complementation orbit; GF(2) only.
Orbit lc_orbit(const SGraph& g, std::size_t limit = 200000);

/// contains is exact when truncated is false; with a truncated orbit a
/// negative answer is only a lower bound.
struct MinorCheck {
    bool contains = false;
    bool truncated = false;
};

MinorCheck is_pivot_minor(const SGraph& h, const SGraph& g, std::size_t limit = 200000);
MinorCheck is_vertex_minor(const SGraph& h, const SGraph& g, std::size_t limit = 200000);

enum class MinorRelation { pivot, vertex };

/// One representative per isomorphism class of connected graphs over the
/// field/sigma with 1..n_max vertices, built by single-vertex extensions.
std::vector<SGraph> connected_classes(const FieldPtr& f, const SesquiMorphism& sigma,
                                      int n_max);

/// Connected graphs G with lrw(G) > p all of whose proper minors under the
/// relation have lrw at most p, up to isomorphism, sorted by size then
/// canonical form.
std::vector<SGraph> obstructions(const FieldPtr& f, const SesquiMorphism& sigma,
                                 MinorRelation relation, int p, int n_max,
                                 int threads = 1);

/// Constructive linking: a pivot sequence avoiding Y after which the induced
/// graph on X ∪ Y keeps cut value k at X. Returns nothing exactly when some
/// set sandwiched between X and V∖Y has cut-rank below k.
std::optional<PivotSequence> tutte_link(const SGraph& g, const std::vector<int>& x_set,
                                        const std::vector<int>& y_set, int k,
                                        int free_limit = 20);

/// Given equal-cut positions that are pairwise linked along the layout,
/// pivots the graph (right pair first) so that every consecutive pair
/// realizes its cut value already on X_{i_j} ∪ (V ∖ X_{i_{j+1}}).
SGraph normalize_linked(const SGraph& g, const LinearLayout& pi,
                        const std::vector<int>& indices);

} // namespace lrw
