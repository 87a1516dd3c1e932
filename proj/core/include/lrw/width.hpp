#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lrw/graph.hpp"

namespace lrw {

/// A vertex order together with its prefix cut values. cut_ranks[i-1] is the
/// cut after position i; there are n-1 of them.
struct LinearLayout {
    std::vector<int> order;
    std::vector<int> cut_ranks;
    int width = 0;
};

/// Builds the layout record for an order. Throws BadPermutation unless the
/// order is a permutation of the vertex set.
LinearLayout layout_of(const SGraph& g, const std::vector<int>& order);
int layout_width(const SGraph& g, const std::vector<int>& order);

/// Minimum linear width of an arbitrary cut function on n elements, by
/// dynamic programming over subsets. cut receives a bitmask of element
/// indices and is charged on proper nonempty prefixes only. Ties break
/// toward the smallest element index, so the order is deterministic.
std::pair<int, std::vector<int>> min_width_order(
    int n, const std::function<int(std::uint32_t)>& cut);

/// Exact linear rank-width with a witness layout. Disconnected graphs are
/// solved per component and the component orders concatenated.
std::pair<int, LinearLayout> lrw_exact(const SGraph& g, int limit_gf2 = 20,
                                       int limit_other = 14);

/// Whether cut positions i < j are linked: the cheapest cut between them
/// along the order is matched by no set sandwiched between the i-prefix and
/// the j-prefix. The sandwich side is brute-forced over the middle window.
bool is_linked(const SGraph& g, const LinearLayout& pi, int i, int j,
               int window_limit = 22);

/// An optimal-width layout in which every index pair is linked.
LinearLayout find_linked_layout(const SGraph& g);

/// Searches for c+1 cut positions of equal value s such that consecutive
/// ones see no smaller cut between them. Values s are tried in increasing
/// order and positions left to right, so the answer is deterministic.
std::optional<std::pair<int, std::vector<int>>> lambda_linked_sequence(
    const SGraph& g, const LinearLayout& pi, int c);

/// Per-position factorization of a layout's cuts: at position i the cut
/// matrix M_G[X_i, rest] equals N(i) * M(i) * P(i)^T expanded through
/// row_of / col_of, where N(i) and P(i) carry the distinct coefficient rows
/// of vertices over the position's row and column bases.
struct LinearEncoding {
    int t = 0;
    std::vector<int> order;
    std::vector<FMatrix> n_mats, p_mats, m_mats; // index i-1 holds position i
    std::vector<std::map<int, int>> row_of, col_of;
    int width = 0;
};

LinearEncoding encode(const SGraph& g, const LinearLayout& pi);

/// True iff e is structurally sound and reproduces every cut of g exactly.
bool decode_check(const SGraph& g, const LinearEncoding& e);

} // namespace lrw
