#pragma once

#include <utility>
#include <vector>

#include "lrw/matrix.hpp"
#include "lrw/minors.hpp"

namespace lrw {

// A matroid given by a representation matrix over a finite field. Columns are
// labeled by ground-set elements; the matrix is kept in full row rank form, so
// rank() is just the row count. Loops are zero columns, parallel elements are
// proportional columns.
class RepMatroid {
public:
    RepMatroid() = default;

    // rep's column labels name the ground set. Rows are re-reduced, so callers
    // may pass any matrix whose column space is the intended representation.
    explicit RepMatroid(FMatrix rep);

    const FieldPtr& field() const { return rep_.field(); }
    const FMatrix& rep() const { return rep_; }
    const std::vector<int>& ground() const { return rep_.col_labels(); }
    int size() const { return static_cast<int>(ground().size()); }
    int rank() const { return rep_.rows(); }

    bool has_element(int e) const;

    // Rank of the span of the named columns.
    int rank_of(const std::vector<int>& x_set) const;

    // Connectivity lambda(X) = r(X) + r(E \ X) - r(E) + 1.
    int connectivity(const std::vector<int>& x_set) const;

private:
    FMatrix rep_{};
};

// Width of the best element order, measured as the maximum connectivity of a
// proper nonempty prefix. Matroids with at most one element have width 0.
std::pair<int, std::vector<int>> pathwidth_exact(const RepMatroid& m,
                                                 int limit_gf2 = 20,
                                                 int limit_other = 14);

int pathwidth_of_order(const RepMatroid& m, const std::vector<int>& order);

struct FundamentalGraph {
    SGraph graph;
    std::vector<int> part_a;  // the chosen base
    std::vector<int> part_b;  // the remaining elements
};

// Bipartite graph of the standard form (I | D) with respect to `base`:
// rows of D connect base elements to the rest, the mirrored block is -D^T,
// and sigma is negation. Cut-ranks of this graph sit one below connectivity.
FundamentalGraph fundamental_graph(const RepMatroid& m, const std::vector<int>& base);

// Delete `del`, contract `con`. A dependent contraction set contracts a
// maximal independent subset and deletes the rest, which matches the usual
// minor conventions.
RepMatroid matroid_minor(const RepMatroid& m, const std::vector<int>& del,
                         const std::vector<int>& con);

RepMatroid dual(const RepMatroid& m);

// A pivot sequence carrying fundamental_graph(m, b1) to a graph simply
// isomorphic to fundamental_graph(m, b2). Exists whenever b1, b2 are bases.
PivotSequence bases_pivot_equivalent(const RepMatroid& m, const std::vector<int>& b1,
                                     const std::vector<int>& b2,
                                     std::size_t limit = 200000);

// True when the matroid's width exceeds p but every single-element deletion
// and contraction brings it to at most p.
bool is_pathwidth_obstruction(const RepMatroid& m, int p);

// Rank-oracle isomorphism, checked by permutation search. Ground sets of more
// than nine elements are rejected.
bool matroid_isomorphic(const RepMatroid& a, const RepMatroid& b);

}  // namespace lrw
