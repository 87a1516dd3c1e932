#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrw/matrix.hpp"

namespace lrw {

// A sigma-symmetric graph over a finite field: adjacency matrix M with
// M[x,y] = sigma(M[y,x]) and a zero diagonal. Vertices carry integer labels.
class SGraph {
public:
    SGraph() = default;
    SGraph(FieldPtr f, SesquiMorphism sigma, std::vector<int> vertices);
    static SGraph from_matrix(const FMatrix& adj, const SesquiMorphism& sigma);

    int n() const { return base_.rows(); }
    const std::vector<int>& vertices() const { return base_.row_labels(); }
    const FieldPtr& field() const { return base_.field(); }
    const SesquiMorphism& sigma() const { return sigma_; }
    const FMatrix& matrix() const { return base_; }

    bool has_vertex(int v) const { return base_.row_index(v) >= 0; }
    elem adj(int x, int y) const;
    // Writes both oriented entries: [x,y] = v and [y,x] = sigma(v).
    void set_edge(int x, int y, elem v);

    std::vector<int> neighbors(int x) const;

    SGraph induced(const std::vector<int>& keep) const;
    SGraph without(int v) const;
    SGraph relabeled(const std::map<int, int>& to) const;

    SGraph pivot(int x, int y) const;
    SGraph local_complement(int x) const;

    int cutrank(const std::vector<int>& x_set) const;

    std::vector<std::vector<int>> components() const;
    bool is_connected() const;

    bool operator==(const SGraph& o) const;

private:
    FMatrix base_;
    SesquiMorphism sigma_;
};

// Lexicographically minimal serialization of the adjacency matrix over all
// vertex orders. Equal strings characterize simple isomorphism.
std::string canonical_form(const SGraph& g, int limit = 12);
// The vertex order realizing canonical_form.
std::vector<int> canonical_order(const SGraph& g, int limit = 12);
// Entry-preserving bijection g -> h, if one exists.
std::optional<std::map<int, int>> simply_isomorphic(const SGraph& g, const SGraph& h,
                                                    int limit = 12);

struct FTriple {
    std::vector<elem> v1, v2;
    elem t = 0;

    friend bool operator<(const FTriple& a, const FTriple& b) {
        if (a.v1 != b.v1) return a.v1 < b.v1;
        if (a.v2 != b.v2) return a.v2 < b.v2;
        return a.t < b.t;
    }
    friend bool operator==(const FTriple& a, const FTriple& b) {
        return a.v1 == b.v1 && a.v2 == b.v2 && a.t == b.t;
    }
};

// Multiset whose multiplicities live in 1..char-1; adding the char-th copy
// removes the element entirely.
class FMultiset {
public:
    FMultiset() = default;
    explicit FMultiset(int characteristic) : char_(characteristic) {}

    void add(const FTriple& tr);
    int multiplicity(const FTriple& tr) const;
    const std::map<FTriple, int>& items() const { return items_; }
    bool empty() const { return items_.empty(); }
    int characteristic() const { return char_; }

    bool operator==(const FMultiset& o) const { return items_ == o.items_; }

private:
    int char_ = 2;
    std::map<FTriple, int> items_;
};

// (G, gamma, mu): vertex labels in F^s plus a boundary multiset recording the
// pending pivot corrections for a future merge.
class BoundariedSGraph {
public:
    BoundariedSGraph() = default;
    BoundariedSGraph(SGraph base, int s, std::map<int, std::vector<elem>> gamma,
                     FMultiset mu);
    static BoundariedSGraph plain(SGraph base, int s,
                                  std::map<int, std::vector<elem>> gamma);

    const SGraph& base() const { return base_; }
    int s() const { return s_; }
    const std::map<int, std::vector<elem>>& gamma() const { return gamma_; }
    const std::vector<elem>& gamma_of(int v) const;
    const FMultiset& mu() const { return mu_; }

    bool full_rank_labels() const;

    BoundariedSGraph pivot(int x, int y) const;
    BoundariedSGraph without(int v) const;
    BoundariedSGraph induced(const std::vector<int>& keep) const;

private:
    SGraph base_;
    int s_ = 0;
    std::map<int, std::vector<elem>> gamma_;
    FMultiset mu_;
};

// The labelled merge: adjacency inside each operand is kept, cross entries are
// gamma_G(v).m.gamma_H(w)^t, and the H block absorbs g's boundary as a chain
// of star corrections before the diagonal is forced back to zero.
BoundariedSGraph merge_labelled(const BoundariedSGraph& g, const BoundariedSGraph& h,
                                const FMatrix& m);
SGraph merge(const BoundariedSGraph& g, const BoundariedSGraph& h, const FMatrix& m);

// a . m . b^t for row vectors a, b; lengths must match m's shape.
elem bilinear(const std::vector<elem>& a, const FMatrix& m, const std::vector<elem>& b);

} // namespace lrw
