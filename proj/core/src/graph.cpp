#include "lrw/graph.hpp"

#include <algorithm>
#include <queue>

namespace lrw {

SGraph::SGraph(FieldPtr f, SesquiMorphism sigma, std::vector<int> vertices)
    : base_(std::move(f), vertices, vertices), sigma_(std::move(sigma)) {
    if (!(*base_.field() == *sigma_.field()))
        fail("DimensionMismatch", "graph field differs from sigma's field");
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("VertexClash", "duplicate vertex id");
}

SGraph SGraph::from_matrix(const FMatrix& adj, const SesquiMorphism& sigma) {
    if (adj.rows() != adj.cols() || adj.row_labels() != adj.col_labels())
        fail("NotSquare", "adjacency matrix must be square with matching labels");
    if (!is_sigma_symmetric(adj, sigma))
        fail("NotSesqui", "adjacency matrix is not sigma-symmetric");
    for (int i = 0; i < adj.rows(); ++i)
        if (adj.at(i, i) != 0) fail("NotSesqui", "nonzero diagonal entry");
    SGraph g(adj.field(), sigma, adj.row_labels());
    g.base_ = adj;
    return g;
}

elem SGraph::adj(int x, int y) const {
    const int i = base_.row_index(x), j = base_.row_index(y);
    if (i < 0) fail("UnknownVertex", "vertex " + std::to_string(x));
    if (j < 0) fail("UnknownVertex", "vertex " + std::to_string(y));
    return base_.at(i, j);
}

void SGraph::set_edge(int x, int y, elem v) {
    const int i = base_.row_index(x), j = base_.row_index(y);
    if (i < 0) fail("UnknownVertex", "vertex " + std::to_string(x));
    if (j < 0) fail("UnknownVertex", "vertex " + std::to_string(y));
    if (i == j) {
        if (v != 0) fail("NotSesqui", "loops are not allowed");
        return;
    }
    base_.set(i, j, v);
    base_.set(j, i, sigma_(v));
}

std::vector<int> SGraph::neighbors(int x) const {
    const int i = base_.row_index(x);
    if (i < 0) fail("UnknownVertex", "vertex " + std::to_string(x));
    std::vector<int> out;
    for (int j = 0; j < n(); ++j)
        if (base_.at(i, j) != 0) out.push_back(vertices()[j]);
    return out;
}

SGraph SGraph::induced(const std::vector<int>& keep) const {
    SGraph g(field(), sigma_, keep);
    g.base_ = base_.submatrix(keep, keep);
    return g;
}

SGraph SGraph::without(int v) const {
    std::vector<int> keep;
    bool found = false;
    for (int u : vertices()) {
        if (u == v) { found = true; continue; }
        keep.push_back(u);
    }
    if (!found) fail("UnknownVertex", "vertex " + std::to_string(v));
    return induced(keep);
}

SGraph SGraph::relabeled(const std::map<int, int>& to) const {
    std::vector<int> labels;
    for (int v : vertices()) {
        auto it = to.find(v);
        if (it == to.end()) fail("UnknownVertex", "no image for " + std::to_string(v));
        labels.push_back(it->second);
    }
    SGraph g(field(), sigma_, labels); // ctor rejects duplicate targets
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j)
            g.base_.set(i, j, base_.at(i, j));
    return g;
}

SGraph SGraph::pivot(int x, int y) const {
    const int xi = base_.row_index(x), yi = base_.row_index(y);
    if (xi < 0) fail("UnknownVertex", "vertex " + std::to_string(x));
    if (yi < 0) fail("UnknownVertex", "vertex " + std::to_string(y));
    const elem mxy = base_.at(xi, yi);
    const elem myx = base_.at(yi, xi);
    if (mxy == 0) fail("NonEdgePivot", "no edge between the pivot pair");
    const Field& F = *field();
    const elem s1 = sigma_.sigma1();
    const elem inv_xy = F.inv(mxy), inv_yx = F.inv(myx);
    SGraph g(field(), sigma_, vertices());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) {
            if (i == j) continue;
            elem v;
            if (i == xi && j == yi) {
                v = F.neg(inv_yx);
            } else if (i == yi && j == xi) {
                v = F.neg(F.mul(F.mul(s1, s1), inv_xy));
            } else if (i == xi) {
                v = F.mul(base_.at(yi, j), inv_yx);
            } else if (i == yi) {
                v = F.mul(F.mul(s1, base_.at(xi, j)), inv_xy);
            } else if (j == xi) {
                v = F.mul(F.mul(s1, base_.at(i, yi)), inv_xy);
            } else if (j == yi) {
                v = F.mul(base_.at(i, xi), inv_yx);
            } else {
                v = F.sub(base_.at(i, j),
                          F.mul(F.mul(base_.at(i, xi), base_.at(yi, j)), inv_yx));
                v = F.sub(v, F.mul(F.mul(base_.at(i, yi), base_.at(xi, j)), inv_xy));
            }
            g.base_.set(i, j, v);
        }
    return g;
}

SGraph SGraph::local_complement(int x) const {
    if (field()->order() != 2)
        fail("FieldNotBinary", "local complementation needs GF(2)");
    const int xi = base_.row_index(x);
    if (xi < 0) fail("UnknownVertex", "vertex " + std::to_string(x));
    SGraph g = *this;
    for (int i = 0; i < n(); ++i) {
        if (i == xi || base_.at(xi, i) == 0) continue;
        for (int j = i + 1; j < n(); ++j) {
            if (j == xi || base_.at(xi, j) == 0) continue;
            const elem flipped = base_.at(i, j) ? 0 : 1;
            g.base_.set(i, j, flipped);
            g.base_.set(j, i, flipped);
        }
    }
    return g;
}

int SGraph::cutrank(const std::vector<int>& x_set) const {
    std::vector<char> inside(n(), 0);
    for (int v : x_set) {
        const int i = base_.row_index(v);
        if (i < 0) fail("UnknownVertex", "vertex " + std::to_string(v));
        inside[i] = 1;
    }
    std::vector<int> rows, cols;
    for (int i = 0; i < n(); ++i) (inside[i] ? rows : cols).push_back(vertices()[i]);
    return base_.submatrix(rows, cols).rank();
}

std::vector<std::vector<int>> SGraph::components() const {
    std::vector<char> seen(n(), 0);
    std::vector<std::vector<int>> comps;
    for (int start = 0; start < n(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            const int i = q.front();
            q.pop();
            comp.push_back(vertices()[i]);
            for (int j = 0; j < n(); ++j)
                if (!seen[j] && base_.at(i, j) != 0) { seen[j] = 1; q.push(j); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool SGraph::is_connected() const { return components().size() <= 1; }

bool SGraph::operator==(const SGraph& o) const {
    return field()->order() == o.field()->order() && vertices() == o.vertices() &&
           base_ == o.base_ && sigma_ == o.sigma_;
}

namespace {

// Branch-and-bound over vertex orders. Placing vertex v at position d appends
// the block (M[v,p_0], M[p_0,v], ..., M[v,p_{d-1}], M[p_{d-1},v]); the full
// concatenation is compared lexicographically. At each node only candidates
// achieving the minimal block can start a minimal completion, and candidates
// whose transposition is an automorphism are interchangeable.
struct CanonSearch {
    const FMatrix& m;
    int n;
    std::vector<int> cur, best;
    std::vector<elem> cur_str, best_str;
    std::vector<char> used;

    explicit CanonSearch(const FMatrix& mat) : m(mat), n(mat.rows()), used(n, 0) {}

    std::vector<elem> block_of(int v) const {
        std::vector<elem> b;
        b.reserve(cur.size() * 2);
        for (int p : cur) {
            b.push_back(m.at(v, p));
            b.push_back(m.at(p, v));
        }
        return b;
    }

    bool twins(int u, int v) const {
        if (m.at(u, v) != m.at(v, u)) return false;
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            if (m.at(u, w) != m.at(v, w) || m.at(w, u) != m.at(w, v)) return false;
        }
        return true;
    }

    void run() { descend(); }

    void descend() {
        // Prune against the incumbent: the comparison must use the current
        // incumbent at every node, since a completion inside this subtree may
        // replace it between sibling visits.
        if (!best.empty()) {
            for (size_t i = 0; i < cur_str.size(); ++i) {
                if (cur_str[i] < best_str[i]) break;
                if (cur_str[i] > best_str[i]) return;
            }
        }
        const int d = static_cast<int>(cur.size());
        if (d == n) {
            if (best.empty() || cur_str < best_str) { best = cur; best_str = cur_str; }
            return;
        }
        std::vector<int> cands;
        std::vector<elem> min_block;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            auto b = block_of(v);
            if (cands.empty() || b < min_block) {
                min_block = std::move(b);
                cands.assign(1, v);
            } else if (b == min_block) {
                cands.push_back(v);
            }
        }
        std::vector<int> reps;
        for (int v : cands) {
            bool dup = false;
            for (int u : reps)
                if (twins(u, v)) { dup = true; break; }
            if (!dup) reps.push_back(v);
        }
        for (int v : reps) {
            cur.push_back(v);
            used[v] = 1;
            cur_str.insert(cur_str.end(), min_block.begin(), min_block.end());
            descend();
            cur_str.resize(cur_str.size() - min_block.size());
            used[v] = 0;
            cur.pop_back();
        }
    }
};

CanonSearch canon_search(const SGraph& g, int limit) {
    if (g.n() > limit)
        fail("SizeLimitExceeded", "canonical form limited to " + std::to_string(limit) +
                                      " vertices");
    CanonSearch s(g.matrix());
    s.run();
    return s;
}

} // namespace

std::string canonical_form(const SGraph& g, int limit) {
    auto s = canon_search(g, limit);
    std::string out;
    out.push_back(static_cast<char>(g.field()->order()));
    for (int x = 0; x < g.field()->order(); ++x)
        out.push_back(static_cast<char>(g.sigma()(static_cast<elem>(x))));
    out.push_back(static_cast<char>(g.n()));
    for (elem e : s.best_str) out.push_back(static_cast<char>(e));
    return out;
}

std::vector<int> canonical_order(const SGraph& g, int limit) {
    auto s = canon_search(g, limit);
    std::vector<int> order;
    for (int i : s.best) order.push_back(g.vertices()[i]);
    return order;
}

std::optional<std::map<int, int>> simply_isomorphic(const SGraph& g, const SGraph& h,
                                                    int limit) {
    if (g.n() != h.n() || g.field()->order() != h.field()->order()) return std::nullopt;
    if (canonical_form(g, limit) != canonical_form(h, limit)) return std::nullopt;
    auto og = canonical_order(g, limit), oh = canonical_order(h, limit);
    std::map<int, int> witness;
    for (size_t i = 0; i < og.size(); ++i) witness[og[i]] = oh[i];
    return witness;
}

void FMultiset::add(const FTriple& tr) {
    auto it = items_.find(tr);
    const int cur = it == items_.end() ? 0 : it->second;
    if (cur + 1 >= char_) {
        if (it != items_.end()) items_.erase(it);
        if (cur + 1 > char_) fail("DimensionMismatch", "multiplicity above field characteristic");
        if (char_ == 1) fail("DimensionMismatch", "characteristic must be at least 2");
        if (cur + 1 == char_) return;
    }
    items_[tr] = cur + 1;
}

int FMultiset::multiplicity(const FTriple& tr) const {
    auto it = items_.find(tr);
    return it == items_.end() ? 0 : it->second;
}

BoundariedSGraph::BoundariedSGraph(SGraph base, int s,
                                   std::map<int, std::vector<elem>> gamma, FMultiset mu)
    : base_(std::move(base)), s_(s), gamma_(std::move(gamma)), mu_(std::move(mu)) {
    for (int v : base_.vertices()) {
        auto it = gamma_.find(v);
        if (it == gamma_.end())
            fail("UnknownVertex", "no label for vertex " + std::to_string(v));
        if (static_cast<int>(it->second.size()) != s_)
            fail("DimensionMismatch", "label length differs from s");
    }
    if (static_cast<int>(gamma_.size()) != base_.n())
        fail("UnknownVertex", "label map mentions vertices outside the graph");
    for (const auto& [tr, mult] : mu_.items()) {
        if (static_cast<int>(tr.v1.size()) != s_ || static_cast<int>(tr.v2.size()) != s_)
            fail("DimensionMismatch", "boundary triple vectors must have length s");
        if (tr.t == 0) fail("ZeroT", "boundary triple with t = 0");
        if (mult < 1 || mult >= base_.field()->characteristic())
            fail("DimensionMismatch", "boundary multiplicity out of range");
    }
}

BoundariedSGraph BoundariedSGraph::plain(SGraph base, int s,
                                         std::map<int, std::vector<elem>> gamma) {
    FMultiset mu(base.field()->characteristic());
    return BoundariedSGraph(std::move(base), s, std::move(gamma), std::move(mu));
}

const std::vector<elem>& BoundariedSGraph::gamma_of(int v) const {
    auto it = gamma_.find(v);
    if (it == gamma_.end()) fail("UnknownVertex", "vertex " + std::to_string(v));
    return it->second;
}

bool BoundariedSGraph::full_rank_labels() const {
    FMatrix rows(base_.field(), base_.n(), s_);
    int i = 0;
    for (int v : base_.vertices()) {
        const auto& g = gamma_of(v);
        for (int j = 0; j < s_; ++j) rows.set(i, j, g[j]);
        ++i;
    }
    return rows.rank() == s_;
}

BoundariedSGraph BoundariedSGraph::pivot(int x, int y) const {
    const elem t = base_.adj(x, y);
    if (t == 0) fail("NonEdgePivot", "no edge between the pivot pair");
    const Field& F = *base_.field();
    const SesquiMorphism& sg = base_.sigma();
    const elem st = sg(t);
    const elem inv_t = F.inv(t), inv_st = F.inv(st);
    const elem s1 = sg.sigma1();

    auto scaled = [&](const std::vector<elem>& v, elem c) {
        std::vector<elem> out(v.size());
        for (size_t i = 0; i < v.size(); ++i) out[i] = F.mul(c, v[i]);
        return out;
    };

    std::map<int, std::vector<elem>> gamma2;
    for (int z : base_.vertices()) {
        if (z == x) {
            gamma2[z] = scaled(gamma_of(y), inv_st);
        } else if (z == y) {
            gamma2[z] = scaled(gamma_of(x), F.mul(s1, inv_t));
        } else {
            const elem cx = F.mul(base_.adj(z, x), inv_st);
            const elem cy = F.mul(base_.adj(z, y), inv_t);
            std::vector<elem> v = gamma_of(z);
            const auto& gy = gamma_of(y);
            const auto& gx = gamma_of(x);
            for (int j = 0; j < s_; ++j)
                v[j] = F.sub(F.sub(v[j], F.mul(cx, gy[j])), F.mul(cy, gx[j]));
            gamma2[z] = std::move(v);
        }
    }
    // The boundary remembers the correction with the labels the pivot pair had
    // before the pivot; the merge's star chain reproduces the cross-side
    // effect only with those.
    FMultiset mu2 = mu_;
    mu2.add(FTriple{gamma_of(x), gamma_of(y), t});
    return BoundariedSGraph(base_.pivot(x, y), s_, std::move(gamma2), std::move(mu2));
}

BoundariedSGraph BoundariedSGraph::without(int v) const {
    std::map<int, std::vector<elem>> g = gamma_;
    g.erase(v);
    return BoundariedSGraph(base_.without(v), s_, std::move(g), mu_);
}

BoundariedSGraph BoundariedSGraph::induced(const std::vector<int>& keep) const {
    std::map<int, std::vector<elem>> g;
    for (int v : keep) g[v] = gamma_of(v);
    return BoundariedSGraph(base_.induced(keep), s_, std::move(g), mu_);
}

elem bilinear(const std::vector<elem>& a, const FMatrix& m, const std::vector<elem>& b) {
    if (static_cast<int>(a.size()) != m.rows() || static_cast<int>(b.size()) != m.cols())
        fail("DimensionMismatch", "bilinear form shape mismatch");
    const Field& F = *m.field();
    elem acc = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (a[i] == 0) continue;
        elem row = 0;
        for (int j = 0; j < m.cols(); ++j)
            row = F.add(row, F.mul(m.at(i, j), b[j]));
        acc = F.add(acc, F.mul(a[i], row));
    }
    return acc;
}

BoundariedSGraph merge_labelled(const BoundariedSGraph& g, const BoundariedSGraph& h,
                                const FMatrix& m) {
    const Field& F = *g.base().field();
    if (F.order() != h.base().field()->order())
        fail("DimensionMismatch", "operands live over different fields");
    if (g.s() != h.s()) fail("DimensionMismatch", "operands have different label widths");
    if (m.rows() != g.s() || m.cols() != g.s())
        fail("DimensionMismatch", "merge matrix must be s x s");
    if (!h.mu().empty())
        fail("DimensionMismatch", "second operand must carry an empty boundary");
    for (int v : h.base().vertices())
        if (g.base().has_vertex(v))
            fail("VertexClash", "vertex " + std::to_string(v) + " present on both sides");

    const SesquiMorphism& sg = g.base().sigma();
    std::vector<int> verts = g.base().vertices();
    const std::vector<int>& hv = h.base().vertices();
    verts.insert(verts.end(), hv.begin(), hv.end());

    SGraph k(g.base().field(), sg, verts);
    const int ng = g.base().n(), nh = h.base().n();
    // G block.
    {
        const FMatrix& mg = g.base().matrix();
        for (int i = 0; i < ng; ++i)
            for (int j = 0; j < ng; ++j)
                if (i != j && mg.at(i, j) != 0) k.set_edge(verts[i], verts[j], mg.at(i, j));
    }
    // Cross block.
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j) {
            const elem v = bilinear(g.gamma_of(verts[i]), m, h.gamma_of(hv[j]));
            k.set_edge(verts[i], hv[j], v);
        }
    // H block: star chain over g's boundary, diagonal forced back to zero.
    {
        FMatrix mh = h.base().matrix();
        for (const auto& [tr, mult] : g.mu().items()) {
            std::map<int, elem> cx, cy;
            for (int w : hv) {
                cx[w] = bilinear(tr.v1, m, h.gamma_of(w));
                cy[w] = bilinear(tr.v2, m, h.gamma_of(w));
            }
            for (int rep = 0; rep < mult; ++rep) mh = star(mh, sg, cx, cy, tr.t);
        }
        for (int i = 0; i < nh; ++i)
            for (int j = 0; j < nh; ++j)
                if (i != j) k.set_edge(hv[i], hv[j], mh.at(i, j));
    }

    std::map<int, std::vector<elem>> gamma = g.gamma();
    for (int v : hv) gamma[v] = h.gamma_of(v);
    return BoundariedSGraph::plain(std::move(k), g.s(), std::move(gamma));
}

SGraph merge(const BoundariedSGraph& g, const BoundariedSGraph& h, const FMatrix& m) {
    return merge_labelled(g, h, m).base();
}

} // namespace lrw
