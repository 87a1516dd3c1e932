#include "lrw/matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "lrw/errors.hpp"
#include "lrw/width.hpp"

namespace lrw {

namespace {

std::vector<int> iota_labels(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Reduced row echelon form with zero rows dropped. Column labels survive, row
// labels are renumbered.
FMatrix full_row_rank_form(const FMatrix& m) {
    const auto& f = m.field();
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<elem>> rows;
    rows.reserve(nr);
    for (int r = 0; r < nr; ++r) rows.push_back(m.row(r));
    int top = 0;
    for (int c = 0; c < nc && top < nr; ++c) {
        int piv = -1;
        for (int r = top; r < nr; ++r)
            if (rows[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[top], rows[piv]);
        const elem inv = f->inv(rows[top][c]);
        for (int j = 0; j < nc; ++j) rows[top][j] = f->mul(rows[top][j], inv);
        for (int r = 0; r < nr; ++r) {
            if (r == top || rows[r][c] == 0) continue;
            const elem t = rows[r][c];
            for (int j = 0; j < nc; ++j)
                rows[r][j] = f->sub(rows[r][j], f->mul(t, rows[top][j]));
        }
        ++top;
    }
    FMatrix out(f, iota_labels(top), m.col_labels());
    for (int r = 0; r < top; ++r) out.set_row(r, rows[r]);
    return out;
}

// Rows of the standard form with respect to a base: row i carries a 1 in the
// column of base[i] and zeros in the other base columns. The base must be
// independent and spanning, which the callers have already checked.
std::vector<std::vector<elem>> standard_rows(const RepMatroid& m, const std::vector<int>& base) {
    const auto& f = m.field();
    const FMatrix& rep = m.rep();
    const int r = rep.rows(), nc = rep.cols();
    std::vector<std::vector<elem>> rows(r);
    for (int i = 0; i < r; ++i) rows[i] = rep.row(i);
    for (int i = 0; i < static_cast<int>(base.size()); ++i) {
        const int c = rep.col_index(base[i]);
        int piv = -1;
        for (int rr = i; rr < r; ++rr)
            if (rows[rr][c] != 0) {
                piv = rr;
                break;
            }
        if (piv < 0) fail("NotABasis", "base column became dependent during reduction");
        std::swap(rows[i], rows[piv]);
        const elem inv = f->inv(rows[i][c]);
        for (int j = 0; j < nc; ++j) rows[i][j] = f->mul(rows[i][j], inv);
        for (int rr = 0; rr < r; ++rr) {
            if (rr == i || rows[rr][c] == 0) continue;
            const elem t = rows[rr][c];
            for (int j = 0; j < nc; ++j)
                rows[rr][j] = f->sub(rows[rr][j], f->mul(t, rows[i][j]));
        }
    }
    return rows;
}

void require_known(const RepMatroid& m, const std::vector<int>& xs) {
    for (int e : xs)
        if (!m.has_element(e))
            fail("UnknownElement", "no ground element " + std::to_string(e));
}

}  // namespace

RepMatroid::RepMatroid(FMatrix rep) {
    if (!rep.field()) fail("DimensionMismatch", "representation has no field");
    auto ids = rep.col_labels();
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        fail("VertexClash", "duplicate ground element id");
    rep_ = full_row_rank_form(rep);
}

bool RepMatroid::has_element(int e) const { return rep_.col_index(e) >= 0; }

int RepMatroid::rank_of(const std::vector<int>& x_set) const {
    require_known(*this, x_set);
    std::set<int> seen;
    std::vector<int> xs;
    for (int e : x_set)
        if (seen.insert(e).second) xs.push_back(e);
    if (xs.empty()) return 0;
    return rep_.submatrix(rep_.row_labels(), xs).rank();
}

int RepMatroid::connectivity(const std::vector<int>& x_set) const {
    require_known(*this, x_set);
    const std::set<int> in(x_set.begin(), x_set.end());
    std::vector<int> comp;
    for (int e : ground())
        if (!in.count(e)) comp.push_back(e);
    return rank_of(x_set) + rank_of(comp) - rank() + 1;
}

std::pair<int, std::vector<int>> pathwidth_exact(const RepMatroid& m, int limit_gf2,
                                                 int limit_other) {
    const int n = m.size();
    if (n <= 1) return {0, m.ground()};
    const int limit = m.field()->order() == 2 ? limit_gf2 : limit_other;
    if (n > limit) fail("SizeLimitExceeded", "ground set too large for the exact search");
    const auto& ground = m.ground();
    std::vector<int> cache(std::size_t(1) << n, -1);
    auto cut = [&](std::uint32_t mask) {
        int& slot = cache[mask];
        if (slot < 0) {
            std::vector<int> xs;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) xs.push_back(ground[i]);
            slot = m.connectivity(xs);
        }
        return slot;
    };
    auto [w, idx] = min_width_order(n, cut);
    std::vector<int> order;
    order.reserve(idx.size());
    for (int i : idx) order.push_back(ground[i]);
    return {w, order};
}

int pathwidth_of_order(const RepMatroid& m, const std::vector<int>& order) {
    auto a = order, b = m.ground();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) fail("BadPermutation", "order is not a permutation of the ground set");
    int w = 0;
    std::vector<int> prefix;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        prefix.push_back(order[static_cast<int>(i)]);
        w = std::max(w, m.connectivity(prefix));
    }
    return w;
}

FundamentalGraph fundamental_graph(const RepMatroid& m, const std::vector<int>& base) {
    require_known(m, base);
    const std::set<int> bset(base.begin(), base.end());
    if (static_cast<int>(bset.size()) != static_cast<int>(base.size()) ||
        static_cast<int>(base.size()) != m.rank() || m.rank_of(base) != m.rank())
        fail("NotABasis", "set is not an independent spanning set");
    const auto rows = standard_rows(m, base);
    const FMatrix& rep = m.rep();
    std::vector<int> part_b;
    for (int e : m.ground())
        if (!bset.count(e)) part_b.push_back(e);
    SGraph g(m.field(), SesquiMorphism::negation(m.field()), m.ground());
    for (int i = 0; i < static_cast<int>(base.size()); ++i)
        for (int e : part_b) {
            const elem d = rows[i][rep.col_index(e)];
            if (d != 0) g.set_edge(base[i], e, d);
        }
    return {std::move(g), base, std::move(part_b)};
}

RepMatroid matroid_minor(const RepMatroid& m, const std::vector<int>& del,
                         const std::vector<int>& con) {
    require_known(m, del);
    require_known(m, con);
    const std::set<int> dset(del.begin(), del.end());
    const std::set<int> cset(con.begin(), con.end());
    for (int e : con)
        if (dset.count(e)) fail("OverlappingSets", "element both deleted and contracted");
    // A dependent contraction set is contracted through a maximal independent
    // subset; the leftovers become loops of the contraction, so dropping them
    // is the same as deleting them.
    std::vector<int> ind;
    for (int e : m.ground()) {
        if (!cset.count(e)) continue;
        auto trial = ind;
        trial.push_back(e);
        if (m.rank_of(trial) == static_cast<int>(trial.size())) ind = std::move(trial);
    }
    const auto& f = m.field();
    const FMatrix& rep = m.rep();
    const int r = rep.rows(), nc = rep.cols();
    std::vector<std::vector<elem>> rows(r);
    for (int i = 0; i < r; ++i) rows[i] = rep.row(i);
    // Pivot the contracted columns into unit vectors, then quotient them away
    // by keeping only the non-pivot rows.
    int used = 0;
    for (int e : ind) {
        const int c = rep.col_index(e);
        int piv = -1;
        for (int rr = used; rr < r; ++rr)
            if (rows[rr][c] != 0) {
                piv = rr;
                break;
            }
        if (piv < 0) fail("NotABasis", "contraction pivot vanished");
        std::swap(rows[used], rows[piv]);
        const elem inv = f->inv(rows[used][c]);
        for (int j = 0; j < nc; ++j) rows[used][j] = f->mul(rows[used][j], inv);
        for (int rr = 0; rr < r; ++rr) {
            if (rr == used || rows[rr][c] == 0) continue;
            const elem t = rows[rr][c];
            for (int j = 0; j < nc; ++j)
                rows[rr][j] = f->sub(rows[rr][j], f->mul(t, rows[used][j]));
        }
        ++used;
    }
    std::vector<int> kept;
    for (int e : m.ground())
        if (!dset.count(e) && !cset.count(e)) kept.push_back(e);
    FMatrix out(f, iota_labels(r - used), kept);
    for (int i = used; i < r; ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
            out.set(i - used, static_cast<int>(j), rows[i][rep.col_index(kept[j])]);
    return RepMatroid(out);
}

RepMatroid dual(const RepMatroid& m) {
    const auto& f = m.field();
    const int n = m.size(), r = m.rank();
    if (n == 0) return m;
    // Standard form over the first greedy base turns into (-D^T | I) for the
    // dual, spread back over the original element order.
    std::vector<int> base;
    for (int e : m.ground()) {
        if (static_cast<int>(base.size()) == r) break;
        auto trial = base;
        trial.push_back(e);
        if (m.rank_of(trial) == static_cast<int>(trial.size())) base = std::move(trial);
    }
    const auto rows = standard_rows(m, base);
    const FMatrix& rep = m.rep();
    const std::set<int> bset(base.begin(), base.end());
    std::vector<int> part_b;
    for (int e : m.ground())
        if (!bset.count(e)) part_b.push_back(e);
    FMatrix out(f, iota_labels(n - r), m.ground());
    for (std::size_t j = 0; j < part_b.size(); ++j) {
        const int row = static_cast<int>(j);
        out.set(row, out.col_index(part_b[j]), 1);
        for (int i = 0; i < r; ++i) {
            const elem d = rows[i][rep.col_index(part_b[j])];
            if (d != 0) out.set(row, out.col_index(base[i]), f->neg(d));
        }
    }
    return RepMatroid(out);
}

PivotSequence bases_pivot_equivalent(const RepMatroid& m, const std::vector<int>& b1,
                                     const std::vector<int>& b2, std::size_t limit) {
    const auto fg1 = fundamental_graph(m, b1);
    const auto fg2 = fundamental_graph(m, b2);
    PivotSequence seq;
    SGraph cur = fg1.graph;
    std::set<int> cura(b1.begin(), b1.end());
    const std::set<int> target(b2.begin(), b2.end());
    // Walk the exchange graph: swapping x out for y keeps a base exactly when
    // the fundamental graph has the edge xy, and the pivot at xy is the
    // fundamental graph of the swapped base.
    while (cura != target) {
        int x = -1;
        for (int e : m.ground())
            if (cura.count(e) && !target.count(e)) {
                x = e;
                break;
            }
        int y = -1;
        for (int e : m.ground()) {
            if (!target.count(e) || cura.count(e)) continue;
            if (cur.adj(x, e) != 0) {
                y = e;
                break;
            }
        }
        if (y < 0) fail("NotABasis", "exchange step found no partner");
        seq.pairs.emplace_back(x, y);
        cur = cur.pivot(x, y);
        cura.erase(x);
        cura.insert(y);
    }
    const std::string want = canonical_form(fg2.graph);
    if (canonical_form(cur) == want) return seq;
    // Representations picked by different reductions can disagree by unit
    // scalings, which shifts the standard form by extra pivots. Search the
    // orbit of the endpoint for the published form.
    const bool both_orders = m.field()->order() > 2;
    std::set<std::string> seen{canonical_form(cur)};
    std::vector<std::pair<SGraph, PivotSequence>> queue{{std::move(cur), seq}};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const SGraph g0 = queue[h].first;
        const PivotSequence path0 = queue[h].second;
        const auto& vs = g0.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                if (g0.adj(vs[a], vs[b]) == 0) continue;
                std::vector<std::pair<int, int>> steps{{vs[a], vs[b]}};
                if (both_orders) steps.emplace_back(vs[b], vs[a]);
                for (auto [px, py] : steps) {
                    SGraph nxt = g0.pivot(px, py);
                    std::string form = canonical_form(nxt);
                    if (!seen.insert(form).second) continue;
                    PivotSequence path = path0;
                    path.pairs.emplace_back(px, py);
                    if (form == want) return path;
                    if (seen.size() > limit)
                        fail("SizeLimitExceeded", "orbit search exceeded its limit");
                    queue.emplace_back(std::move(nxt), std::move(path));
                }
            }
    }
    fail("NotABasis", "fundamental graphs are not pivot equivalent");
}

bool is_pathwidth_obstruction(const RepMatroid& m, int p) {
    if (pathwidth_exact(m).first <= p) return false;
    for (int e : m.ground()) {
        if (pathwidth_exact(matroid_minor(m, {e}, {})).first > p) return false;
        if (pathwidth_exact(matroid_minor(m, {}, {e})).first > p) return false;
    }
    return true;
}

bool matroid_isomorphic(const RepMatroid& a, const RepMatroid& b) {
    const int n = a.size();
    if (n != b.size() || a.rank() != b.rank()) return false;
    if (n > 9) fail("SizeLimitExceeded", "isomorphism search beyond nine elements");
    auto table = [](const RepMatroid& m) {
        const int k = m.size();
        std::vector<std::uint8_t> t(std::size_t(1) << k, 0);
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> xs;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1u) xs.push_back(m.ground()[i]);
            t[mask] = static_cast<std::uint8_t>(m.rank_of(xs));
        }
        return t;
    };
    const auto ta = table(a), tb = table(b);
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> place = [&](int d) {
        if (d == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            img[d] = j;
            used[j] = 1;
            bool ok = true;
            for (std::uint32_t sub = 0; ok && sub < (1u << d); ++sub) {
                const std::uint32_t ma = sub | (1u << d);
                std::uint32_t mb = 0;
                for (int i = 0; i <= d; ++i)
                    if (ma >> i & 1u) mb |= 1u << img[i];
                if (ta[ma] != tb[mb]) ok = false;
            }
            if (ok && place(d + 1)) return true;
            used[j] = 0;
        }
        img[d] = -1;
        return false;
    };
    return place(0);
}

}  // namespace lrw
