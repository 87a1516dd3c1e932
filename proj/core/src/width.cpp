#include "lrw/width.hpp"

#include <algorithm>
#include <array>
#include <climits>

namespace lrw {

namespace {

// Rank of m restricted to rows inside mask and columns outside it.
int masked_rank(const FMatrix& m, std::uint32_t mask) {
    const Field& F = *m.field();
    const int n = m.rows();
    std::vector<int> rs, cs;
    for (int i = 0; i < n; ++i) (mask >> i & 1 ? rs : cs).push_back(i);
    const int nr = static_cast<int>(rs.size()), nc = static_cast<int>(cs.size());
    if (nr == 0 || nc == 0) return 0;
    std::vector<elem> a(static_cast<size_t>(nr) * nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) a[static_cast<size_t>(i) * nc + j] = m.at(rs[i], cs[j]);
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (a[static_cast<size_t>(r) * nc + c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < nc; ++j)
            std::swap(a[static_cast<size_t>(piv) * nc + j], a[static_cast<size_t>(rank) * nc + j]);
        const elem inv = F.inv(a[static_cast<size_t>(rank) * nc + c]);
        for (int r = rank + 1; r < nr; ++r) {
            const elem f = F.mul(a[static_cast<size_t>(r) * nc + c], inv);
            if (f == 0) continue;
            for (int j = c; j < nc; ++j)
                a[static_cast<size_t>(r) * nc + j] =
                    F.sub(a[static_cast<size_t>(r) * nc + j],
                          F.mul(f, a[static_cast<size_t>(rank) * nc + j]));
        }
        ++rank;
    }
    return rank;
}

// Prefix-cut function of a graph as a function of index bitmasks, with a
// word-packed path for GF(2).
std::function<int(std::uint32_t)> mask_cut_function(const SGraph& g) {
    const int n = g.n();
    if (g.field()->order() == 2) {
        std::vector<std::uint32_t> rows(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.matrix().at(i, j) != 0) rows[i] |= 1u << j;
        return [rows, n](std::uint32_t mask) {
            std::array<std::uint32_t, 32> basis{};
            int r = 0;
            for (int i = 0; i < n; ++i) {
                if (!(mask >> i & 1)) continue;
                std::uint32_t v = rows[i] & ~mask;
                while (v) {
                    const int b = 31 - __builtin_clz(v);
                    if (!basis[b]) { basis[b] = v; ++r; break; }
                    v ^= basis[b];
                }
            }
            return r;
        };
    }
    return [m = g.matrix()](std::uint32_t mask) { return masked_rank(m, mask); };
}

// Minimum over cutrank(prefix_i ∪ S) for S ranging over all subsets of the
// vertices at positions i+1..j of the order.
int sandwiched_min(const SGraph& g, const std::vector<int>& order, int i, int j) {
    std::vector<int> base(order.begin(), order.begin() + i);
    std::vector<int> mid(order.begin() + i, order.begin() + j);
    int best = INT_MAX;
    for (std::uint32_t s = 0; s < (1u << mid.size()); ++s) {
        std::vector<int> z = base;
        for (size_t b = 0; b < mid.size(); ++b)
            if (s >> b & 1) z.push_back(mid[b]);
        best = std::min(best, g.cutrank(z));
    }
    return best;
}

} // namespace

LinearLayout layout_of(const SGraph& g, const std::vector<int>& order) {
    std::vector<int> a = order, b = g.vertices();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) fail("BadPermutation", "order is not a permutation of the vertex set");
    LinearLayout L;
    L.order = order;
    std::vector<int> prefix;
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        prefix.push_back(order[i]);
        L.cut_ranks.push_back(g.cutrank(prefix));
        L.width = std::max(L.width, L.cut_ranks.back());
    }
    return L;
}

int layout_width(const SGraph& g, const std::vector<int>& order) {
    return layout_of(g, order).width;
}

std::pair<int, std::vector<int>> min_width_order(
    int n, const std::function<int(std::uint32_t)>& cut) {
    if (n > 25) fail("SizeLimitExceeded", "subset search over " + std::to_string(n) + " elements");
    if (n == 0) return {0, {}};
    const std::uint32_t full = (1u << n) - 1;
    // f caches the cut of every proper nonempty prefix; g[m] is the best
    // achievable maximum over completions of the prefix m.
    std::vector<std::uint8_t> f(full + 1, 0), best(full + 1, 0);
    for (std::uint32_t m = 1; m < full; ++m) {
        const int c = cut(m);
        if (c > 254) fail("SizeLimitExceeded", "cut value out of range");
        f[m] = static_cast<std::uint8_t>(c);
    }
    for (std::uint32_t m = full - 1;; --m) {
        int b = INT_MAX;
        for (int v = 0; v < n; ++v) {
            if (m >> v & 1) continue;
            const std::uint32_t m2 = m | (1u << v);
            b = std::min(b, std::max<int>(f[m2], best[m2]));
        }
        best[m] = static_cast<std::uint8_t>(b);
        if (m == 0) break;
    }
    std::vector<int> order;
    std::uint32_t m = 0;
    while (m != full) {
        for (int v = 0; v < n; ++v) {
            if (m >> v & 1) continue;
            const std::uint32_t m2 = m | (1u << v);
            if (std::max<int>(f[m2], best[m2]) == best[m]) {
                order.push_back(v);
                m = m2;
                break;
            }
        }
    }
    return {best[0], order};
}

std::pair<int, LinearLayout> lrw_exact(const SGraph& g, int limit_gf2, int limit_other) {
    const int limit = g.field()->order() == 2 ? limit_gf2 : limit_other;
    std::vector<int> order;
    for (const auto& comp : g.components()) {
        if (static_cast<int>(comp.size()) > limit)
            fail("SizeLimitExceeded", "component of " + std::to_string(comp.size()) +
                                          " vertices exceeds the exact-solver limit " +
                                          std::to_string(limit));
        const SGraph sub = g.induced(comp);
        auto [w, idx] = min_width_order(sub.n(), mask_cut_function(sub));
        (void)w; // the global layout recomputes every cut below
        for (int i : idx) order.push_back(comp[i]);
    }
    LinearLayout L = layout_of(g, order);
    return {L.width, L};
}

bool is_linked(const SGraph& g, const LinearLayout& pi, int i, int j, int window_limit) {
    const int n = g.n();
    if (static_cast<int>(pi.order.size()) != n ||
        static_cast<int>(pi.cut_ranks.size()) != std::max(n - 1, 0))
        fail("BadPermutation", "layout does not match the graph");
    if (i < 1 || j <= i || j > n - 1)
        fail("IndexOutOfRange", "need 1 <= i < j <= n-1");
    if (j - i > window_limit)
        fail("SizeLimitExceeded", "middle window of " + std::to_string(j - i) + " vertices");
    int lhs = INT_MAX;
    for (int l = i; l <= j; ++l) lhs = std::min(lhs, pi.cut_ranks[l - 1]);
    return lhs == sandwiched_min(g, pi.order, i, j);
}

LinearLayout find_linked_layout(const SGraph& g) {
    auto [k, opt] = lrw_exact(g);
    const int n = g.n();
    if (n <= 2) return opt;
    const std::vector<int> verts = g.vertices();
    std::vector<int> prefix, cuts;
    std::vector<char> used(n, 0);

    // Depth-first over orders: a prefix survives only while every cut stays
    // at most k and every pair ending at the newest cut index is linked
    // (both depend on the placed prefix alone).
    std::function<bool()> dfs = [&]() -> bool {
        const int d = static_cast<int>(prefix.size());
        if (d == n) return true;
        for (int vi = 0; vi < n; ++vi) {
            if (used[vi]) continue;
            used[vi] = 1;
            prefix.push_back(verts[vi]);
            bool ok = true, pushed = false;
            if (d + 1 <= n - 1) {
                const int c = g.cutrank(prefix);
                ok = c <= k;
                if (ok) {
                    cuts.push_back(c);
                    pushed = true;
                    const int j = d + 1;
                    for (int i = 1; i < j && ok; ++i) {
                        int lhs = INT_MAX;
                        for (int l = i; l <= j; ++l) lhs = std::min(lhs, cuts[l - 1]);
                        ok = lhs == sandwiched_min(g, prefix, i, j);
                    }
                }
            }
            if (ok && dfs()) return true;
            if (pushed) cuts.pop_back();
            prefix.pop_back();
            used[vi] = 0;
        }
        return false;
    };
    if (!dfs())
        fail("IntractableExhaustive", "no linked layout of optimal width was found");
    return layout_of(g, prefix);
}

std::optional<std::pair<int, std::vector<int>>> lambda_linked_sequence(
    const SGraph& g, const LinearLayout& pi, int c) {
    if (static_cast<int>(pi.order.size()) != g.n())
        fail("BadPermutation", "layout does not match the graph");
    if (c < 1) fail("IndexOutOfRange", "need c >= 1");
    const auto& lam = pi.cut_ranks;
    for (int s = 0; s <= pi.width; ++s) {
        std::vector<int> chain;
        for (int i = 1; i <= static_cast<int>(lam.size()); ++i) {
            if (lam[i - 1] < s) {
                chain.clear();
                continue;
            }
            if (lam[i - 1] == s) {
                chain.push_back(i);
                if (static_cast<int>(chain.size()) == c + 1)
                    return std::make_pair(s, chain);
            }
        }
    }
    return std::nullopt;
}

namespace {

// Labels of the lexicographically earliest maximal independent row set.
std::vector<int> greedy_row_basis(const FMatrix& m) {
    const Field& F = *m.field();
    std::vector<std::vector<elem>> basis;
    std::vector<int> labels;
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<elem> v = m.row(r);
        for (const auto& b : basis) {
            int lead = -1;
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) { lead = static_cast<int>(j); break; }
            if (lead < 0 || v[lead] == 0) continue;
            const elem fac = F.div(v[lead], b[lead]);
            for (size_t j = 0; j < v.size(); ++j)
                v[j] = F.sub(v[j], F.mul(fac, b[j]));
        }
        if (std::any_of(v.begin(), v.end(), [](elem e) { return e != 0; })) {
            basis.push_back(v);
            labels.push_back(m.row_labels()[r]);
        }
    }
    return labels;
}

} // namespace

LinearEncoding encode(const SGraph& g, const LinearLayout& pi) {
    const LinearLayout L = layout_of(g, pi.order);
    const int n = g.n();
    LinearEncoding e;
    e.t = n;
    e.order = pi.order;
    e.width = L.width;
    for (int i = 1; i <= n; ++i) {
        const std::vector<int> xs(pi.order.begin(), pi.order.begin() + i);
        const std::vector<int> ys(pi.order.begin() + i, pi.order.end());
        const FMatrix cut = g.matrix().submatrix(xs, ys);
        const std::vector<int> brows = greedy_row_basis(cut);
        const std::vector<int> bcols = greedy_row_basis(cut.transposed());
        const FMatrix m = g.matrix().submatrix(brows, bcols);
        const FMatrix mt = m.transposed();
        const int r = m.rows();

        std::vector<std::vector<elem>> nrows, prows;
        std::map<int, int> rof, cof;
        for (int x : xs) {
            std::vector<elem> target(bcols.size());
            for (size_t j = 0; j < bcols.size(); ++j)
                target[j] = g.adj(x, bcols[j]);
            auto u = solve_row(target, m);
            if (!u) fail("EncodingMismatch", "row outside the basis span");
            auto it = std::find(nrows.begin(), nrows.end(), *u);
            if (it == nrows.end()) {
                rof[x] = static_cast<int>(nrows.size());
                nrows.push_back(*u);
            } else {
                rof[x] = static_cast<int>(it - nrows.begin());
            }
        }
        for (int y : ys) {
            std::vector<elem> target(brows.size());
            for (size_t j = 0; j < brows.size(); ++j)
                target[j] = g.adj(brows[j], y);
            auto w = solve_row(target, mt);
            if (!w) fail("EncodingMismatch", "column outside the basis span");
            auto it = std::find(prows.begin(), prows.end(), *w);
            if (it == prows.end()) {
                cof[y] = static_cast<int>(prows.size());
                prows.push_back(*w);
            } else {
                cof[y] = static_cast<int>(it - prows.begin());
            }
        }
        FMatrix N(g.field(), static_cast<int>(nrows.size()), r);
        for (size_t a = 0; a < nrows.size(); ++a) N.set_row(static_cast<int>(a), nrows[a]);
        FMatrix P(g.field(), static_cast<int>(prows.size()), r);
        for (size_t a = 0; a < prows.size(); ++a) P.set_row(static_cast<int>(a), prows[a]);
        e.n_mats.push_back(std::move(N));
        e.p_mats.push_back(std::move(P));
        e.m_mats.push_back(m);
        e.row_of.push_back(std::move(rof));
        e.col_of.push_back(std::move(cof));
    }
    return e;
}

bool decode_check(const SGraph& g, const LinearEncoding& e) {
    const int n = g.n();
    if (e.t != n) return false;
    {
        std::vector<int> a = e.order, b = g.vertices();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    if (static_cast<int>(e.n_mats.size()) != n || static_cast<int>(e.p_mats.size()) != n ||
        static_cast<int>(e.m_mats.size()) != n || static_cast<int>(e.row_of.size()) != n ||
        static_cast<int>(e.col_of.size()) != n)
        return false;
    for (int i = 1; i <= n; ++i) {
        const FMatrix& N = e.n_mats[i - 1];
        const FMatrix& P = e.p_mats[i - 1];
        const FMatrix& M = e.m_mats[i - 1];
        if (N.cols() != M.rows() || P.cols() != M.cols()) return false;
        if (std::max(M.rows(), M.cols()) > e.width) return false;
        for (int a = 0; a < N.rows(); ++a)
            for (int b = a + 1; b < N.rows(); ++b)
                if (N.row(a) == N.row(b)) return false;
        for (int a = 0; a < P.rows(); ++a)
            for (int b = a + 1; b < P.rows(); ++b)
                if (P.row(a) == P.row(b)) return false;
        for (int xi = 0; xi < i; ++xi) {
            const int x = e.order[xi];
            auto rit = e.row_of[i - 1].find(x);
            if (rit == e.row_of[i - 1].end() || rit->second < 0 || rit->second >= N.rows())
                return false;
            for (int yi = i; yi < n; ++yi) {
                const int y = e.order[yi];
                auto cit = e.col_of[i - 1].find(y);
                if (cit == e.col_of[i - 1].end() || cit->second < 0 ||
                    cit->second >= P.rows())
                    return false;
                if (g.adj(x, y) != bilinear(N.row(rit->second), M, P.row(cit->second)))
                    return false;
            }
        }
    }
    return true;
}

} // namespace lrw
