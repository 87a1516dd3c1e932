#include "lrw/minors.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <deque>
#include <mutex>
#include <thread>

namespace lrw {

SGraph apply_pivots(const SGraph& g, const PivotSequence& seq) {
    SGraph cur = g;
    for (const auto& [a, b] : seq.pairs) cur = cur.pivot(a, b);
    return cur;
}

namespace {

Orbit orbit_impl(const SGraph& g, std::size_t limit, bool lc) {
    Orbit o;
    o.seed = g;
    o.members.push_back(g);
    o.forms.insert(canonical_form(g));
    std::deque<std::size_t> queue{0};
    const bool both_orders = g.field()->order() > 2;
    while (!queue.empty()) {
        const SGraph cur = o.members[queue.front()];
        queue.pop_front();
        std::vector<SGraph> steps;
        if (lc) {
            for (int v : cur.vertices())
                if (!cur.neighbors(v).empty()) steps.push_back(cur.local_complement(v));
        } else {
            const int n = cur.n();
            for (int i = 0; i < n; ++i)
                for (int j = both_orders ? 0 : i + 1; j < n; ++j) {
                    if (i == j) continue;
                    const int x = cur.vertices()[i], y = cur.vertices()[j];
                    if (cur.adj(x, y) != 0) steps.push_back(cur.pivot(x, y));
                }
        }
        for (SGraph& next : steps) {
            std::string form = canonical_form(next);
            if (o.forms.count(form)) continue;
            if (o.members.size() >= limit) {
                o.truncated = true;
                return o;
            }
            o.forms.insert(std::move(form));
            o.members.push_back(std::move(next));
            queue.push_back(o.members.size() - 1);
        }
    }
    return o;
}

MinorCheck minor_check(const SGraph& h, const SGraph& g, std::size_t limit, bool lc) {
    if (h.n() > g.n()) return {false, false};
    const Orbit orb = lc ? lc_orbit(g, limit) : pivot_orbit(g, limit);
    const std::string hform = canonical_form(h);
    const int n = g.n(), k = h.n();
    for (const SGraph& m : orb.members) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != k) continue;
            std::vector<int> keep;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) keep.push_back(m.vertices()[i]);
            if (canonical_form(m.induced(keep)) == hform) return {true, orb.truncated};
        }
    }
    return {false, orb.truncated};
}

} // namespace

Orbit pivot_orbit(const SGraph& g, std::size_t limit) { return orbit_impl(g, limit, false); }

Orbit lc_orbit(const SGraph& g, std::size_t limit) {
    if (g.field()->order() != 2)
        fail("FieldNotBinary", "local complementation orbits need GF(2)");
    return orbit_impl(g, limit, true);
}

MinorCheck is_pivot_minor(const SGraph& h, const SGraph& g, std::size_t limit) {
    return minor_check(h, g, limit, false);
}

MinorCheck is_vertex_minor(const SGraph& h, const SGraph& g, std::size_t limit) {
    if (g.field()->order() != 2)
        fail("FieldNotBinary", "vertex-minor testing needs GF(2)");
    return minor_check(h, g, limit, true);
}

std::vector<SGraph> connected_classes(const FieldPtr& f, const SesquiMorphism& sigma,
                                      int n_max) {
    if (n_max > 10)
        fail("SizeLimitExceeded", "class generation limited to 10 vertices");
    std::vector<SGraph> all;
    if (n_max < 1) return all;
    SGraph k1(f, sigma, {0});
    std::vector<SGraph> level{k1};
    all.push_back(k1);
    const int q = f->order();
    for (int n = 2; n <= n_max; ++n) {
        std::vector<SGraph> next;
        std::set<std::string> seen;
        std::vector<int> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        for (const SGraph& base : level) {
            // Row of the new vertex toward the old ones; every nonzero vector
            // keeps the extension connected, and every connected class on n
            // vertices arises this way from deleting a non-cut vertex.
            std::vector<elem> a(n - 1, 0);
            while (true) {
                int pos = 0;
                while (pos < n - 1 && ++a[pos] == q) {
                    a[pos] = 0;
                    ++pos;
                }
                if (pos == n - 1) break;
                SGraph ext(f, sigma, verts);
                for (int i = 0; i < n - 1; ++i)
                    for (int j = i + 1; j < n - 1; ++j)
                        ext.set_edge(i, j, base.adj(i, j));
                for (int i = 0; i < n - 1; ++i) ext.set_edge(n - 1, i, a[i]);
                std::string form = canonical_form(ext);
                if (seen.insert(std::move(form)).second) next.push_back(std::move(ext));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

std::vector<SGraph> obstructions(const FieldPtr& f, const SesquiMorphism& sigma,
                                 MinorRelation relation, int p, int n_max, int threads) {
    if (relation == MinorRelation::vertex && f->order() != 2)
        fail("FieldNotBinary", "vertex-minor obstructions need GF(2)");
    const std::vector<SGraph> cands = connected_classes(f, sigma, n_max);

    auto is_obstruction = [&](const SGraph& g) {
        if (lrw_exact(g).first <= p) return false;
        const Orbit orb =
            relation == MinorRelation::pivot ? pivot_orbit(g) : lc_orbit(g);
        if (orb.truncated)
            fail("SizeLimitExceeded", "orbit truncated during a minimality check");
        for (const SGraph& m : orb.members)
            for (int v : m.vertices())
                if (lrw_exact(m.without(v)).first > p) return false;
        return true;
    };

    std::vector<char> keep(cands.size(), 0);
    if (threads <= 1) {
        for (std::size_t i = 0; i < cands.size(); ++i) keep[i] = is_obstruction(cands[i]);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr first_error;
        std::mutex error_lock;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= cands.size()) return;
                try {
                    keep[i] = is_obstruction(cands[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> hold(error_lock);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::vector<SGraph> qualified;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (keep[i]) qualified.push_back(cands[i]);

    // The qualifying set is closed under the generating operation, so it
    // splits into whole equivalence classes; report one representative each,
    // the sparsest member (ties broken on canonical form).
    auto edge_count = [](const SGraph& g) {
        int e = 0;
        for (int i = 0; i < g.n(); ++i)
            for (int j = i + 1; j < g.n(); ++j)
                if (g.matrix().at(i, j) != 0) ++e;
        return e;
    };
    std::sort(qualified.begin(), qualified.end(),
              [&](const SGraph& a, const SGraph& b) {
                  if (a.n() != b.n()) return a.n() < b.n();
                  const int ea = edge_count(a), eb = edge_count(b);
                  if (ea != eb) return ea < eb;
                  return canonical_form(a) < canonical_form(b);
              });
    std::vector<SGraph> out;
    std::set<std::string> covered;
    for (const SGraph& g : qualified) {
        if (covered.count(canonical_form(g))) continue;
        const Orbit orb =
            relation == MinorRelation::pivot ? pivot_orbit(g) : lc_orbit(g);
        covered.insert(orb.forms.begin(), orb.forms.end());
        out.push_back(g);
    }
    return out;
}

namespace {

// min over X ⊆ Z ⊆ V∖Y of the cut-rank of Z, brute-forced over the free part.
int sandwiched_cut_min(const SGraph& g, const std::vector<int>& x_set,
                       const std::vector<int>& y_set) {
    std::set<int> skip(x_set.begin(), x_set.end());
    skip.insert(y_set.begin(), y_set.end());
    std::vector<int> free;
    for (int v : g.vertices())
        if (!skip.count(v)) free.push_back(v);
    int best = INT_MAX;
    for (std::uint32_t s = 0; s < (1u << free.size()); ++s) {
        std::vector<int> z = x_set;
        for (std::size_t b = 0; b < free.size(); ++b)
            if (s >> b & 1) z.push_back(free[b]);
        best = std::min(best, g.cutrank(z));
    }
    return best;
}

} // namespace

std::optional<PivotSequence> tutte_link(const SGraph& g, const std::vector<int>& x_set,
                                        const std::vector<int>& y_set, int k,
                                        int free_limit) {
    std::set<int> xs(x_set.begin(), x_set.end()), ys(y_set.begin(), y_set.end());
    for (int v : x_set)
        if (ys.count(v)) fail("OverlappingSets", "X and Y share vertex " + std::to_string(v));
    if (g.cutrank(x_set) != k || g.cutrank(y_set) != k)
        fail("DimensionMismatch", "X and Y must both have cut-rank k");
    {
        int free_count = 0;
        for (int v : g.vertices())
            if (!xs.count(v) && !ys.count(v)) ++free_count;
        if (free_count > free_limit)
            fail("SizeLimitExceeded",
                 std::to_string(free_count) + " free vertices exceed the linking limit");
    }
    if (sandwiched_cut_min(g, x_set, y_set) < k) return std::nullopt;

    // Peel free vertices one by one. Deleting v is safe when the sandwiched
    // minimum survives; otherwise pivoting at (v, w) first restores it, by
    // the submodularity of the cut-rank.
    PivotSequence seq;
    SGraph cur = g;
    for (;;) {
        std::vector<int> free;
        for (int v : cur.vertices())
            if (!xs.count(v) && !ys.count(v)) free.push_back(v);
        std::sort(free.begin(), free.end());
        int v = -1, w = -1;
        for (int cand : free) {
            std::vector<int> nbrs = cur.neighbors(cand);
            std::sort(nbrs.begin(), nbrs.end());
            for (int nb : nbrs)
                if (!ys.count(nb)) {
                    v = cand;
                    w = nb;
                    break;
                }
            if (v >= 0) break;
        }
        if (v < 0) break;
        const SGraph dropped = cur.without(v);
        if (sandwiched_cut_min(dropped, x_set, y_set) >= k) {
            cur = dropped;
        } else {
            seq.pairs.emplace_back(v, w);
            cur = cur.pivot(v, w).without(v);
        }
    }
    return seq;
}

SGraph normalize_linked(const SGraph& g, const LinearLayout& pi,
                        const std::vector<int>& indices) {
    const int n = g.n();
    if (static_cast<int>(pi.order.size()) != n)
        fail("BadPermutation", "layout does not match the graph");
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] < 1 || indices[j] > n - 1)
            fail("IndexOutOfRange", "cut index " + std::to_string(indices[j]));
        if (j > 0 && indices[j] <= indices[j - 1])
            fail("IndexOutOfRange", "indices must be strictly increasing");
    }
    if (indices.size() < 2) return g;
    const int s = pi.cut_ranks[indices[0] - 1];
    for (int i : indices)
        if (pi.cut_ranks[i - 1] != s)
            fail("DimensionMismatch", "indices carry unequal cut values");

    SGraph cur = g;
    for (int j = static_cast<int>(indices.size()) - 2; j >= 0; --j) {
        const std::vector<int> x(pi.order.begin(), pi.order.begin() + indices[j]);
        const std::vector<int> y(pi.order.begin() + indices[j + 1], pi.order.end());
        auto seq = tutte_link(cur, x, y, s);
        if (!seq)
            fail("DimensionMismatch",
                 "pair is not linked: a sandwiched cut beats the endpoints");
        cur = apply_pivots(cur, *seq);
    }
    return cur;
}

} // namespace lrw
