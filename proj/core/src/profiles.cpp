#include "lrw/profiles.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "lrw/errors.hpp"

namespace lrw {

namespace {

// Distinct rows in first-occurrence order.
std::vector<std::vector<elem>> rest_rows(const FMatrix& m) {
    std::vector<std::vector<elem>> out;
    for (int r = 0; r < m.rows(); ++r) {
        auto v = m.row(r);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
    return out;
}

bool rest_subset(const std::vector<std::vector<elem>>& a,
                 const std::vector<std::vector<elem>>& b) {
    for (const auto& v : a)
        if (std::find(b.begin(), b.end(), v) == b.end()) return false;
    return true;
}

bool rest_equal(const std::vector<std::vector<elem>>& a,
                const std::vector<std::vector<elem>>& b) {
    return rest_subset(a, b) && rest_subset(b, a);
}

// v . g . (row y of side)^t for every row y, all factors zero-padded.
std::vector<elem> chain_values(const FieldPtr& f, const std::vector<elem>& v,
                               const FMatrix& g, const FMatrix& side) {
    std::vector<elem> w(g.cols(), 0);
    for (int c = 0; c < g.cols(); ++c) {
        elem acc = 0;
        const int lim = std::min<int>(static_cast<int>(v.size()), g.rows());
        for (int r = 0; r < lim; ++r) acc = f->add(acc, f->mul(v[r], g.at(r, c)));
        w[c] = acc;
    }
    std::vector<elem> out(side.rows(), 0);
    for (int y = 0; y < side.rows(); ++y) {
        elem acc = 0;
        const int lim = std::min<int>(static_cast<int>(w.size()), side.cols());
        for (int j = 0; j < lim; ++j) acc = f->add(acc, f->mul(w[j], side.at(y, j)));
        out[y] = acc;
    }
    return out;
}

FMatrix block2x2(const FieldPtr& f, const FMatrix& tl, const FMatrix& tr, const FMatrix& bl,
                 const FMatrix& br) {
    if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
        tr.cols() != br.cols())
        fail("DimensionMismatch", "block shapes disagree");
    FMatrix a(f, tl.rows() + bl.rows(), tl.cols() + tr.cols());
    for (int r = 0; r < tl.rows(); ++r) {
        for (int c = 0; c < tl.cols(); ++c) a.set(r, c, tl.at(r, c));
        for (int c = 0; c < tr.cols(); ++c) a.set(r, tl.cols() + c, tr.at(r, c));
    }
    for (int r = 0; r < bl.rows(); ++r) {
        for (int c = 0; c < bl.cols(); ++c) a.set(tl.rows() + r, c, bl.at(r, c));
        for (int c = 0; c < br.cols(); ++c) a.set(tl.rows() + r, tl.cols() + c, br.at(r, c));
    }
    return a;
}

void check_tuple(const LinearSProfile& e, const MatrixTuple& d) {
    if (d.gamma.rows() != e.s() || d.gamma.cols() != e.s())
        fail("DimensionMismatch", "Gamma must be s x s");
    if (d.p1.rows() != d.p2.rows() || d.q1.rows() != d.q2.rows())
        fail("DimensionMismatch", "split row counts disagree");
    if (d.p2.rows() > 0 && d.p2.cols() != e.s())
        fail("DimensionMismatch", "P2 rows must live in F^s");
    if (d.q2.rows() > 0 && d.q2.cols() != e.s())
        fail("DimensionMismatch", "Q2 rows must live in F^s");
}

// All vectors of F^len in lexicographic order.
std::vector<std::vector<elem>> all_vectors(const FieldPtr& f, int len) {
    const int q = f->order();
    if (len == 0) return {std::vector<elem>{}};
    std::vector<std::vector<elem>> out;
    std::vector<elem> cur(len, 0);
    while (true) {
        out.push_back(cur);
        int pos = len - 1;
        while (pos >= 0 && ++cur[pos] == q) cur[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

struct TupleSpace {
    FieldPtr f;
    int s = 0, p = 0;
    std::vector<std::vector<elem>> rows;  // F^{p+s}, lexicographic
    std::uint64_t n_gamma = 1, n_core = 1, n_rowsets = 1, total = 1;
};

std::uint64_t int_pow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

TupleSpace make_space(const FieldPtr& f, int s, int p) {
    if (p < 0) fail("IndexOutOfRange", "negative rank budget");
    if (f->order() != 2 || s > 1 || p > 1)
        fail("IntractableExhaustive",
             "exhaustive tuple scans are limited to GF(2) with s <= 1 and p <= 1");
    TupleSpace sp;
    sp.f = f;
    sp.s = s;
    sp.p = p;
    sp.rows = all_vectors(f, p + s);
    sp.n_gamma = int_pow(f->order(), s * s);
    sp.n_core = int_pow(f->order(), p * p);
    sp.n_rowsets = std::uint64_t(1) << sp.rows.size();
    sp.total = sp.n_gamma * sp.n_core * sp.n_rowsets * sp.n_rowsets;
    return sp;
}

FMatrix digits_matrix(const FieldPtr& f, int r, int c, std::uint64_t code) {
    FMatrix m(f, r, c);
    const int q = f->order();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            m.set(i, j, static_cast<elem>(code % q));
            code /= q;
        }
    return m;
}

// Split a row set over F^{p+s} into the (p columns | s columns) pair.
std::pair<FMatrix, FMatrix> split_rows(const FieldPtr& f, int p, int s,
                                       const std::vector<std::vector<elem>>& rows) {
    FMatrix left(f, static_cast<int>(rows.size()), p);
    FMatrix right(f, static_cast<int>(rows.size()), s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int j = 0; j < p; ++j) left.set(static_cast<int>(r), j, rows[r][j]);
        for (int j = 0; j < s; ++j) right.set(static_cast<int>(r), j, rows[r][p + j]);
    }
    return {std::move(left), std::move(right)};
}

MatrixTuple tuple_at(const TupleSpace& sp, std::uint64_t idx) {
    const std::uint64_t g_code = idx % sp.n_gamma;
    idx /= sp.n_gamma;
    const std::uint64_t n_code = idx % sp.n_core;
    idx /= sp.n_core;
    const std::uint64_t p_mask = idx % sp.n_rowsets;
    const std::uint64_t q_mask = idx / sp.n_rowsets;
    MatrixTuple d;
    d.gamma = digits_matrix(sp.f, sp.s, sp.s, g_code);
    d.n = digits_matrix(sp.f, sp.p, sp.p, n_code);
    std::vector<std::vector<elem>> prows, qrows;
    for (std::size_t r = 0; r < sp.rows.size(); ++r) {
        if (p_mask >> r & 1u) prows.push_back(sp.rows[r]);
        if (q_mask >> r & 1u) qrows.push_back(sp.rows[r]);
    }
    std::tie(d.p1, d.p2) = split_rows(sp.f, sp.p, sp.s, prows);
    std::tie(d.q1, d.q2) = split_rows(sp.f, sp.p, sp.s, qrows);
    return d;
}

// Deterministic sampled stream. uniform_int_distribution is implementation
// defined, so raw engine output is reduced by hand.
std::vector<MatrixTuple> sampled_stream(const FieldPtr& f, int s, int p,
                                        std::uint64_t seed, std::size_t budget) {
    std::mt19937_64 rng(seed);
    const int q = f->order();
    std::uint64_t cap = 1;
    for (int i = 0; i < p + s && cap < 12; ++i) cap *= q;
    cap = std::min<std::uint64_t>(cap, 12);
    std::vector<MatrixTuple> out;
    out.reserve(budget);
    auto rnd_mat = [&](int r, int c) {
        FMatrix m(f, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.set(i, j, static_cast<elem>(rng() % q));
        return m;
    };
    for (std::size_t b = 0; b < budget; ++b) {
        MatrixTuple d;
        d.gamma = rnd_mat(s, s);
        d.n = rnd_mat(p, p);
        for (int side = 0; side < 2; ++side) {
            const auto want = static_cast<std::size_t>(rng() % (cap + 1));
            std::vector<std::vector<elem>> rows;
            for (int attempt = 0; rows.size() < want && attempt < 200; ++attempt) {
                std::vector<elem> v(p + s);
                for (auto& x : v) x = static_cast<elem>(rng() % q);
                if (std::find(rows.begin(), rows.end(), v) == rows.end())
                    rows.push_back(std::move(v));
            }
            auto [m1, m2] = split_rows(f, p, s, rows);
            if (side == 0) {
                d.p1 = std::move(m1);
                d.p2 = std::move(m2);
            } else {
                d.q1 = std::move(m1);
                d.q2 = std::move(m2);
            }
        }
        out.push_back(std::move(d));
    }
    return out;
}

// Runs fn on [0, count) split across workers; exceptions surface in the caller.
void scan_partition(std::uint64_t count, int threads,
                    const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
    if (threads <= 1 || count < 2) {
        fn(0, count);
        return;
    }
    const int workers = static_cast<int>(std::min<std::uint64_t>(threads, count));
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = chunk * w;
        const std::uint64_t hi = std::min<std::uint64_t>(count, lo + chunk);
        pool.emplace_back([&, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

// Rank of assemble_A per position, for one tuple.
std::vector<int> rank_row(const LinearSProfile& e, const MatrixTuple& d) {
    std::vector<int> out(static_cast<std::size_t>(e.t()));
    for (int i = 1; i <= e.t(); ++i)
        out[static_cast<std::size_t>(i - 1)] = assemble_A(e, d, i).rank();
    return out;
}

// Ranks of every position against every tuple in the scan, exhaustive scans
// partitioned over threads.
std::vector<std::vector<int>> rank_table(const LinearSProfile& e, int p,
                                         const TupleScan& scan) {
    if (scan.mode == TupleMode::sampled) {
        const auto stream = sampled_stream(e.field(), e.s(), p, scan.seed, scan.budget);
        std::vector<std::vector<int>> table(stream.size());
        scan_partition(stream.size(), scan.threads, [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) table[i] = rank_row(e, stream[i]);
        });
        return table;
    }
    const auto sp = make_space(e.field(), e.s(), p);
    std::vector<std::vector<int>> table(sp.total);
    scan_partition(sp.total, scan.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) table[i] = rank_row(e, tuple_at(sp, i));
    });
    return table;
}

}  // namespace

LinearSProfile::LinearSProfile(FieldPtr f, SesquiMorphism sigma, int s,
                               std::vector<ProfileIndex> blocks, FMultiset mu)
    : f_(std::move(f)), sigma_(std::move(sigma)), s_(s), idx_(std::move(blocks)),
      mu_(std::move(mu)) {
    if (!f_) fail("DimensionMismatch", "profile needs a field");
    if (s_ < 0 || idx_.empty()) fail("DimensionMismatch", "profile needs s >= 0 and t >= 1");
    for (const auto& b : idx_) {
        if (b.y1.rows() != b.y2.rows() || b.z1.rows() != b.z2.rows())
            fail("DimensionMismatch", "split blocks must pair row for row");
        if (b.y2.cols() != s_ || b.z2.cols() != s_)
            fail("DimensionMismatch", "label blocks must have s columns");
    }
    // Distinct Y2 rows may only accumulate, distinct Z2 rows only drain.
    for (std::size_t i = 0; i + 1 < idx_.size(); ++i) {
        if (!rest_subset(rest_rows(idx_[i].y2), rest_rows(idx_[i + 1].y2)))
            fail("DimensionMismatch", "Y2 label rows must grow along the index axis");
        if (!rest_subset(rest_rows(idx_[i + 1].z2), rest_rows(idx_[i].z2)))
            fail("DimensionMismatch", "Z2 label rows must shrink along the index axis");
    }
    for (const auto& [tr, mult] : mu_.items()) {
        (void)mult;
        if (static_cast<int>(tr.v1.size()) != s_ || static_cast<int>(tr.v2.size()) != s_)
            fail("DimensionMismatch", "boundary triples must be s-dimensional");
        if (tr.t == 0) fail("ZeroT", "boundary triple with zero pivot value");
    }
}

const ProfileIndex& LinearSProfile::at(int i) const {
    if (i < 1 || i > t()) fail("IndexOutOfRange", "profile position out of range");
    return idx_[static_cast<std::size_t>(i - 1)];
}

bool LinearSProfile::operator==(const LinearSProfile& o) const {
    if (s_ != o.s_ || idx_.size() != o.idx_.size() || !(mu_ == o.mu_)) return false;
    if ((f_ == nullptr) != (o.f_ == nullptr) || (f_ && f_->order() != o.f_->order()))
        return false;
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        const auto& a = idx_[i];
        const auto& b = o.idx_[i];
        if (!(a.y1 == b.y1 && a.y2 == b.y2 && a.z1 == b.z1 && a.z2 == b.z2 && a.m == b.m))
            return false;
    }
    return true;
}

LinearSProfile profile_of(const BoundariedSGraph& g, const LinearEncoding& e) {
    const SGraph& base = g.base();
    if (!decode_check(base, e)) fail("EncodingMismatch", "encoding does not match the graph");
    const auto& f = base.field();
    const int s = g.s();
    const int t = e.t;
    std::vector<ProfileIndex> blocks;
    blocks.reserve(static_cast<std::size_t>(t));
    for (int i = 1; i < t; ++i) {
        const FMatrix& N = e.n_mats[static_cast<std::size_t>(i - 1)];
        const FMatrix& P = e.p_mats[static_cast<std::size_t>(i - 1)];
        // Rows pair a coefficient row with the label of a vertex using it,
        // walked in coefficient order and deduplicated.
        std::vector<std::vector<elem>> yrows, zrows;
        for (int r = 0; r < N.rows(); ++r)
            for (int xi = 0; xi < i; ++xi) {
                const int x = e.order[static_cast<std::size_t>(xi)];
                if (e.row_of[static_cast<std::size_t>(i - 1)].at(x) != r) continue;
                auto row = N.row(r);
                const auto& lab = g.gamma_of(x);
                row.insert(row.end(), lab.begin(), lab.end());
                if (std::find(yrows.begin(), yrows.end(), row) == yrows.end())
                    yrows.push_back(std::move(row));
            }
        for (int r = 0; r < P.rows(); ++r)
            for (int yi = i; yi < t; ++yi) {
                const int y = e.order[static_cast<std::size_t>(yi)];
                if (e.col_of[static_cast<std::size_t>(i - 1)].at(y) != r) continue;
                auto row = P.row(r);
                const auto& lab = g.gamma_of(y);
                row.insert(row.end(), lab.begin(), lab.end());
                if (std::find(zrows.begin(), zrows.end(), row) == zrows.end())
                    zrows.push_back(std::move(row));
            }
        ProfileIndex b;
        const int yc = N.cols(), zc = P.cols();
        b.y1 = FMatrix(f, static_cast<int>(yrows.size()), yc);
        b.y2 = FMatrix(f, static_cast<int>(yrows.size()), s);
        for (std::size_t r = 0; r < yrows.size(); ++r) {
            for (int j = 0; j < yc; ++j) b.y1.set(static_cast<int>(r), j, yrows[r][j]);
            for (int j = 0; j < s; ++j) b.y2.set(static_cast<int>(r), j, yrows[r][yc + j]);
        }
        b.z1 = FMatrix(f, static_cast<int>(zrows.size()), zc);
        b.z2 = FMatrix(f, static_cast<int>(zrows.size()), s);
        for (std::size_t r = 0; r < zrows.size(); ++r) {
            for (int j = 0; j < zc; ++j) b.z1.set(static_cast<int>(r), j, zrows[r][j]);
            for (int j = 0; j < s; ++j) b.z2.set(static_cast<int>(r), j, zrows[r][zc + j]);
        }
        b.m = e.m_mats[static_cast<std::size_t>(i - 1)];
        blocks.push_back(std::move(b));
    }
    // The final position records only the labels: Y(t) = (0 gamma) over all
    // vertices, Z(t) empty so its row set stays below every earlier one.
    ProfileIndex last;
    last.y1 = FMatrix(f, t, 0);
    last.y2 = FMatrix(f, t, s);
    for (int xi = 0; xi < t; ++xi) {
        const auto& lab = g.gamma_of(e.order[static_cast<std::size_t>(xi)]);
        for (int j = 0; j < s; ++j) last.y2.set(xi, j, lab[static_cast<std::size_t>(j)]);
    }
    last.z1 = FMatrix(f, 0, 0);
    last.z2 = FMatrix(f, 0, s);
    last.m = FMatrix(f, 0, 0);
    blocks.push_back(std::move(last));
    return LinearSProfile(f, g.base().sigma(), s, std::move(blocks), g.mu());
}

FMatrix assemble_A(const LinearSProfile& e, const MatrixTuple& d, int i) {
    const auto& b = e.at(i);
    check_tuple(e, d);
    const auto& f = e.field();
    const FMatrix tl = sandwich(b.y1, b.m, b.z1);
    const FMatrix tr = sandwich(b.y2, d.gamma, d.q2);
    const FMatrix bl = sandwich(b.z2, d.gamma, d.p2).transposed();
    FMatrix br = sandwich(d.p1, d.n, d.q1);
    // Each boundary triple contributes one star correction per copy; the
    // corrections commute entrywise, so map order is immaterial.
    for (const auto& [trp, mult] : e.mu().items()) {
        const auto cx_rows = chain_values(f, trp.v1, d.gamma, d.p2);
        const auto cx_cols = chain_values(f, trp.v1, d.gamma, d.q2);
        const auto cy_rows = chain_values(f, trp.v2, d.gamma, d.p2);
        const auto cy_cols = chain_values(f, trp.v2, d.gamma, d.q2);
        for (int c = 0; c < mult; ++c)
            br = star_rect(br, e.sigma(), cx_rows, cx_cols, cy_rows, cy_cols, trp.t);
    }
    return block2x2(f, tl, tr, bl, br);
}

WidthEstimate p_width(const LinearSProfile& e, int p, const TupleScan& scan) {
    const auto table = rank_table(e, p, scan);
    int best = 0;
    for (const auto& row : table)
        for (int r : row) best = std::max(best, r);
    return {best, scan.mode == TupleMode::exhaustive};
}

bool directly_dominates(const LinearSProfile& e1, const LinearSProfile& e2, int p,
                        const TupleScan& scan) {
    if (e1.t() != e2.t() || e1.s() != e2.s() ||
        e1.field()->order() != e2.field()->order())
        fail("DimensionMismatch", "profiles must share s, t and the field");
    std::atomic<bool> ok{true};
    auto check = [&](const MatrixTuple& d) {
        for (int i = 1; i <= e1.t() && ok.load(); ++i)
            if (assemble_A(e1, d, i).rank() > assemble_A(e2, d, i).rank()) {
                ok.store(false);
                return;
            }
    };
    if (scan.mode == TupleMode::sampled) {
        const auto stream = sampled_stream(e1.field(), e1.s(), p, scan.seed, scan.budget);
        scan_partition(stream.size(), scan.threads, [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi && ok.load(); ++i) check(stream[i]);
        });
        return ok.load();
    }
    const auto sp = make_space(e1.field(), e1.s(), p);
    scan_partition(sp.total, scan.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi && ok.load(); ++i) check(tuple_at(sp, i));
    });
    return ok.load();
}

LinearSProfile subdivide(const LinearSProfile& e, int i) {
    if (i < 1 || i > e.t()) fail("IndexOutOfRange", "subdivision position out of range");
    std::vector<ProfileIndex> blocks;
    blocks.reserve(static_cast<std::size_t>(e.t()) + 1);
    for (int j = 1; j <= i; ++j) blocks.push_back(e.at(j));
    for (int j = i; j <= e.t(); ++j) blocks.push_back(e.at(j));
    return LinearSProfile(e.field(), e.sigma(), e.s(), std::move(blocks), e.mu());
}

LinearSProfile dual_profile(const LinearSProfile& e) {
    std::vector<ProfileIndex> blocks;
    blocks.reserve(static_cast<std::size_t>(e.t()));
    for (int i = 1; i <= e.t(); ++i) {
        const auto& src = e.at(e.t() - i + 1);
        ProfileIndex b;
        b.y1 = src.z1;
        b.y2 = src.z2;
        b.z1 = src.y1;
        b.z2 = src.y2;
        b.m = src.m.transposed();
        blocks.push_back(std::move(b));
    }
    return LinearSProfile(e.field(), e.sigma(), e.s(), std::move(blocks), e.mu());
}

MatrixTuple dual_tuple(const MatrixTuple& d) {
    MatrixTuple out;
    out.gamma = d.gamma;
    out.n = d.n.transposed();
    out.p1 = d.q1;
    out.p2 = d.q2;
    out.q1 = d.p1;
    out.q2 = d.p2;
    return out;
}

std::optional<std::pair<int, int>> find_redundant_pair(const LinearSProfile& e, int p,
                                                       const TupleScan& scan) {
    const int t = e.t();
    if (t < 3) return std::nullopt;
    const auto table = rank_table(e, p, scan);
    std::vector<std::vector<std::vector<elem>>> ry, rz;
    for (int i = 1; i <= t; ++i) {
        ry.push_back(rest_rows(e.at(i).y2));
        rz.push_back(rest_rows(e.at(i).z2));
    }
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) {
            if (std::abs(i - j) < 2) continue;
            const int lo = std::min(i, j), hi = std::max(i, j);
            bool good = true;
            for (int l = lo; good && l <= hi; ++l)
                good = rest_equal(ry[static_cast<std::size_t>(l - 1)],
                                  ry[static_cast<std::size_t>(i - 1)]) &&
                       rest_equal(rz[static_cast<std::size_t>(l - 1)],
                                  rz[static_cast<std::size_t>(i - 1)]);
            for (const auto& row : table) {
                if (!good) break;
                for (int l = lo; good && l <= hi; ++l)
                    good = row[static_cast<std::size_t>(i - 1)] <=
                               row[static_cast<std::size_t>(l - 1)] &&
                           row[static_cast<std::size_t>(l - 1)] <=
                               row[static_cast<std::size_t>(j - 1)];
            }
            if (good) return std::make_pair(i, j);
        }
    return std::nullopt;
}

LinearSProfile shortcut(const LinearSProfile& e, std::pair<int, int> pair) {
    const int lo = std::min(pair.first, pair.second);
    const int hi = std::max(pair.first, pair.second);
    if (lo < 1 || hi > e.t() || hi - lo < 2)
        fail("IndexOutOfRange", "shortcut needs a window of width at least two");
    std::vector<ProfileIndex> blocks;
    for (int j = 1; j <= lo; ++j) blocks.push_back(e.at(j));
    for (int j = hi; j <= e.t(); ++j) blocks.push_back(e.at(j));
    return LinearSProfile(e.field(), e.sigma(), e.s(), std::move(blocks), e.mu());
}

bool is_homogeneous(const LinearSProfile& e, int p, const TupleScan& scan) {
    if (find_redundant_pair(e, p, scan)) return false;
    const auto y0 = rest_rows(e.at(1).y2);
    const auto z0 = rest_rows(e.at(1).z2);
    for (int i = 2; i <= e.t(); ++i)
        if (!rest_equal(rest_rows(e.at(i).y2), y0) || !rest_equal(rest_rows(e.at(i).z2), z0))
            return false;
    return true;
}

std::optional<int> extreme_index(const LinearSProfile& e, const MatrixTuple& d) {
    const int t = e.t();
    std::vector<int> rk;
    rk.reserve(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) rk.push_back(assemble_A(e, d, i).rank());
    for (int i = 0; i < t; ++i) {
        bool strict_max = true, strict_min = true;
        for (int j = 0; j < t; ++j) {
            if (j == i) continue;
            strict_max = strict_max && rk[static_cast<std::size_t>(i)] > rk[static_cast<std::size_t>(j)];
            strict_min = strict_min && rk[static_cast<std::size_t>(i)] < rk[static_cast<std::size_t>(j)];
        }
        if (strict_max || strict_min) return i + 1;
    }
    return std::nullopt;
}

bool mergeable(const LinearSProfile& e, const LinearSProfile& f, const FMatrix& gamma,
               int p) {
    if (e.t() != f.t() || e.s() != f.s() || e.field()->order() != f.field()->order())
        fail("DimensionMismatch", "profiles must share s, t and the field");
    if (!f.mu().empty()) fail("DimensionMismatch", "right profile must carry no boundary");
    if (gamma.rows() != e.s() || gamma.cols() != e.s())
        fail("DimensionMismatch", "Gamma must be s x s");
    const auto& fld = e.field();
    for (int i = 1; i <= e.t(); ++i) {
        const auto& eb = e.at(i);
        const auto& fb = f.at(i);
        FMatrix core = sandwich(fb.y1, fb.m, fb.z1);
        for (const auto& [trp, mult] : e.mu().items()) {
            const auto cx_rows = chain_values(fld, trp.v1, gamma, fb.y2);
            const auto cx_cols = chain_values(fld, trp.v1, gamma, fb.z2);
            const auto cy_rows = chain_values(fld, trp.v2, gamma, fb.y2);
            const auto cy_cols = chain_values(fld, trp.v2, gamma, fb.z2);
            for (int c = 0; c < mult; ++c)
                core = star_rect(core, e.sigma(), cx_rows, cx_cols, cy_rows, cy_cols, trp.t);
        }
        const FMatrix tl = sandwich(eb.y1, eb.m, eb.z1);
        const FMatrix tr = sandwich(eb.y2, gamma, fb.z2);
        const FMatrix bl = sandwich(eb.z2, gamma, fb.y2).transposed();
        if (block2x2(fld, tl, tr, bl, core).rank() > p) return false;
    }
    return true;
}

}  // namespace lrw
