#include "lrw/matrix.hpp"

#include <algorithm>
#include <string>

namespace lrw {

namespace {

std::vector<int> iota_labels(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

// Rank of a GF(2) matrix given as packed rows (words per row).
int rank_gf2(std::vector<std::uint64_t>& w, int nr, int words) {
    int r = 0;
    for (int bit = 0; bit < words * 64 && r < nr; ++bit) {
        const int wi = bit >> 6;
        const std::uint64_t mask = 1ULL << (bit & 63);
        int pivot = -1;
        for (int i = r; i < nr; ++i)
            if (w[i * words + wi] & mask) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int k = 0; k < words; ++k)
            std::swap(w[r * words + k], w[pivot * words + k]);
        for (int i = 0; i < nr; ++i) {
            if (i == r) continue;
            if (w[i * words + wi] & mask)
                for (int k = 0; k < words; ++k)
                    w[i * words + k] ^= w[r * words + k];
        }
        ++r;
    }
    return r;
}

} // namespace

FMatrix::FMatrix(FieldPtr f, std::vector<int> row_labels, std::vector<int> col_labels)
    : field_(std::move(f)),
      nr_(static_cast<int>(row_labels.size())),
      nc_(static_cast<int>(col_labels.size())),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      a_(static_cast<size_t>(nr_) * nc_, 0) {}

FMatrix::FMatrix(FieldPtr f, int r, int c)
    : FMatrix(std::move(f), iota_labels(r), iota_labels(c)) {}

FMatrix FMatrix::from_entries(FieldPtr f, int r, int c, const std::vector<int>& entries) {
    if (static_cast<int>(entries.size()) != r * c)
        fail("DimensionMismatch", "entry count != rows * cols");
    FMatrix m(std::move(f), r, c);
    for (int i = 0; i < r * c; ++i) {
        int v = entries[i];
        if (v < 0 || v >= m.field_->order())
            fail("DimensionMismatch", "entry " + std::to_string(v) + " outside field");
        m.a_[i] = static_cast<elem>(v);
    }
    return m;
}

int FMatrix::row_index(int label) const {
    for (int i = 0; i < nr_; ++i)
        if (row_labels_[i] == label) return i;
    return -1;
}

int FMatrix::col_index(int label) const {
    for (int i = 0; i < nc_; ++i)
        if (col_labels_[i] == label) return i;
    return -1;
}

FMatrix FMatrix::submatrix(const std::vector<int>& rls, const std::vector<int>& cls) const {
    FMatrix m(field_, rls, cls);
    for (size_t i = 0; i < rls.size(); ++i) {
        const int ri = row_index(rls[i]);
        if (ri < 0) fail("UnknownVertex", "row label " + std::to_string(rls[i]));
        for (size_t j = 0; j < cls.size(); ++j) {
            const int ci = col_index(cls[j]);
            if (ci < 0) fail("UnknownVertex", "column label " + std::to_string(cls[j]));
            m.set(static_cast<int>(i), static_cast<int>(j), at(ri, ci));
        }
    }
    return m;
}

FMatrix FMatrix::transposed() const {
    FMatrix m(field_, col_labels_, row_labels_);
    for (int i = 0; i < nr_; ++i)
        for (int j = 0; j < nc_; ++j)
            m.set(j, i, at(i, j));
    return m;
}

FMatrix FMatrix::times(const FMatrix& o) const {
    if (nc_ != o.nr_) fail("DimensionMismatch", "inner dimensions differ");
    const Field& F = *field_;
    FMatrix r(field_, row_labels_, o.col_labels_);
    for (int i = 0; i < nr_; ++i)
        for (int k = 0; k < nc_; ++k) {
            const elem aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.nc_; ++j)
                r.set(i, j, F.add(r.at(i, j), F.mul(aik, o.at(k, j))));
        }
    return r;
}

std::vector<elem> FMatrix::row(int r) const {
    return std::vector<elem>(a_.begin() + static_cast<size_t>(r) * nc_,
                             a_.begin() + static_cast<size_t>(r + 1) * nc_);
}

void FMatrix::set_row(int r, const std::vector<elem>& v) {
    std::copy(v.begin(), v.end(), a_.begin() + static_cast<size_t>(r) * nc_);
}

int FMatrix::rank() const {
    if (nr_ == 0 || nc_ == 0) return 0;
    if (field_->order() == 2) {
        const int words = (nc_ + 63) / 64;
        std::vector<std::uint64_t> w(static_cast<size_t>(nr_) * words, 0);
        for (int i = 0; i < nr_; ++i)
            for (int j = 0; j < nc_; ++j)
                if (at(i, j)) w[i * words + (j >> 6)] |= 1ULL << (j & 63);
        return rank_gf2(w, nr_, words);
    }
    const Field& F = *field_;
    std::vector<elem> w(a_);
    int r = 0;
    for (int c = 0; c < nc_ && r < nr_; ++c) {
        int pivot = -1;
        for (int i = r; i < nr_; ++i)
            if (w[i * nc_ + c]) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < nc_; ++j) std::swap(w[r * nc_ + j], w[pivot * nc_ + j]);
        const elem pinv = F.inv(w[r * nc_ + c]);
        for (int j = c; j < nc_; ++j) w[r * nc_ + j] = F.mul(w[r * nc_ + j], pinv);
        for (int i = 0; i < nr_; ++i) {
            if (i == r) continue;
            const elem m = w[i * nc_ + c];
            if (m == 0) continue;
            for (int j = c; j < nc_; ++j)
                w[i * nc_ + j] = F.sub(w[i * nc_ + j], F.mul(m, w[r * nc_ + j]));
        }
        ++r;
    }
    return r;
}

int rank(const FMatrix& m) { return m.rank(); }

FMatrix extended_product(const FMatrix& a, const FMatrix& b) {
    if (a.rows() == 0 || b.cols() == 0 || a.field() == nullptr || b.field() == nullptr) {
        FieldPtr f = a.field() ? a.field() : b.field();
        return FMatrix(f, a.rows(), b.cols());
    }
    const int inner = std::max(a.cols(), b.rows());
    const Field& F = *a.field();
    FMatrix r(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < inner; ++k) {
            const elem aik = k < a.cols() ? a.at(i, k) : 0;
            if (aik == 0 || k >= b.rows()) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.set(i, j, F.add(r.at(i, j), F.mul(aik, b.at(k, j))));
        }
    return r;
}

FMatrix sandwich(const FMatrix& a, const FMatrix& b, const FMatrix& c) {
    return extended_product(extended_product(a, b), c.transposed());
}

bool is_sigma_symmetric(const FMatrix& m, const SesquiMorphism& sigma) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != sigma(m.at(j, i))) return false;
    return true;
}

FMatrix star_rect(const FMatrix& m, const SesquiMorphism& sigma,
                  const std::vector<elem>& cx_rows, const std::vector<elem>& cx_cols,
                  const std::vector<elem>& cy_rows, const std::vector<elem>& cy_cols,
                  elem t) {
    if (t == 0) fail("ZeroT", "star requires t != 0");
    const Field& F = *m.field();
    const elem st = sigma(t);
    if (st == 0) fail("ZeroT", "sigma(t) = 0");
    const elem sti = F.inv(st), ti = F.inv(t);
    FMatrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            elem v = m.at(i, j);
            v = F.sub(v, F.mul(F.mul(sigma(cx_rows[i]), cy_cols[j]), sti));
            v = F.sub(v, F.mul(F.mul(sigma(cy_rows[i]), cx_cols[j]), ti));
            r.set(i, j, v);
        }
    return r;
}

FMatrix star(const FMatrix& m, const SesquiMorphism& sigma,
             const std::map<int, elem>& cx, const std::map<int, elem>& cy, elem t) {
    if (m.rows() != m.cols() || m.row_labels() != m.col_labels())
        fail("NotSquare", "star needs a square matrix with equal row/column labels");
    auto look = [&](const std::map<int, elem>& c, int label) {
        auto it = c.find(label);
        if (it == c.end())
            fail("UnknownVertex", "no coefficient for label " + std::to_string(label));
        return it->second;
    };
    std::vector<elem> cxr, cyr;
    for (int l : m.row_labels()) { cxr.push_back(look(cx, l)); cyr.push_back(look(cy, l)); }
    return star_rect(m, sigma, cxr, cxr, cyr, cyr, t);
}

std::optional<std::vector<elem>> solve_row(const std::vector<elem>& target,
                                           const FMatrix& basis) {
    if (static_cast<int>(target.size()) != basis.cols())
        fail("DimensionMismatch", "target length != basis columns");
    const Field& F = *basis.field();
    const int n = basis.rows(), c = basis.cols();
    // Solve B^T u^T = target^T by elimination on [B^T | target].
    std::vector<elem> w(static_cast<size_t>(c) * (n + 1));
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < n; ++j) w[i * (n + 1) + j] = basis.at(j, i);
        w[i * (n + 1) + n] = target[i];
    }
    std::vector<int> pivot_col(c, -1);
    int r = 0;
    for (int col = 0; col < n && r < c; ++col) {
        int p = -1;
        for (int i = r; i < c; ++i)
            if (w[i * (n + 1) + col]) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j <= n; ++j) std::swap(w[r * (n + 1) + j], w[p * (n + 1) + j]);
        const elem pi = F.inv(w[r * (n + 1) + col]);
        for (int j = col; j <= n; ++j) w[r * (n + 1) + j] = F.mul(w[r * (n + 1) + j], pi);
        for (int i = 0; i < c; ++i) {
            if (i == r) continue;
            const elem m = w[i * (n + 1) + col];
            if (!m) continue;
            for (int j = col; j <= n; ++j)
                w[i * (n + 1) + j] = F.sub(w[i * (n + 1) + j], F.mul(m, w[r * (n + 1) + j]));
        }
        pivot_col[r] = col;
        ++r;
    }
    for (int i = r; i < c; ++i)
        if (w[i * (n + 1) + n]) return std::nullopt; // inconsistent
    std::vector<elem> u(n, 0);
    for (int i = 0; i < r; ++i) u[pivot_col[i]] = w[i * (n + 1) + n];
    return u;
}

} // namespace lrw
