#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lrw/field.hpp"

namespace lrw {

/// Dense matrix over a finite field with labelled rows and columns. Values
/// are treated as immutable once built; all operations return new matrices.
/// Rank and elimination take a word-packed fast path when the field is GF(2).
class FMatrix {
public:
    FMatrix() = default;
    /// Zero matrix with the given labels.
    FMatrix(FieldPtr f, std::vector<int> row_labels, std::vector<int> col_labels);
    /// r x c zero matrix labelled 0..r-1 / 0..c-1.
    FMatrix(FieldPtr f, int r, int c);
    /// Row-major entries; labels 0..r-1 / 0..c-1.
    static FMatrix from_entries(FieldPtr f, int r, int c, const std::vector<int>& entries);

    int rows() const { return nr_; }
    int cols() const { return nc_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<int>& row_labels() const { return row_labels_; }
    const std::vector<int>& col_labels() const { return col_labels_; }

    elem at(int r, int c) const { return a_[static_cast<size_t>(r) * nc_ + c]; }
    void set(int r, int c, elem v) { a_[static_cast<size_t>(r) * nc_ + c] = v; }

    /// Index of a label, or -1.
    int row_index(int label) const;
    int col_index(int label) const;

    /// Submatrix by labels; throws UnknownVertex on a missing label.
    FMatrix submatrix(const std::vector<int>& rls, const std::vector<int>& cls) const;
    FMatrix transposed() const;

    /// Strict product; inner dimensions must match (DimensionMismatch).
    FMatrix times(const FMatrix& o) const;

    int rank() const;

    bool operator==(const FMatrix& o) const {
        return nr_ == o.nr_ && nc_ == o.nc_ && a_ == o.a_;
    }

    /// Rows as vectors, and back. Used by the encoding and profile machinery.
    std::vector<elem> row(int r) const;
    void set_row(int r, const std::vector<elem>& v);

private:
    FieldPtr field_;
    int nr_ = 0, nc_ = 0;
    std::vector<int> row_labels_, col_labels_;
    std::vector<elem> a_;
};

/// Product with zero-padding: the narrower inner dimension is padded with
/// zeros so the product is always defined. An empty factor yields the
/// conventional zero matrix of shape a.rows x b.cols.
FMatrix extended_product(const FMatrix& a, const FMatrix& b);

/// a * b * c^T, all factors zero-padded.
FMatrix sandwich(const FMatrix& a, const FMatrix& b, const FMatrix& c);

int rank(const FMatrix& m);

/// True iff m[x,y] = sigma(m[y,x]) for every entry (square, equal labels).
bool is_sigma_symmetric(const FMatrix& m, const SesquiMorphism& sigma);

/// The star update on a square matrix with row_labels == col_labels:
///   m'[i,j] = m[i,j] - sigma(cx(i)) * cy(j) / sigma(t) - sigma(cy(i)) * cx(j) / t.
/// cx and cy map every label to a field value; t must be nonzero (ZeroT).
/// Throws NotSquare if the label sets differ.
FMatrix star(const FMatrix& m, const SesquiMorphism& sigma,
             const std::map<int, elem>& cx, const std::map<int, elem>& cy, elem t);

/// Star on a rectangular matrix: cx/cy are given separately on row indices
/// and column indices (values of the same conceptual function on each side).
FMatrix star_rect(const FMatrix& m, const SesquiMorphism& sigma,
                  const std::vector<elem>& cx_rows, const std::vector<elem>& cx_cols,
                  const std::vector<elem>& cy_rows, const std::vector<elem>& cy_cols,
                  elem t);

/// Coefficients u with u * basis = target, if target lies in the row space.
std::optional<std::vector<elem>> solve_row(const std::vector<elem>& target,
                                           const FMatrix& basis);

} // namespace lrw
