#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/width.hpp"

namespace lrw {

// One position of a linear s-profile: Y(i) split as (Y1 | Y2), Z(i) as
// (Z1 | Z2), plus the core matrix M(i). Y2 and Z2 rows live in F^s.
struct ProfileIndex {
    FMatrix y1, y2, z1, z2, m;
};

// A linear s-profile (Y, Z, mu, M, t). The constructor enforces that the
// distinct-row sets of Y2 grow and those of Z2 shrink along the index axis,
// and that mu's triples are s-dimensional with nonzero pivot values.
class LinearSProfile {
public:
    LinearSProfile() = default;
    LinearSProfile(FieldPtr f, SesquiMorphism sigma, int s,
                   std::vector<ProfileIndex> blocks, FMultiset mu);

    const FieldPtr& field() const { return f_; }
    const SesquiMorphism& sigma() const { return sigma_; }
    int s() const { return s_; }
    int t() const { return static_cast<int>(idx_.size()); }
    // Positions are 1-based, like layout prefixes.
    const ProfileIndex& at(int i) const;
    const FMultiset& mu() const { return mu_; }

    bool operator==(const LinearSProfile& o) const;

private:
    FieldPtr f_;
    SesquiMorphism sigma_;
    int s_ = 0;
    std::vector<ProfileIndex> idx_;
    FMultiset mu_;
};

// Witness tuple against which profile positions are ranked: Gamma is s x s,
// N at most p x p, and P = (P1 | P2), Q = (Q1 | Q2) are row sets with P1, Q1
// carrying p columns and P2, Q2 carrying s columns.
struct MatrixTuple {
    FMatrix gamma, n, p1, p2, q1, q2;
};

// How the tuple space is walked: exhaustively (only feasible over GF(2) with
// s <= 1 and p <= 1) or by a seeded sample of `budget` tuples. Exhaustive
// scans may be partitioned over threads.
enum class TupleMode { exhaustive, sampled };

struct TupleScan {
    TupleMode mode = TupleMode::exhaustive;
    std::uint64_t seed = 1;
    std::size_t budget = 2000;
    int threads = 1;
};

// A width value plus whether it is exact; sampled scans only ever certify a
// lower bound.
struct WidthEstimate {
    int value = 0;
    bool exact = true;
};

// The profile of a boundaried graph along one of its encodings: per position,
// rows pair the coefficient row of a placed vertex with its boundary label;
// the last position holds (0 gamma) against an empty Z.
LinearSProfile profile_of(const BoundariedSGraph& g, const LinearEncoding& e);

// The 2x2 block matrix whose rank scores position i against the tuple: the
// core product, the two Gamma cross blocks, and P1.N.Q1^t corrected by the
// boundary's star chain.
FMatrix assemble_A(const LinearSProfile& e, const MatrixTuple& d, int i);

WidthEstimate p_width(const LinearSProfile& e, int p, const TupleScan& scan = {});

// True when rank(A_{e1,D}(i)) <= rank(A_{e2,D}(i)) for every scanned tuple D
// and every position i. Profiles must share s and t.
bool directly_dominates(const LinearSProfile& e1, const LinearSProfile& e2, int p,
                        const TupleScan& scan = {});

// Duplicates position i. Subdividing preserves being a profile of a graph.
LinearSProfile subdivide(const LinearSProfile& e, int i);

// Reverses the index axis, swapping Y with Z and transposing M.
LinearSProfile dual_profile(const LinearSProfile& e);
// Transposes N and swaps P with Q; pairs with dual_profile so that
// rank(A_{e,d}(t-i+1)) = rank(A_{dual(e),dual(d)}(i)) when sigma is identity.
MatrixTuple dual_tuple(const MatrixTuple& d);

// First ordered pair (i, j), |i - j| >= 2, whose window has constant
// distinct-row sets and monotone ranks from i up to j against every scanned
// tuple. Sampled scans can only ever propose a pair.
std::optional<std::pair<int, int>> find_redundant_pair(const LinearSProfile& e, int p,
                                                       const TupleScan& scan = {});

// Removes the interior of the pair's window. Pure re-indexing; pair validity
// is the caller's business.
LinearSProfile shortcut(const LinearSProfile& e, std::pair<int, int> pair);

// Non-redundant with one shared (Rest(Y2), Rest(Z2)) pair across all indices.
bool is_homogeneous(const LinearSProfile& e, int p, const TupleScan& scan = {});

// First index whose rank against d strictly exceeds, or is strictly below,
// every other index's rank. A one-position profile is vacuously extreme.
std::optional<int> extreme_index(const LinearSProfile& e, const MatrixTuple& d);

// The merge feasibility test: at every position the block of e's core, the
// Gamma cross terms against f, and f's star-corrected core has rank <= p.
// f must carry an empty boundary.
bool mergeable(const LinearSProfile& e, const LinearSProfile& f, const FMatrix& gamma,
               int p);

}  // namespace lrw
