#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lrw/errors.hpp"

namespace lrw {

/// A field element, encoded as an integer in [0, q). For GF(p^k) the base-p
/// digits of the code are the polynomial coefficients, lowest degree first.
using elem = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^k) with q = p^k <= 256, arithmetic via dense q*q lookup tables.
class Field {
public:
    /// Builds GF(p^k) modulo the given irreducible polynomial (coefficients
    /// low to high). For k == 1 the modulus is irrelevant and may be given as
    /// the conventional marker [1]. Throws NotPrime, ReduciblePoly, or
    /// SizeLimitExceeded (q > 256).
    static FieldPtr make(int p, int k, std::vector<int> poly);

    /// Built-in field for q in {2,3,4,5,7,8,9,16}, with a fixed irreducible
    /// modulus. Cached; repeated calls return the same object.
    static FieldPtr gf(int q);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    int order() const { return q_; }
    const std::vector<int>& modulus() const { return poly_; }

    elem add(elem a, elem b) const { return add_[a * q_ + b]; }
    elem sub(elem a, elem b) const { return add_[a * q_ + neg_[b]]; }
    elem mul(elem a, elem b) const { return mul_[a * q_ + b]; }
    elem neg(elem a) const { return neg_[a]; }

    /// Multiplicative inverse; a must be nonzero.
    elem inv(elem a) const {
        if (a == 0) fail("DivisionByZero", "inverse of zero");
        return inv_[a];
    }
    elem div(elem a, elem b) const { return mul(a, inv(b)); }

    elem pow(elem a, long e) const;

    /// x -> x^(p^j), the j-th power of the Frobenius automorphism.
    elem frobenius(elem a, int j) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && poly_ == o.poly_;
    }

private:
    Field() = default;

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> poly_;
    std::vector<elem> add_, mul_, neg_, inv_;
};

/// An involution sigma on F with sigma(1) != 0 whose quotient x ->
/// sigma(x)/sigma(1) is a field automorphism. Validated exhaustively at
/// construction (q <= 256 makes that cheap).
class SesquiMorphism {
public:
    /// Placeholder state for default-constructed graphs; not usable until
    /// replaced by a factory-built morphism.
    SesquiMorphism() = default;

    static SesquiMorphism identity(FieldPtr f);
    static SesquiMorphism negation(FieldPtr f);
    /// x -> x^(p^j); throws NotInvolution unless 2j == 0 (mod k).
    static SesquiMorphism frobenius(FieldPtr f, int j);
    /// Arbitrary table of q values. Throws NotInvolution, UndefinedQuotient
    /// (sigma(1) = 0), or NotSesqui (quotient fails the automorphism test).
    static SesquiMorphism from_table(FieldPtr f, std::vector<int> table);

    elem operator()(elem a) const { return table_[a]; }
    elem sigma1() const { return table_[1]; }
    const FieldPtr& field() const { return field_; }

    bool is_identity() const;

    /// How this morphism was named at construction; used for serialization.
    /// One of "identity", "negation", "frobenius <j>", "table".
    const std::string& description() const { return desc_; }

    bool operator==(const SesquiMorphism& o) const {
        return *field_ == *o.field_ && table_ == o.table_;
    }

private:
    SesquiMorphism(FieldPtr f, std::vector<elem> t, std::string d);
    static void validate(const Field& f, const std::vector<elem>& t);

    FieldPtr field_;
    std::vector<elem> table_;
    std::string desc_;
};

} // namespace lrw
