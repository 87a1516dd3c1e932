#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "lrw/errors.hpp"
#include "lrw/field.hpp"

using namespace lrw;

static void check_axioms(const FieldPtr& f) {
    int q = f->order();
    for (int a = 0; a < q; ++a) {
        elem ea = static_cast<elem>(a);
        CHECK(f->add(ea, 0) == ea);
        CHECK(f->mul(ea, 1) == ea);
        CHECK(f->add(ea, f->neg(ea)) == 0);
        if (a != 0) {
            CHECK(f->mul(ea, f->inv(ea)) == 1);
            CHECK(f->pow(ea, q - 1) == 1);
        }
        for (int b = 0; b < q; ++b) {
            elem eb = static_cast<elem>(b);
            CHECK(f->add(ea, eb) == f->add(eb, ea));
            CHECK(f->mul(ea, eb) == f->mul(eb, ea));
            for (int c = 0; c < q; ++c) {
                elem ec = static_cast<elem>(c);
                CHECK(f->add(f->add(ea, eb), ec) == f->add(ea, f->add(eb, ec)));
                CHECK(f->mul(f->mul(ea, eb), ec) == f->mul(ea, f->mul(eb, ec)));
                CHECK(f->mul(ea, f->add(eb, ec)) == f->add(f->mul(ea, eb), f->mul(ea, ec)));
            }
        }
    }
    // the multiplicative group is closed and has no zero divisors
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b) CHECK(f->mul(static_cast<elem>(a), static_cast<elem>(b)) != 0);
}

TEST_CASE("built-in fields satisfy the field axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) check_axioms(Field::gf(q));
}

TEST_CASE("gf caches its objects") {
    CHECK(Field::gf(4).get() == Field::gf(4).get());
    CHECK(Field::gf(4)->characteristic() == 2);
    CHECK(Field::gf(4)->degree() == 2);
    CHECK(Field::gf(9)->characteristic() == 3);
}

TEST_CASE("gf4 multiplies polynomials modulo its irreducible") {
    auto f = Field::gf(4);
    // codes: 2 = x, 3 = x + 1, with x^2 = x + 1
    CHECK(f->mul(2, 2) == 3);
    CHECK(f->mul(2, 3) == 1);
    CHECK(f->add(2, 3) == 1);
}

TEST_CASE("characteristic addition wraps") {
    auto f = Field::gf(8);
    for (int a = 0; a < 8; ++a) CHECK(f->add(static_cast<elem>(a), static_cast<elem>(a)) == 0);
    auto g = Field::gf(9);
    for (int a = 0; a < 9; ++a) {
        elem e = static_cast<elem>(a);
        CHECK(g->add(g->add(e, e), e) == 0);
    }
}

TEST_CASE("frobenius is a field automorphism") {
    for (int q : {4, 8, 9, 16}) {
        auto f = Field::gf(q);
        for (int j = 0; j < f->degree(); ++j)
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    elem ea = static_cast<elem>(a), eb = static_cast<elem>(b);
                    CHECK(f->frobenius(f->add(ea, eb), j) ==
                          f->add(f->frobenius(ea, j), f->frobenius(eb, j)));
                    CHECK(f->frobenius(f->mul(ea, eb), j) ==
                          f->mul(f->frobenius(ea, j), f->frobenius(eb, j)));
                }
    }
}

TEST_CASE("make rejects bad parameters") {
    CHECK_THROWS_WITH_AS(Field::make(4, 1, {1}), doctest::Contains("NotPrime"), error);
    CHECK_THROWS_WITH_AS(Field::make(2, 2, {1, 0, 1}), doctest::Contains("ReduciblePoly"), error);
    CHECK_THROWS_WITH_AS(Field::make(2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}),
                         doctest::Contains("SizeLimitExceeded"), error);
}

TEST_CASE("make builds gf4 from an explicit modulus") {
    auto f = Field::make(2, 2, {1, 1, 1});
    CHECK(f->order() == 4);
    CHECK(f->mul(2, 2) == 3);
}

TEST_CASE("identity and negation morphisms") {
    auto f3 = Field::gf(3);
    auto id = SesquiMorphism::identity(f3);
    auto neg = SesquiMorphism::negation(f3);
    CHECK(id.is_identity());
    CHECK(!neg.is_identity());
    CHECK(id.sigma1() == 1);
    CHECK(neg.sigma1() == 2);
    for (int a = 0; a < 3; ++a) {
        CHECK(id(static_cast<elem>(a)) == a);
        CHECK(neg(static_cast<elem>(a)) == f3->neg(static_cast<elem>(a)));
    }
    CHECK(id.description() == "identity");
    CHECK(neg.description() == "negation");
}

TEST_CASE("negation over characteristic two is the identity") {
    auto f2 = Field::gf(2);
    CHECK(SesquiMorphism::negation(f2).is_identity());
}

TEST_CASE("frobenius morphism needs an involutive power") {
    auto f4 = Field::gf(4);
    auto conj = SesquiMorphism::frobenius(f4, 1);
    CHECK(conj(2) == 3);
    CHECK(conj(3) == 2);
    CHECK(conj(conj(2)) == 2);
    auto f8 = Field::gf(8);
    CHECK_THROWS_WITH_AS(SesquiMorphism::frobenius(f8, 1), doctest::Contains("NotInvolution"),
                         error);
    CHECK(SesquiMorphism::frobenius(f8, 0).is_identity());
}

TEST_CASE("from_table validates hard") {
    auto f3 = Field::gf(3);
    auto neg = SesquiMorphism::from_table(f3, {0, 2, 1});
    CHECK(neg == SesquiMorphism::negation(f3));

    // not an involution
    CHECK_THROWS_WITH_AS(SesquiMorphism::from_table(f3, {0, 1, 1}),
                         doctest::Contains("NotInvolution"), error);
    // sigma(1) = 0 leaves the quotient undefined
    CHECK_THROWS_WITH_AS(SesquiMorphism::from_table(f3, {1, 0, 2}),
                         doctest::Contains("UndefinedQuotient"), error);
    // involution whose quotient is no automorphism of a prime field
    auto f5 = Field::gf(5);
    CHECK_THROWS_WITH_AS(SesquiMorphism::from_table(f5, {0, 1, 3, 2, 4}),
                         doctest::Contains("NotSesqui"), error);
}

TEST_CASE("sesqui quotient is an automorphism by construction") {
    auto f9 = Field::gf(9);
    auto sig = SesquiMorphism::frobenius(f9, 1);
    elem s1 = sig.sigma1();
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            elem ea = static_cast<elem>(a), eb = static_cast<elem>(b);
            elem qa = f9->div(sig(ea), s1), qb = f9->div(sig(eb), s1);
            CHECK(f9->div(sig(f9->mul(ea, eb)), s1) == f9->mul(qa, qb));
            CHECK(f9->div(sig(f9->add(ea, eb)), s1) == f9->add(qa, qb));
        }
}

TEST_CASE("division by zero is refused") {
    auto f = Field::gf(5);
    CHECK_THROWS_WITH_AS(f->inv(0), doctest::Contains("DivisionByZero"), error);
}
