#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lrw/errors.hpp"
#include "lrw/io.hpp"
#include "lrw/profiles.hpp"

using namespace lrw;

template <class T, class W>
static std::string dump(const T& x, W writer) {
    std::ostringstream out;
    writer(out, x);
    return out.str();
}

static std::string graph_text(const SGraph& g) {
    return dump(g, [](std::ostream& o, const SGraph& x) { return write_graph(o, x); });
}

TEST_CASE("graph round trip over gf4 with conjugation is byte-stable") {
    auto f4 = Field::gf(4);
    auto frob = SesquiMorphism::frobenius(f4, 1);
    SGraph g(f4, frob, {5, 7, 9});
    g.set_edge(5, 7, 2);
    g.set_edge(7, 9, 3);
    std::string text = graph_text(g);
    std::istringstream in(text);
    auto back = read_graph_input(in);
    CHECK_FALSE(back.boundaried.has_value());
    CHECK(back.base == g);
    CHECK(graph_text(back.base) == text);
}

TEST_CASE("boundaried graph round trip keeps gamma and the boundary multiset") {
    auto f3 = Field::gf(3);
    SGraph h(f3, SesquiMorphism::negation(f3), {0, 1});
    h.set_edge(0, 1, 2);
    std::map<int, std::vector<elem>> gam{{0, {1}}, {1, {2}}};
    FMultiset mu(3);
    mu.add({{1}, {2}, 1});
    mu.add({{1}, {2}, 1});
    BoundariedSGraph bg(h, 1, gam, mu);
    std::string text = dump(
        bg, [](std::ostream& o, const BoundariedSGraph& x) { return write_boundaried(o, x); });
    std::istringstream in(text);
    auto back = read_graph_input(in);
    REQUIRE(back.boundaried.has_value());
    CHECK(back.boundaried->base() == h);
    CHECK(back.boundaried->gamma() == bg.gamma());
    CHECK(back.boundaried->mu() == bg.mu());
    CHECK(back.boundaried->s() == 1);
}

TEST_CASE("matroid round trip stays in reduced form") {
    auto f3 = Field::gf(3);
    FMatrix rep(f3, {0, 1}, {10, 11, 12, 13});
    rep.set(0, 0, 1);
    rep.set(0, 2, 2);
    rep.set(1, 1, 1);
    rep.set(1, 3, 1);
    RepMatroid m(rep);
    std::string text =
        dump(m, [](std::ostream& o, const RepMatroid& x) { return write_matroid(o, x); });
    std::istringstream in(text);
    auto back = read_matroid(in);
    CHECK(back.ground() == m.ground());
    CHECK(back.rep() == m.rep());
    std::string again =
        dump(back, [](std::ostream& o, const RepMatroid& x) { return write_matroid(o, x); });
    CHECK(again == text);
}

TEST_CASE("layout round trip") {
    LinearLayout lay;
    lay.width = 2;
    lay.order = {5, 7, 9};
    lay.cut_ranks = {1, 2};
    std::string text =
        dump(lay, [](std::ostream& o, const LinearLayout& x) { return write_layout(o, x); });
    std::istringstream in(text);
    auto back = read_layout(in);
    CHECK(back.width == 2);
    CHECK(back.order == lay.order);
    CHECK(back.cut_ranks == lay.cut_ranks);
}

TEST_CASE("layout reader rejects a cut count that disagrees with the order") {
    std::istringstream in("layout width 1\norder 0 1 2\ncuts 1\n");
    CHECK_THROWS_WITH_AS(read_layout(in), doctest::Contains("ParseError"), error);
}

TEST_CASE("profile round trip through profile_of is byte-stable") {
    auto f2 = Field::gf(2);
    SGraph k2(f2, SesquiMorphism::identity(f2), {0, 1});
    k2.set_edge(0, 1, 1);
    std::map<int, std::vector<elem>> gb{{0, {1}}, {1, {0}}};
    auto bk2 = BoundariedSGraph::plain(k2, 1, gb);
    auto enc = encode(k2, layout_of(k2, {0, 1}));
    auto prof = profile_of(bk2, enc);
    std::string text =
        dump(prof, [](std::ostream& o, const LinearSProfile& x) { return write_profile(o, x); });
    std::istringstream in(text);
    auto back = read_profile(in);
    CHECK(back == prof);
    CHECK(dump(back, [](std::ostream& o, const LinearSProfile& x) {
              return write_profile(o, x);
          }) == text);
}

TEST_CASE("encoding dump carries the position structure") {
    auto f2 = Field::gf(2);
    SGraph k2(f2, SesquiMorphism::identity(f2), {0, 1});
    k2.set_edge(0, 1, 1);
    auto enc = encode(k2, layout_of(k2, {0, 1}));
    std::string text =
        dump(enc, [](std::ostream& o, const LinearEncoding& x) { return write_encoding(o, x); });
    CHECK(text.rfind("encoding t 2", 0) == 0);
    CHECK(text.find("position 1") != std::string::npos);
    CHECK(text.find("position 2") != std::string::npos);
    CHECK(text.find("rows") != std::string::npos);
}

TEST_CASE("asymmetric grids are parse errors") {
    std::istringstream in("field 2 1 1\nsigma identity\nn 2\nnames 0 1\n0 1\n0 0\n");
    CHECK_THROWS_WITH_AS(read_graph_input(in), doctest::Contains("ParseError"), error);
}

TEST_CASE("nonzero diagonals are parse errors") {
    std::istringstream in("field 2 1 1\nsigma identity\nn 2\n1 1\n1 0\n");
    CHECK_THROWS_WITH_AS(read_graph_input(in), doctest::Contains("ParseError"), error);
}

TEST_CASE("field validation surfaces through the header reader") {
    std::istringstream in("field 4 1 1\nsigma identity\n");
    CHECK_THROWS_WITH_AS(read_header(in), doctest::Contains("NotPrime"), error);
}

TEST_CASE("values outside the field are rejected") {
    std::istringstream in("field 2 1 1\nsigma identity\nn 2\n0 2\n2 0\n");
    CHECK_THROWS_WITH_AS(read_graph_input(in), doctest::Contains("ParseError"), error);
}

TEST_CASE("sigma table header round trip") {
    auto f3 = Field::gf(3);
    auto neg = SesquiMorphism::from_table(f3, {0, 2, 1});
    SGraph g(f3, neg, {0, 1});
    g.set_edge(0, 1, 1);
    std::string text = graph_text(g);
    std::istringstream in(text);
    auto back = read_graph_input(in);
    CHECK(back.base.sigma()(1) == 2);
    CHECK(back.base == g);
}

TEST_CASE("extension field header round trip") {
    auto f4 = Field::gf(4);
    SGraph g(f4, SesquiMorphism::identity(f4), {0, 1, 2});
    g.set_edge(0, 1, 3);
    g.set_edge(1, 2, 2);
    std::string text = graph_text(g);
    CHECK(text.rfind("field 2 2 ", 0) == 0);
    std::istringstream in(text);
    auto back = read_graph_input(in);
    CHECK(back.base.field()->order() == 4);
    CHECK(back.base == g);
}

TEST_CASE("load_graph_file prefixes the path on failure") {
    try {
        load_graph_file("/nonexistent/definitely-missing.g");
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/definitely-missing.g") !=
              std::string::npos);
    }
}

TEST_CASE("truncated inputs are parse errors") {
    std::istringstream in("field 2 1 1\nsigma identity\nn 3\n0 1 0\n1 0 1\n");
    CHECK_THROWS_WITH_AS(read_graph_input(in), doctest::Contains("ParseError"), error);
    std::istringstream in2("matroid\nfield 2 1 1\nelements 1 2 3\nrows 1\n1 0\n");
    CHECK_THROWS_WITH_AS(read_matroid(in2), doctest::Contains("ParseError"), error);
}
