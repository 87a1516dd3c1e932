#include "lrw/io.hpp"

#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "lrw/errors.hpp"

namespace lrw {

namespace {

std::string read_word(std::istream& in, const char* what) {
    std::string w;
    if (!(in >> w)) fail("ParseError", std::string("missing ") + what);
    return w;
}

void expect_word(std::istream& in, const char* kw) {
    std::string w = read_word(in, kw);
    if (w != kw) fail("ParseError", "expected '" + std::string(kw) + "', got '" + w + "'");
}

int read_int(std::istream& in, const char* what) {
    std::string w = read_word(in, what);
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(w, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != w.size())
        fail("ParseError", std::string(what) + " must be an integer, got '" + w + "'");
    return v;
}

int parse_int(const std::string& w, const char* what) {
    std::istringstream s(w);
    return read_int(s, what);
}

elem read_value(std::istream& in, const Field& f, const char* what) {
    int v = read_int(in, what);
    if (v < 0 || v >= f.order())
        fail("ParseError",
             std::string(what) + " value " + std::to_string(v) + " is outside the field");
    return static_cast<elem>(v);
}

std::vector<int> read_line_ints(std::istream& in, const char* what) {
    std::string rest;
    std::getline(in, rest);
    std::istringstream s(rest);
    std::vector<int> out;
    int v;
    while (s >> v) out.push_back(v);
    if (!s.eof()) fail("ParseError", std::string(what) + " line has a non-integer token");
    return out;
}

void write_field_line(std::ostream& out, const Field& f) {
    out << "field " << f.characteristic() << ' ' << f.degree();
    // The modulus only matters for k > 1; k = 1 always gets the marker form.
    if (f.degree() == 1) {
        out << " 1";
    } else {
        for (int c : f.modulus()) out << ' ' << c;
    }
    out << '\n';
}

FieldPtr read_field_line(std::istream& in) {
    expect_word(in, "field");
    int p = read_int(in, "characteristic");
    int k = read_int(in, "degree");
    int coeffs = k == 1 ? 1 : k + 1;
    std::vector<int> poly(coeffs);
    for (int& c : poly) c = read_int(in, "modulus coefficient");
    return Field::make(p, k, std::move(poly));
}

void write_sigma_line(std::ostream& out, const SesquiMorphism& sigma) {
    out << "sigma " << sigma.description();
    if (sigma.description() == "table") {
        int q = sigma.field()->order();
        for (int a = 0; a < q; ++a) out << ' ' << int(sigma(static_cast<elem>(a)));
    }
    out << '\n';
}

SesquiMorphism read_sigma_line(std::istream& in, const FieldPtr& f) {
    expect_word(in, "sigma");
    std::string kind = read_word(in, "sigma kind");
    if (kind == "identity") return SesquiMorphism::identity(f);
    if (kind == "negation") return SesquiMorphism::negation(f);
    if (kind == "frobenius") return SesquiMorphism::frobenius(f, read_int(in, "frobenius power"));
    if (kind == "table") {
        std::vector<int> t(f->order());
        for (int& v : t) v = read_int(in, "sigma table value");
        return SesquiMorphism::from_table(f, std::move(t));
    }
    fail("ParseError", "unknown sigma kind '" + kind + "'");
}

void write_block(std::ostream& out, const char* name, const FMatrix& m) {
    out << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << int(m.at(r, c));
        out << '\n';
    }
}

FMatrix read_block(std::istream& in, const char* name, const FieldPtr& f) {
    expect_word(in, name);
    int r = read_int(in, "block row count");
    int c = read_int(in, "block column count");
    if (r < 0 || c < 0) fail("ParseError", "negative block shape");
    FMatrix m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, read_value(in, *f, name));
    return m;
}

void write_triples(std::ostream& out, const FMultiset& mu) {
    out << "mu " << mu.items().size() << '\n';
    for (const auto& [tr, mult] : mu.items()) {
        for (elem v : tr.v1) out << int(v) << ' ';
        for (elem v : tr.v2) out << int(v) << ' ';
        out << int(tr.t) << ' ' << mult << '\n';
    }
}

// Reads the body after the `mu` keyword has been consumed.
FMultiset read_triples_body(std::istream& in, const FieldPtr& f, int s) {
    int k = read_int(in, "mu entry count");
    if (k < 0) fail("ParseError", "negative mu count");
    FMultiset mu(f->characteristic());
    for (int e = 0; e < k; ++e) {
        FTriple tr;
        tr.v1.resize(s);
        tr.v2.resize(s);
        for (elem& v : tr.v1) v = read_value(in, *f, "mu vector");
        for (elem& v : tr.v2) v = read_value(in, *f, "mu vector");
        tr.t = read_value(in, *f, "mu scalar");
        if (tr.t == 0) fail("ParseError", "mu scalar must be nonzero");
        int mult = read_int(in, "mu multiplicity");
        if (mult < 1 || mult >= f->characteristic())
            fail("ParseError", "mu multiplicity must lie in 1..char-1");
        for (int i = 0; i < mult; ++i) mu.add(tr);
    }
    return mu;
}

FMultiset read_triples(std::istream& in, const FieldPtr& f, int s) {
    expect_word(in, "mu");
    return read_triples_body(in, f, s);
}

} // namespace

void write_header(std::ostream& out, const Field& f, const SesquiMorphism& sigma) {
    write_field_line(out, f);
    write_sigma_line(out, sigma);
}

std::pair<FieldPtr, SesquiMorphism> read_header(std::istream& in) {
    FieldPtr f = read_field_line(in);
    SesquiMorphism sigma = read_sigma_line(in, f);
    return {f, sigma};
}

void write_graph(std::ostream& out, const SGraph& g) {
    write_header(out, *g.field(), g.sigma());
    out << "n " << g.n() << '\n';
    out << "names";
    for (int v : g.vertices()) out << ' ' << v;
    out << '\n';
    const FMatrix& m = g.matrix();
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) out << (j ? " " : "") << int(m.at(i, j));
        out << '\n';
    }
}

void write_boundaried(std::ostream& out, const BoundariedSGraph& g) {
    write_graph(out, g.base());
    out << "s " << g.s() << '\n';
    out << "gamma\n";
    for (int v : g.base().vertices()) {
        const auto& row = g.gamma_of(v);
        for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << int(row[i]);
        out << '\n';
    }
    write_triples(out, g.mu());
}

GraphInput read_graph_input(std::istream& in) {
    auto [f, sigma] = read_header(in);
    expect_word(in, "n");
    int n = read_int(in, "vertex count");
    if (n < 0) fail("ParseError", "negative vertex count");

    std::vector<int> names(n);
    std::iota(names.begin(), names.end(), 0);
    std::vector<std::vector<elem>> grid(n, std::vector<elem>(n, 0));

    // `names` is optional; anything else must already be the first grid entry.
    bool first_read = false;
    elem first = 0;
    if (n > 0) {
        std::string w = read_word(in, "names or adjacency grid");
        if (w == "names") {
            for (int& v : names) v = read_int(in, "vertex name");
        } else {
            int v = parse_int(w, "adjacency entry");
            if (v < 0 || v >= f->order()) fail("ParseError", "adjacency entry outside the field");
            first = static_cast<elem>(v);
            first_read = true;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (first_read && i == 0 && j == 0)
                grid[0][0] = first;
            else
                grid[i][j] = read_value(in, *f, "adjacency entry");
        }

    for (int i = 0; i < n; ++i) {
        if (grid[i][i] != 0) fail("ParseError", "nonzero diagonal entry");
        for (int j = i + 1; j < n; ++j)
            if (grid[j][i] != sigma(grid[i][j]))
                fail("ParseError", "adjacency grid is not sigma-symmetric");
    }

    SGraph g(f, sigma, names);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (grid[i][j] != 0 || grid[j][i] != 0) g.set_edge(names[i], names[j], grid[i][j]);

    GraphInput out{std::move(g), std::nullopt};

    std::string w;
    if (!(in >> w)) return out;
    if (w != "s") fail("ParseError", "unexpected trailing token '" + w + "'");
    int s = read_int(in, "boundary dimension");
    if (s < 0) fail("ParseError", "negative boundary dimension");
    expect_word(in, "gamma");
    std::map<int, std::vector<elem>> gamma;
    for (int i = 0; i < n; ++i) {
        std::vector<elem> row(s);
        for (elem& v : row) v = read_value(in, *f, "gamma entry");
        gamma[names[i]] = std::move(row);
    }
    FMultiset mu(f->characteristic());
    if (in >> w) {
        if (w != "mu") fail("ParseError", "unexpected trailing token '" + w + "'");
        mu = read_triples_body(in, f, s);
    }
    out.boundaried = BoundariedSGraph(out.base, s, std::move(gamma), std::move(mu));
    return out;
}

void write_matroid(std::ostream& out, const RepMatroid& m) {
    write_field_line(out, *m.field());
    out << "elements";
    for (int e : m.ground()) out << ' ' << e;
    out << '\n';
    const FMatrix& rep = m.rep();
    out << "rows " << rep.rows() << '\n';
    for (int i = 0; i < rep.rows(); ++i) {
        for (int j = 0; j < rep.cols(); ++j) out << (j ? " " : "") << int(rep.at(i, j));
        out << '\n';
    }
}

RepMatroid read_matroid(std::istream& in) {
    FieldPtr f = read_field_line(in);
    expect_word(in, "elements");
    std::vector<int> ids = read_line_ints(in, "elements");
    expect_word(in, "rows");
    int r = read_int(in, "row count");
    if (r < 0) fail("ParseError", "negative row count");
    std::vector<int> row_labels(r);
    std::iota(row_labels.begin(), row_labels.end(), 0);
    FMatrix rep(f, row_labels, ids);
    for (int i = 0; i < r; ++i)
        for (size_t j = 0; j < ids.size(); ++j)
            rep.set(i, static_cast<int>(j), read_value(in, *f, "representation entry"));
    return RepMatroid(std::move(rep));
}

void write_layout(std::ostream& out, const LinearLayout& lay) {
    out << "width " << lay.width << '\n';
    out << "order";
    for (int v : lay.order) out << ' ' << v;
    out << '\n';
    out << "cuts";
    for (int c : lay.cut_ranks) out << ' ' << c;
    out << '\n';
}

LinearLayout read_layout(std::istream& in) {
    LinearLayout lay;
    expect_word(in, "width");
    lay.width = read_int(in, "width");
    expect_word(in, "order");
    lay.order = read_line_ints(in, "order");
    expect_word(in, "cuts");
    lay.cut_ranks = read_line_ints(in, "cuts");
    size_t want = lay.order.empty() ? 0 : lay.order.size() - 1;
    if (lay.cut_ranks.size() != want)
        fail("ParseError", "cut count does not match the order length");
    return lay;
}

void write_encoding(std::ostream& out, const LinearEncoding& e) {
    out << "encoding t " << e.t << " width " << e.width << '\n';
    out << "order";
    for (int v : e.order) out << ' ' << v;
    out << '\n';
    for (int i = 0; i < e.t; ++i) {
        out << "position " << i + 1 << '\n';
        write_block(out, "N", e.n_mats[i]);
        write_block(out, "M", e.m_mats[i]);
        write_block(out, "P", e.p_mats[i]);
        out << "rows " << e.row_of[i].size();
        for (const auto& [v, r] : e.row_of[i]) out << ' ' << v << ' ' << r;
        out << '\n';
        out << "cols " << e.col_of[i].size();
        for (const auto& [v, c] : e.col_of[i]) out << ' ' << v << ' ' << c;
        out << '\n';
    }
}

void write_profile(std::ostream& out, const LinearSProfile& e) {
    write_header(out, *e.field(), e.sigma());
    out << "profile s " << e.s() << " t " << e.t() << '\n';
    for (int i = 1; i <= e.t(); ++i) {
        out << "index " << i << '\n';
        const ProfileIndex& b = e.at(i);
        write_block(out, "Y1", b.y1);
        write_block(out, "Y2", b.y2);
        write_block(out, "Z1", b.z1);
        write_block(out, "Z2", b.z2);
        write_block(out, "M", b.m);
    }
    write_triples(out, e.mu());
}

LinearSProfile read_profile(std::istream& in) {
    auto [f, sigma] = read_header(in);
    expect_word(in, "profile");
    expect_word(in, "s");
    int s = read_int(in, "boundary dimension");
    expect_word(in, "t");
    int t = read_int(in, "index count");
    if (s < 0 || t < 1) fail("ParseError", "profile needs s >= 0 and t >= 1");
    std::vector<ProfileIndex> blocks;
    blocks.reserve(t);
    for (int i = 1; i <= t; ++i) {
        expect_word(in, "index");
        if (read_int(in, "index number") != i) fail("ParseError", "index out of sequence");
        ProfileIndex b;
        b.y1 = read_block(in, "Y1", f);
        b.y2 = read_block(in, "Y2", f);
        b.z1 = read_block(in, "Z1", f);
        b.z2 = read_block(in, "Z2", f);
        b.m = read_block(in, "M", f);
        blocks.push_back(std::move(b));
    }
    FMultiset mu = read_triples(in, f, s);
    return LinearSProfile(f, sigma, s, std::move(blocks), std::move(mu));
}

namespace {

template <class T, class Fn>
T load_file(const std::string& path, Fn parse) {
    std::ifstream in(path);
    if (!in) fail("ParseError", path + ": cannot open");
    try {
        return parse(in);
    } catch (const error& e) {
        // what() carries "name: message"; keep the name once and add the path.
        std::string msg = e.what();
        std::string prefix = e.name() + ": ";
        if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
        throw error(e.name(), path + ": " + msg);
    }
}

} // namespace

GraphInput load_graph_file(const std::string& path) {
    return load_file<GraphInput>(path, [](std::istream& in) { return read_graph_input(in); });
}

RepMatroid load_matroid_file(const std::string& path) {
    return load_file<RepMatroid>(path, [](std::istream& in) { return read_matroid(in); });
}

LinearLayout load_layout_file(const std::string& path) {
    return load_file<LinearLayout>(path, [](std::istream& in) { return read_layout(in); });
}

LinearSProfile load_profile_file(const std::string& path) {
    return load_file<LinearSProfile>(path, [](std::istream& in) { return read_profile(in); });
}

} // namespace lrw
