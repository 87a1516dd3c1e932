#include "lrw/field.hpp"

#include <map>
#include <mutex>
#include <string>

namespace lrw {
namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, low to high, no trailing
// zeros. Only used at construction time, so clarity over speed.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    a = trim(std::move(a));
    const int dm = static_cast<int>(m.size()) - 1;
    // m is monic here.
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int c = a.back();
        for (int i = 0; i <= dm; ++i) {
            int& t = a[shift + i];
            t = ((t - c * m[i]) % p + p) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(std::move(r));
}

// Exhaustive check: a degree-k polynomial is irreducible over GF(p) iff no
// monic polynomial of degree 1..k/2 divides it. Fine for p^k <= 256.
bool is_irreducible(const Poly& m, int p) {
    const int k = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        // All monic polynomials of degree d, counted in base p.
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) { div[i] = static_cast<int>(c % p); c /= p; }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

FieldPtr Field::make(int p, int k, std::vector<int> poly) {
    if (!is_prime(p)) fail("NotPrime", "characteristic " + std::to_string(p));
    if (k < 1) fail("ReduciblePoly", "degree must be >= 1");
    long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 256) fail("SizeLimitExceeded", "field order exceeds 256");
    }

    for (int& c : poly) c = ((c % p) + p) % p;
    if (k == 1) {
        poly = {1}; // modulus irrelevant for prime fields; stored canonically
    } else {
        poly = trim(std::move(poly));
        if (static_cast<int>(poly.size()) != k + 1)
            fail("ReduciblePoly", "modulus degree != field degree");
        if (poly.back() != 1) {
            // Normalize to monic; scaling does not affect irreducibility.
            int lead = poly.back();
            int li = 1;
            while ((li * lead) % p != 1) ++li;
            for (int& c : poly) c = (c * li) % p;
        }
        if (!is_irreducible(poly, p))
            fail("ReduciblePoly", "modulus factors over GF(" + std::to_string(p) + ")");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = static_cast<int>(q);
    f->poly_ = poly;

    const int n = f->q_;
    auto decode = [&](int code) {
        Poly a;
        for (int i = 0; i < k; ++i) { a.push_back(code % p); code /= p; }
        return trim(std::move(a));
    };
    auto encode = [&](const Poly& a) {
        int code = 0, w = 1;
        for (int i = 0; i < k; ++i) {
            if (i < static_cast<int>(a.size())) code += a[i] * w;
            w *= p;
        }
        return static_cast<elem>(code);
    };

    f->add_.resize(n * n);
    f->mul_.resize(n * n);
    f->neg_.resize(n);
    f->inv_.resize(n, 0);
    for (int a = 0; a < n; ++a) {
        Poly pa = decode(a);
        Poly na;
        for (int c : pa) na.push_back((p - c) % p);
        f->neg_[a] = encode(trim(std::move(na)));
        for (int b = 0; b < n; ++b) {
            Poly pb = decode(b);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                int v = 0;
                if (i < pa.size()) v += pa[i];
                if (i < pb.size()) v += pb[i];
                s[i] = v % p;
            }
            f->add_[a * n + b] = encode(s);
            f->mul_[a * n + b] =
                k == 1 ? static_cast<elem>((a * b) % p)
                       : encode(poly_mod(poly_mul(pa, pb, p), poly, p));
        }
    }
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            if (f->mul_[a * n + b] == 1) { f->inv_[a] = static_cast<elem>(b); break; }

    return f;
}

FieldPtr Field::gf(int q) {
    static std::mutex mu;
    static std::map<int, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;

    FieldPtr f;
    switch (q) {
        case 2: f = make(2, 1, {1}); break;
        case 3: f = make(3, 1, {1}); break;
        case 5: f = make(5, 1, {1}); break;
        case 7: f = make(7, 1, {1}); break;
        case 4: f = make(2, 2, {1, 1, 1}); break;          // x^2+x+1
        case 8: f = make(2, 3, {1, 1, 0, 1}); break;       // x^3+x+1
        case 9: f = make(3, 2, {1, 0, 1}); break;          // x^2+1
        case 16: f = make(2, 4, {1, 1, 0, 0, 1}); break;   // x^4+x+1
        default:
            fail("SizeLimitExceeded", "no built-in field of order " + std::to_string(q));
    }
    cache[q] = f;
    return f;
}

elem Field::pow(elem a, long e) const {
    elem r = 1;
    elem base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

elem Field::frobenius(elem a, int j) const {
    elem r = a;
    for (int i = 0; i < j; ++i) r = pow(r, p_);
    return r;
}

SesquiMorphism::SesquiMorphism(FieldPtr f, std::vector<elem> t, std::string d)
    : field_(std::move(f)), table_(std::move(t)), desc_(std::move(d)) {}

void SesquiMorphism::validate(const Field& f, const std::vector<elem>& t) {
    const int q = f.order();
    if (static_cast<int>(t.size()) != q)
        fail("NotSesqui", "table size != field order");
    for (int a = 0; a < q; ++a)
        if (t[t[a]] != a)
            fail("NotInvolution", "sigma(sigma(" + std::to_string(a) + ")) != " + std::to_string(a));
    if (t[1] == 0)
        fail("UndefinedQuotient", "sigma(1) = 0, quotient map undefined");
    const elem s1i = f.inv(t[1]);
    // Quotient map tau(x) = sigma(x)/sigma(1) must be a field automorphism.
    auto tau = [&](elem x) { return f.mul(t[x], s1i); };
    if (tau(0) != 0 || tau(1) != 1)
        fail("NotSesqui", "quotient map does not fix 0 and 1");
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (tau(f.add(static_cast<elem>(a), static_cast<elem>(b))) !=
                f.add(tau(static_cast<elem>(a)), tau(static_cast<elem>(b))))
                fail("NotSesqui", "quotient map is not additive");
            if (tau(f.mul(static_cast<elem>(a), static_cast<elem>(b))) !=
                f.mul(tau(static_cast<elem>(a)), tau(static_cast<elem>(b))))
                fail("NotSesqui", "quotient map is not multiplicative");
        }
}

SesquiMorphism SesquiMorphism::identity(FieldPtr f) {
    std::vector<elem> t(f->order());
    for (int a = 0; a < f->order(); ++a) t[a] = static_cast<elem>(a);
    validate(*f, t);
    return SesquiMorphism(std::move(f), std::move(t), "identity");
}

SesquiMorphism SesquiMorphism::negation(FieldPtr f) {
    std::vector<elem> t(f->order());
    for (int a = 0; a < f->order(); ++a) t[a] = f->neg(static_cast<elem>(a));
    validate(*f, t);
    return SesquiMorphism(std::move(f), std::move(t), "negation");
}

SesquiMorphism SesquiMorphism::frobenius(FieldPtr f, int j) {
    std::vector<elem> t(f->order());
    for (int a = 0; a < f->order(); ++a) t[a] = f->frobenius(static_cast<elem>(a), j);
    validate(*f, t);
    return SesquiMorphism(std::move(f), std::move(t), "frobenius " + std::to_string(j));
}

SesquiMorphism SesquiMorphism::from_table(FieldPtr f, std::vector<int> table) {
    std::vector<elem> t;
    t.reserve(table.size());
    for (int v : table) {
        if (v < 0 || v >= f->order())
            fail("NotSesqui", "table entry out of range");
        t.push_back(static_cast<elem>(v));
    }
    validate(*f, t);
    return SesquiMorphism(std::move(f), std::move(t), "table");
}

bool SesquiMorphism::is_identity() const {
    for (int a = 0; a < field_->order(); ++a)
        if (table_[a] != a) return false;
    return true;
}

} // namespace lrw
