#include "lrw/bounds.hpp"

#include "lrw/errors.hpp"

namespace lrw {

namespace {

// Exact q^e, refusing exponents whose result would not fit in memory.
BigBound big_pow(int q, const BigBound& e) {
    if (e > BigBound(1) << 24)
        fail("SizeLimitExceeded", "exponent too large for exact evaluation");
    return boost::multiprecision::pow(BigBound(q), e.convert_to<unsigned>());
}

}  // namespace

BigBound bound_lk(int k, const BigBound& c) {
    if (k < 0) fail("IndexOutOfRange", "negative chain depth");
    BigBound total = 1;
    BigBound power = 1;  // (c+1)^i
    for (int i = 0; i <= k; ++i) {
        total += c * power;
        power *= c + 1;
    }
    return total;
}

BigBound bound_plength(int p, int s, int q) {
    if (p < 0 || s < 0 || q < 2) fail("IndexOutOfRange", "parameters out of range");
    const BigBound exponent = BigBound(p) * p + BigBound(s) * s + 2 * BigBound(s) +
                              big_pow(q, p + s) * (4 * BigBound(p) + 2 * BigBound(s)) +
                              big_pow(q, 2 * s + 1);
    return (2 * BigBound(p) + 1) * big_pow(q, exponent);
}

MainBound bound_main(int p, int q) {
    MainBound out;
    // An obstruction for width p has width at most p + 1, so the composition
    // runs the chain bound at s = k = p + 1.
    out.k = p + 1;
    out.chain_length = bound_plength(p, p + 1, q);
    out.value = bound_lk(out.k, out.chain_length);
    return out;
}

}  // namespace lrw
