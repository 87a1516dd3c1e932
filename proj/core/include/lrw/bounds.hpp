#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lrw {

using BigBound = boost::multiprecision::cpp_int;

// 1 + sum_{i=0}^{k} c(c+1)^i. Caps the vertex count of an obstruction once
// the chain length of the underlying order is known.
BigBound bound_lk(int k, const BigBound& c);

// (2p+1) * q^(p^2 + s^2 + 2s + q^(p+s)*(4p+2s) + q^(2s+1)): the chain length
// bound for profiles at the given parameters. Rejects exponents too large to
// evaluate exactly (SizeLimitExceeded).
BigBound bound_plength(int p, int s, int q);

struct MainBound {
    int k = 0;             // layout width the composition runs at, p + 1
    BigBound chain_length; // bound_plength at s = k
    BigBound value;        // bound_lk(k, chain_length)
};

// Composes the two bounds into the obstruction size cap for width p over a
// field of order q, keeping the intermediates visible.
MainBound bound_main(int p, int q);

}  // namespace lrw
