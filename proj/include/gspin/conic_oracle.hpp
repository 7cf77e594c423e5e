#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gspin/localfield.hpp"

namespace gspin {

// Brute-force route to the Hilbert symbol, independent of the closed form:
// (x, y)_2 = +1 iff x X^2 + y Y^2 = Z^2 has a nontrivial solution.  Over a
// p-adic field with odd p and v(x), v(y) <= 1 this is decided by searching
// for a primitive solution modulo p^4.
inline int hilbert_by_conic_oracle(const LocalField& F, const FieldElement& x, const FieldElement& y) {
    if (F.is_real()) {
        // Solvable over R unless both coefficients are negative.
        return (x.cls == 1 && y.cls == 1) ? -1 : 1;
    }
    if (x.v < 0 || x.v > 1 || y.v < 0 || y.v > 1)
        throw std::invalid_argument("conic oracle: arguments must be square-class representatives");
    const long long p = F.p();
    const long long m = p * p * p * p;  // p^4
    const long long xa = F.class_representative(x) % m;
    const long long ya = F.class_representative(y) % m;

    // squares[w] = 1 if w is a square mod p^4, 2 if it is the square of a
    // unit mod p^4.
    std::vector<unsigned char> squares(m, 0);
    for (long long z = 0; z < m; ++z) {
        long long w = z * z % m;
        unsigned char tag = (z % p != 0) ? 2 : 1;
        if (squares[w] < tag) squares[w] = tag;
    }

    for (long long X = 0; X < m; ++X) {
        long long tx = xa * X % m * X % m;
        bool xunit = (X % p != 0);
        for (long long Y = 0; Y < m; ++Y) {
            long long w = (tx + ya * Y % m * Y) % m;
            if (xunit || (Y % p != 0)) {
                if (squares[w]) return 1;  // any Z works, triple already primitive
            } else {
                if (squares[w] == 2) return 1;  // need a unit Z
            }
        }
    }
    return -1;
}

}  // namespace gspin
