#pragma once

// Shared helpers for the test suites. Everything here is test-only and
// independent of the library's computational paths, so it can serve as an
// oracle against them.

#include <vector>

#include "starlock/hpoly.hpp"
#include "starlock/rng.hpp"

namespace starlock::testutil {

// All exponent vectors with the given variable count and total degree.
inline void enumerate_exponents_rec(int nvars, int deg, Exponents& cur,
                                    std::vector<Exponents>& out) {
    if (static_cast<int>(cur.size()) == nvars - 1) {
        cur.push_back(deg);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        cur.push_back(e);
        enumerate_exponents_rec(nvars, deg - e, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Exponents> enumerate_exponents(int nvars, int deg) {
    std::vector<Exponents> out;
    Exponents cur;
    enumerate_exponents_rec(nvars, deg, cur, out);
    return out;
}

// Independent monomial-count oracle (explicit enumeration, no binomials).
inline long count_monomials(int nvars, int deg) {
    if (nvars == 0) return deg == 0 ? 1 : 0;
    return static_cast<long>(enumerate_exponents(nvars, deg).size());
}

inline HPoly random_homogeneous(Rng& rng, int nvars, int deg, int terms, long height = 4) {
    std::vector<Exponents> all = enumerate_exponents(nvars, deg);
    HPoly p(nvars);
    for (int i = 0; i < terms; ++i) {
        const Exponents& e = all[rng.next_int(0, static_cast<long>(all.size()) - 1)];
        p.add_term(e, rng.next_ratio(height));
    }
    return p;
}

inline HPoly random_nonzero_homogeneous(Rng& rng, int nvars, int deg, int terms, long height = 4) {
    for (;;) {
        HPoly p = random_homogeneous(rng, nvars, deg, terms, height);
        if (!p.is_zero()) return p;
    }
}

}  // namespace starlock::testutil
