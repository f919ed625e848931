#include "starlock/rng.hpp"

#include <stdexcept>

namespace starlock {

long Rng::next_int(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Rng: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
}

Ratio Rng::next_nonzero_ratio(long height) {
    for (;;) {
        Ratio r = next_ratio(height);
        if (!r.is_zero()) return r;
    }
}

Ratio Rng::next_ratio(long height) {
    long num = next_int(-height, height);
    long den = next_int(1, height);
    return Ratio(num, den);
}

std::vector<Ratio> Rng::next_vector(int n, long height) {
    std::vector<Ratio> v(n);
    for (int i = 0; i < n; ++i) v[i] = next_ratio(height);
    return v;
}

RatMatrix Rng::next_invertible(int n, long height) {
    for (;;) {
        RatMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = Ratio(next_int(-height, height));
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace starlock
