#ifndef ANGLEPOLY_TEST_SUPPORT_HPP
#define ANGLEPOLY_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "anglepoly/necklace.hpp"

namespace testing_support {

using anglepoly::Necklace;
using anglepoly::Rational;

inline Necklace ones(int n, long long last = 1)
{
    std::vector<Rational> e(n, Rational(1));
    e.back() = last;
    return Necklace(e);
}

/// Entries p/q with p in [lo, hi] and q in {1, 2, 3}.
inline Necklace random_necklace(int n, std::mt19937& rng, int lo = 1, int hi = 12)
{
    std::uniform_int_distribution<int> num(lo, hi), den(1, 3);
    std::vector<Rational> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(num(rng), den(rng));
    return Necklace(e);
}

inline Necklace random_full_dim(int n, std::mt19937& rng)
{
    for (;;)
    {
        Necklace s = random_necklace(n, rng);
        if (2 * s.max_entry() < s.total())
            return s;
    }
}

/// Rejection sampling against the library predicate, with entries close enough to be accepted often.
inline Necklace random_majority_dominant(int n, std::mt19937& rng)
{
    for (;;)
    {
        Necklace s = random_necklace(n, rng, 6, 14);
        if (anglepoly::is_majority_dominant(s))
            return s;
    }
}

/// Brute-force weight of the cyclic substring of `len` entries from `start`.
inline Rational brute_weight(const Necklace& s, int start, int len)
{
    Rational w = 0;
    for (int i = 0; i < len; ++i)
        w += s.entries()[(start - 1 + i) % s.size()];
    return w;
}

}   // namespace testing_support

#endif
