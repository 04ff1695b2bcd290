#include "anglepoly/tours.hpp"

#include <algorithm>

#include "anglepoly/error.hpp"

namespace anglepoly {

namespace {

int residue(long long x, int n)
{
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

/// Representative in 1..n.
int label(long long x, int n)
{
    int r = residue(x, n);
    return r == 0 ? n : r;
}

void check_n(int n)
{
    if (n < 3 || n % 2 == 0)
        throw DomainError("tours need odd n >= 3, got n = " + std::to_string(n));
}

}   // namespace

std::array<int, 3> normal_form(int n, long long p, long long q, long long r)
{
    check_n(n);
    std::array<int, 3> v{label(p, n), label(q, n), label(r, n)};
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2])
        throw DomainError("tour residues must be distinct mod " + std::to_string(n));
    auto lowest = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), lowest, v.end());
    return v;
}

Tour::Tour(int n, long long p, long long q, long long r) : n_(n), form_(anglepoly::normal_form(n, p, q, r))
{
}

std::array<int, 3> Tour::steps() const
{
    auto [i, j, k] = form_;
    return {label(j - i, n_), label(k - j, n_), label(i - k, n_)};
}

bool Tour::is_once_around() const
{
    auto st = steps();
    return st[0] + st[1] + st[2] == n_;
}

bool Tour::is_small() const
{
    int m = (n_ - 1) / 2;
    auto st = steps();
    return std::all_of(st.begin(), st.end(), [m](int x) { return x <= m; });
}

bool Tour::is_odd() const
{
    auto st = steps();
    return std::all_of(st.begin(), st.end(), [](int x) { return x % 2 == 1; });
}

Tour Tour::scaled(long long factor) const
{
    auto [i, j, k] = form_;
    return Tour(n_, factor * i, factor * j, factor * k);
}

Tour map_neg2(const Tour& t)
{
    return t.scaled(-2);
}

Tour map_m(const Tour& t)
{
    return t.scaled((t.n() - 1) / 2);
}

std::vector<Tour> enumerate_tours(int n)
{
    check_n(n);
    std::vector<Tour> out;
    // normal forms: i smallest, j and k any distinct larger labels
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = i + 1; k <= n; ++k)
                if (k != j)
                    out.emplace_back(n, i, j, k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tour> enumerate_small(int n)
{
    auto all = enumerate_tours(n);
    std::vector<Tour> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Tour& t) { return t.is_small(); });
    return out;
}

std::vector<Tour> enumerate_odd(int n)
{
    auto all = enumerate_tours(n);
    std::vector<Tour> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Tour& t) { return t.is_odd(); });
    return out;
}

long long small_tour_count(int n)
{
    check_n(n);
    long long c = static_cast<long long>(n + 1) * n * (n - 1) / 6;
    return c / 4;
}

ResidueClasses residue_classes(int n)
{
    check_n(n);
    int m = (n - 1) / 2;
    ResidueClasses rc;
    for (int x = 1; x <= m; ++x)
        rc.small.insert(x);
    for (int x = m + 1; x <= 2 * m; ++x)
        rc.large.insert(x);
    for (int x = 1; x <= n - 1; ++x)
        (x % 2 ? rc.odd : rc.even).insert(x);
    return rc;
}

std::set<int> scale_residues(const std::set<int>& xs, long long factor, int n)
{
    std::set<int> out;
    for (int x : xs)
        out.insert(residue(factor * x, n));
    return out;
}

}   // namespace anglepoly
