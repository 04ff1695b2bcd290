#include "anglepoly/necklace.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "anglepoly/error.hpp"

namespace anglepoly {

namespace {

std::string_view trim(std::string_view t)
{
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
        t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
        t.remove_suffix(1);
    return t;
}

bool is_integer_literal(std::string_view t)
{
    if (!t.empty() && (t.front() == '-' || t.front() == '+'))
        t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BigInt factorial(int k)
{
    BigInt f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

}   // namespace

std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view token)
{
    std::string_view t = trim(token);
    auto slash = t.find('/');
    std::string_view num = t.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : t.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)))
        throw ParseError("invalid rational token '" + std::string(token) + "'");
    BigInt p(std::string(num.front() == '+' ? num.substr(1) : num));
    BigInt q = 1;
    if (slash != std::string_view::npos)
    {
        q = BigInt(std::string(den.front() == '+' ? den.substr(1) : den));
        if (q == 0)
            throw ParseError("zero denominator in token '" + std::string(token) + "'");
    }
    return Rational(p, q);
}

Necklace::Necklace(std::vector<Rational> entries) : entries_(std::move(entries))
{
    if (entries_.size() < 3)
        throw DomainError("a necklace needs at least 3 entries, got " + std::to_string(entries_.size()));
    total_ = 0;
    for (std::size_t k = 0; k < entries_.size(); ++k)
    {
        if (entries_[k] <= 0)
            throw DomainError("necklace entry s_" + std::to_string(k + 1) + " = " + to_string(entries_[k]) + " is not positive");
        total_ += entries_[k];
    }
}

Necklace::Necklace(std::initializer_list<long long> entries)
    : Necklace(std::vector<Rational>(entries.begin(), entries.end()))
{
}

Necklace Necklace::rotated(int first) const
{
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (int k = 0; k < size(); ++k)
        out.push_back(at(first + k));
    return Necklace(std::move(out));
}

Rational Necklace::max_entry() const
{
    return *std::max_element(entries_.begin(), entries_.end());
}

Necklace parse_necklace(std::string_view text)
{
    std::vector<Rational> entries;
    std::size_t pos = 0;
    while (true)
    {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        Rational q = parse_rational(token);
        if (q <= 0)
            throw ParseError("necklace entry '" + std::string(trim(token)) + "' is not positive");
        entries.push_back(q);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    if (entries.size() < 3)
        throw ParseError("necklace '" + std::string(text) + "' has fewer than 3 entries");
    return Necklace(std::move(entries));
}

std::string to_string(const Necklace& s)
{
    std::string out;
    for (const auto& q : s.entries())
    {
        if (!out.empty())
            out += ",";
        out += to_string(q);
    }
    return out;
}

Substring Substring::complement(int n) const
{
    int next = ((start - 1 + length) % n) + 1;
    return Substring{next, n - length};
}

std::vector<int> Substring::labels(int n) const
{
    std::vector<int> out;
    out.reserve(length);
    for (int i = 0; i < length; ++i)
        out.push_back(((start - 1 + i) % n) + 1);
    return out;
}

IndexSet Substring::as_set(int n) const
{
    return IndexSet::from_labels(labels(n));
}

const char* to_string(Balance b)
{
    switch (b)
    {
        case Balance::Light: return "light";
        case Balance::Tied: return "tied";
        case Balance::Heavy: return "heavy";
    }
    return "?";
}

Rational weight(const Necklace& s, const Substring& sub)
{
    Rational w = 0;
    for (int i = 0; i < sub.length; ++i)
        w += s.at(sub.start + i);
    return w;
}

Balance classify_substring(const Necklace& s, const Substring& sub)
{
    if (sub.length < 1 || sub.length > s.size() - 1)
        throw DomainError("substring length " + std::to_string(sub.length) + " outside [1, " + std::to_string(s.size() - 1) + "]");
    Rational w2 = 2 * weight(s, sub);
    if (w2 < s.total())
        return Balance::Light;
    return w2 == s.total() ? Balance::Tied : Balance::Heavy;
}

std::vector<TieRecord> substring_ties(const Necklace& s)
{
    const int n = s.size();
    ScaledWeights sw(s);
    std::vector<TieRecord> ties;
    for (int len = 1; 2 * len <= n; ++len)
    {
        // Diametral pairs: start and start + n/2 describe the same tie.
        int starts = (2 * len == n) ? n / 2 : n;
        for (int start = 1; start <= starts; ++start)
        {
            BigInt w = 0;
            for (int i = 0; i < len; ++i)
                w += sw.entries[(start - 1 + i) % n];
            if (sw.compare_half(w) == 0)
                ties.push_back(TieRecord{Substring{start, len}, len});
        }
    }
    return ties;   // already in (width, start) order
}

bool is_majority_dominant(const Necklace& s)
{
    const int n = s.size();
    ScaledWeights sw(s);
    for (int start = 0; start < n; ++start)
    {
        BigInt w = 0;
        for (int len = 1; 2 * len < n; ++len)
        {
            w += sw.entries[(start + len - 1) % n];
            if (sw.compare_half(w) >= 0)
                return false;
        }
    }
    return true;
}

std::optional<DipolePoles> dipole_tie_breaking(const Necklace& s)
{
    const int n = s.size();
    if (n % 2 != 0)
        throw DomainError("dipole tie-breaking needs even n, got n = " + std::to_string(n));
    const int half = n / 2;
    ScaledWeights sw(s);
    // balance[start-1] of the diametral substring starting at `start`
    std::vector<int> balance(n);
    for (int start = 1; start <= n; ++start)
    {
        BigInt w = 0;
        for (int i = 0; i < half; ++i)
            w += sw.entries[(start - 1 + i) % n];
        balance[start - 1] = sw.compare_half(w);
        if (balance[start - 1] == 0)
            return std::nullopt;
    }
    auto all_through = [&](int pole, int want) {
        // diametral substrings containing `pole` start at pole-half+1 .. pole
        for (int d = 0; d < half; ++d)
        {
            int start = s.wrap(pole - d);
            if (balance[start - 1] != want)
                return false;
        }
        return true;
    };
    for (int light = 1; light <= n; ++light)
    {
        int heavy = s.wrap(light + half);
        if (all_through(light, -1) && all_through(heavy, 1))
            return DipolePoles{light, heavy};
    }
    return std::nullopt;
}

std::vector<SubsetTie> subset_ties(const Necklace& s, int cap)
{
    const int n = s.size();
    if (n > cap)
        throw DomainError("subset tie enumeration capped at n = " + std::to_string(cap) + ", got n = " + std::to_string(n));
    if (n > 62)
        throw DomainError("subset tie enumeration supports n <= 62");
    ScaledWeights sw(s);
    std::vector<SubsetTie> out;
    // Subsets of labels 2..n; bit i of `mask` is label i + 2.
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 1; mask < limit; ++mask)
    {
        BigInt w = 0;
        for (std::uint64_t b = mask; b != 0; b &= b - 1)
            w += sw.entries[std::countr_zero(b) + 1];
        if (sw.compare_half(w) != 0)
            continue;
        IndexSet subset(mask << 1);
        int k = subset.size();
        int width = std::min(k, n - k);
        out.push_back(SubsetTie{subset, width, width - 1, n - width - 1, factorial(width) * factorial(n - width)});
    }
    std::sort(out.begin(), out.end(), [](const SubsetTie& a, const SubsetTie& b) {
        return a.width != b.width ? a.width < b.width : a.subset < b.subset;
    });
    return out;
}

ScaledWeights::ScaledWeights(const Necklace& s)
{
    BigInt l = 1;
    for (const auto& q : s.entries())
        l = boost::multiprecision::lcm(l, denominator(q));
    entries.reserve(s.size());
    total = 0;
    for (const auto& q : s.entries())
    {
        entries.push_back(numerator(q) * (l / denominator(q)));
        total += entries.back();
    }
}

}   // namespace anglepoly
