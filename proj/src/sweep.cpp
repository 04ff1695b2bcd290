#include "anglepoly/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "anglepoly/error.hpp"

namespace anglepoly {

Necklace SweepTemplate::instantiate(const Rational& value) const
{
    if (value <= 0)
        throw DomainError("sweep value " + to_string(value) + " is not positive");
    std::vector<Rational> e = entries;
    e[marked - 1] = value;
    return Necklace(std::move(e));
}

SweepTemplate parse_sweep_template(std::string_view text)
{
    SweepTemplate t;
    int marks = 0;
    std::size_t pos = 0;
    while (true)
    {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::string trimmed;
        for (char c : token)
            if (!std::isspace(static_cast<unsigned char>(c)))
                trimmed += c;
        if (trimmed == "?")
        {
            ++marks;
            t.entries.emplace_back(1);
            t.marked = static_cast<int>(t.entries.size());
        }
        else
        {
            Rational q = parse_rational(token);
            if (q <= 0)
                throw ParseError("template entry '" + trimmed + "' is not positive");
            t.entries.push_back(q);
        }
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    if (marks != 1)
        throw ParseError("template '" + std::string(text) + "' must contain exactly one '?' entry, found " + std::to_string(marks));
    if (t.entries.size() < 3)
        throw ParseError("template '" + std::string(text) + "' has fewer than 3 entries");
    return t;
}

std::vector<Rational> critical_values(const SweepTemplate& t)
{
    const int n = t.size();
    Rational fixed = 0;
    for (int k = 1; k <= n; ++k)
        if (k != t.marked)
            fixed += t.entries[k - 1];
    std::set<Rational> found;
    // A substring and its complement give the same equation, so it suffices
    // to look at the substrings avoiding the marked entry: weight c ties when
    // 2c = fixed + value.
    for (int start = 1; start <= n; ++start)
    {
        if (start == t.marked)
            continue;
        Rational c = 0;
        for (int len = 1; len < n; ++len)
        {
            int k = ((start - 1 + len - 1) % n) + 1;
            if (k == t.marked)
                break;
            c += t.entries[k - 1];
            Rational value = 2 * c - fixed;
            if (value > 0)
                found.insert(value);
        }
    }
    return {found.begin(), found.end()};
}

std::vector<Rational> critical_values(const SweepTemplate& t, const Rational& lo, const Rational& hi)
{
    std::vector<Rational> out;
    for (const auto& v : critical_values(t))
        if (v >= lo && v <= hi)
            out.push_back(v);
    return out;
}

std::vector<SweepReport> sweep(const SweepTemplate& t, const std::vector<Rational>& values, int cap)
{
    const int n = t.size();
    auto crit = critical_values(t);
    std::vector<SweepReport> out;
    for (const auto& value : values)
    {
        Necklace s = t.instantiate(value);
        SweepReport r;
        r.value = value;
        r.polytope = classify_polytope(s);
        r.ties = substring_ties(s);
        if (r.polytope == PolytopeClass::FullDim)
        {
            FaceLattice lattice = enumerate_faces(s, cap);
            r.fvector = lattice.fvector();
            r.facet_sizes = lattice.facet_sizes();
        }
        r.critical = std::binary_search(crit.begin(), crit.end(), value);
        for (const auto& tie : r.ties)
        {
            // Raising the marked entry makes whichever side holds it heavy;
            // that side's chain can no longer collapse, and the digon vertex
            // grows into the simplex spanned by the other chain.
            int w = tie.width;
            bool in_short = tie.substring.as_set(n).contains(t.marked);
            Transition tr{tie, 0, 0};
            tr.above_dim = in_short ? w - 2 : n - w - 2;
            tr.below_dim = in_short ? n - w - 2 : w - 2;
            r.transitions.push_back(tr);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Rational> sweep_samples(const SweepTemplate& t, const Rational& lo, const Rational& hi)
{
    if (lo <= 0 || hi < lo)
        throw DomainError("sweep range [" + to_string(lo) + ", " + to_string(hi) + "] must be positive and ordered");
    std::vector<Rational> breaks{lo};
    for (const auto& c : critical_values(t, lo, hi))
        if (c != breaks.back())
            breaks.push_back(c);
    if (hi != breaks.back())
        breaks.push_back(hi);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < breaks.size(); ++i)
    {
        if (i > 0)
            out.push_back((breaks[i - 1] + breaks[i]) / 2);
        out.push_back(breaks[i]);
    }
    return out;
}

}   // namespace anglepoly
