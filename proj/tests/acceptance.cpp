// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "anglepoly/cyclic.hpp"
#include "anglepoly/duality.hpp"
#include "anglepoly/fixed_angles.hpp"
#include "anglepoly/geometry.hpp"
#include "anglepoly/scmap.hpp"
#include "anglepoly/sweep.hpp"
#include "anglepoly/tours.hpp"
#include "support.hpp"

using namespace anglepoly;
using namespace testing_support;

namespace {

using FVec = std::vector<std::size_t>;

/// Collects the first few mismatches of a criterion.
struct Check
{
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (!ok && failures.size() < 5)
            failures.push_back(what);
        else if (!ok)
            overflow = true;
    }
    bool overflow = false;
};

std::string fvec(const FVec& f)
{
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i)
        out += (i ? "," : "") + std::to_string(f[i]);
    return out + ")";
}

std::vector<double> as_doubles(const Necklace& s)
{
    std::vector<double> out;
    for (const auto& x : s.entries())
        out.push_back(static_cast<double>(x));
    return out;
}

void criterion1(Check& c)
{
    Necklace s{1, 3, 2, 4, 5};
    auto lat = enumerate_faces(s);
    c.expect(lat.fvector() == FVec{4, 4}, "fvector " + fvec(lat.fvector()));
    auto f5 = face_of_zero_set(s, ZeroSet{5});
    c.expect(!f5 || f5->dim < lat.dim() - 1, "edge 5 yields a facet");
    int trigons = 0;
    for (const auto& v : lat.vertices())
    {
        if (v.kind != FaceKind::TrigonVertex)
            continue;
        ++trigons;
        auto p = vertex_realization(s, v);
        c.expect(std::abs(p.perimeter() - 1) <= 1e-9, "perimeter " + std::to_string(p.perimeter()));
        c.expect(p.closure_residual() <= 1e-9, "closure " + std::to_string(p.closure_residual()));
        int positive = 0;
        for (double l : p.lengths)
            positive += l > 0;
        c.expect(positive == 3, "realization is not a triangle");
    }
    c.expect(trigons == 4, "trigon count " + std::to_string(trigons));
}

void criterion2(Check& c)
{
    SweepTemplate t = parse_sweep_template("1,3,1,4,2,?");
    std::vector<Rational> values;
    for (int v = 4; v <= 12; ++v)
        values.push_back(v);
    std::map<int, SweepReport> at;
    for (auto& r : sweep(t, values))
        at[static_cast<int>(r.value)] = r;

    c.expect(at[4].polytope == PolytopeClass::FullDim && at[4].fvector == FVec{8, 12, 6}, "sigma=4 fvector " + fvec(at[4].fvector));
    c.expect(at[4].facet_sizes == std::vector<int>(6, 4), "sigma=4 facets are not all quadrilaterals");
    c.expect(at[6].fvector == FVec{8, 12, 6}, "sigma=6 fvector " + fvec(at[6].fvector));
    std::string sizes;
    for (int x : at[6].facet_sizes)
        sizes += std::to_string(x) + " ";
    c.expect(at[6].facet_sizes == std::vector<int>{3, 3, 4, 4, 5, 5}, "sigma=6 facet sizes " + sizes);
    c.expect(verify_prop6(t.instantiate(6)).verdict, "verify_prop6 false at sigma=6");
    c.expect(at[8].fvector == FVec{6, 9, 5}, "sigma=8 fvector " + fvec(at[8].fvector));
    c.expect(at[10].fvector == FVec{4, 6, 4}, "sigma=10 fvector " + fvec(at[10].fvector));
    c.expect(at[11].polytope == PolytopeClass::Point, "sigma=11 not a point");
    c.expect(at[12].polytope == PolytopeClass::Empty, "sigma=12 not empty");
    c.expect(critical_values(t, 4, 12) == std::vector<Rational>{5, 7, 9, 11}, "critical values on [4,12]");
}

void criterion3(Check& c)
{
    Necklace s = ones(6);
    auto lat = enumerate_faces(s);
    c.expect(lat.fvector() == FVec{5, 9, 6}, "fvector " + fvec(lat.fvector()));
    auto digons = digon_vertices(s);
    c.expect(digons.size() == 3, "digon count " + std::to_string(digons.size()));
    for (const auto& d : digons)
    {
        auto fig = vertex_figure(s, d.face);
        c.expect(fig.a == 1 && fig.b == 1 && fig.facet_count() == 4, "vertex figure is not a square");
        c.expect(lat.incident_facets(d.face).size() == 4, "digon vertex not on 4 facets");
    }
    c.expect(dual_is_neighborly(s), "dual not neighborly");
    c.expect(!max_faced_check(lat, 3, 6), "max_faced_check against C_3(6) is true");
}

void criterion4(Check& c)
{
    std::mt19937 rng(2024);
    for (int n : {5, 7, 9})
    {
        c.expect(verify_prop4(ones(n)).verdict, "ones(" + std::to_string(n) + ")");
        for (int trial = 0; trial < 50; ++trial)
        {
            Necklace s = random_majority_dominant(n, rng);
            c.expect(verify_prop4(s).verdict, "[" + to_string(s) + "]");
        }
    }
}

void criterion5(Check& c)
{
    c.expect(verify_prop6(ones(6, 2)).verdict, "[1,1,1,1,1,2]");
    c.expect(verify_prop6(ones(8, 2)).verdict, "[1,1,1,1,1,1,1,2]");
    c.expect(verify_prop6(Necklace{1, 2, 1, 4, 3, 4}).verdict, "[1,2,1,4,3,4]");
    for (int n : {6, 8})
    {
        auto count = all_anti_isomorphisms(enumerate_faces(ones(n, 2)), face_lattice(n - 3, n)).size();
        c.expect(count == 4, "n=" + std::to_string(n) + " witness count " + std::to_string(count));
    }
}

void criterion6(Check& c)
{
    for (int n = 3; n <= 21; n += 2)
    {
        auto small = enumerate_small(n);
        auto odd = enumerate_odd(n);
        long long expect = static_cast<long long>(n + 1) * n * (n - 1) / 24;
        c.expect(static_cast<long long>(small.size()) == expect, "n=" + std::to_string(n) + " small count");
        c.expect(static_cast<long long>(odd.size()) == expect, "n=" + std::to_string(n) + " odd count");
        std::set<Tour> image;
        for (const auto& t : small)
            image.insert(map_neg2(t));
        c.expect(image == std::set<Tour>(odd.begin(), odd.end()), "n=" + std::to_string(n) + " map_neg2 is not a bijection");
    }
    for (int n = 5; n <= 11; n += 2)
    {
        std::set<std::array<int, 3>> forms, trigons;
        for (const auto& t : enumerate_small(n))
            forms.insert(t.normal_form());
        for (const auto& t : trigon_vertices(ones(n)))
            trigons.insert(t);
        c.expect(forms == trigons, "n=" + std::to_string(n) + " small tours differ from trigons");
    }
}

void criterion7(Check& c)
{
    for (int d = 1; d <= 6; ++d)
        for (int m = d + 1; m <= 10; ++m)
        {
            std::vector<long long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
            primes.resize(m);
            auto gale = gale_facets(d, m);
            std::string tag = "C_" + std::to_string(d) + "(" + std::to_string(m) + ")";
            c.expect(gale == moment_oracle_facets(d, m), tag + " default parameters");
            c.expect(gale == moment_oracle_facets(d, m, primes), tag + " prime parameters");
        }
    c.expect(gale_facets(4, 7).size() == 14, "C_4(7) facet count");
}

void criterion8(Check& c)
{
    for (int m = 3; m <= 9; ++m)
        for (int d = 2; d < m; ++d)
        {
            auto target = face_lattice(d - 1, m - 1);
            std::vector<int> vs{m};
            if (d % 2 == 0)
            {
                vs.clear();
                for (int v = 1; v <= m; ++v)
                    vs.push_back(v);
            }
            for (int v : vs)
                c.expect(find_isomorphism(vertex_figure_lattice(d, m, v), target).has_value(),
                         "d=" + std::to_string(d) + " m=" + std::to_string(m) + " v=" + std::to_string(v));
        }
}

/// Every k-subset of facets meets in a face, checked by walking the facet subsets directly.
bool facets_neighborly(const Necklace& s, int k)
{
    auto lat = enumerate_faces(s);
    auto facets = lat.facets();
    bool ok = true;
    std::function<void(std::size_t, int, ZeroSet)> pick = [&](std::size_t from, int left, ZeroSet z) {
        if (!ok)
            return;
        if (left == 0)
        {
            ok = face_of_zero_set(s, z).has_value();
            return;
        }
        for (std::size_t i = from; i < facets.size(); ++i)
            pick(i + 1, left - 1, z | facets[i].closed_zero_set);
    };
    if (static_cast<int>(facets.size()) < k)
        return false;
    pick(0, k, ZeroSet{});
    return ok;
}

void criterion9(Check& c)
{
    std::mt19937 rng(77);
    for (int n = 6; n <= 12; ++n)
        for (int trial = 0; trial < 25; ++trial)
        {
            Necklace s = random_majority_dominant(n, rng);
            bool direct = facets_neighborly(s, (n - 3) / 2);
            c.expect(direct, "[" + to_string(s) + "]");
            c.expect(dual_is_neighborly(s) == direct, "dual_is_neighborly disagrees on [" + to_string(s) + "]");
        }
}

void criterion10(Check& c)
{
    std::mt19937 rng(1010);
    std::uniform_int_distribution<int> size(4, 12);
    for (int trial = 0; trial < 100; ++trial)
    {
        int n = size(rng);
        Necklace s = random_full_dim(n, rng);
        auto sig = area_form_signature(s);
        c.expect(!sig.degenerate && sig.plus == 1 && sig.minus == n - 3,
                 "[" + to_string(s) + "] signature (" + std::to_string(sig.plus) + "," + std::to_string(sig.minus) + ")");
    }
}

void check_km(Check& c, const KMResult& r, const std::string& tag)
{
    double total = 0;
    for (double l : r.lengths)
    {
        c.expect(l >= 0, tag + " negative length");
        total += l;
    }
    c.expect(std::abs(total - 1) <= 1e-12, tag + " perimeter");
    c.expect(r.closure_residual <= 1e-8, tag + " closure " + std::to_string(r.closure_residual));
    c.expect(r.self_convergence <= 1e-8, tag + " self-convergence " + std::to_string(r.self_convergence));
}

void criterion11(Check& c)
{
    auto r = km_map(ones(5), equiangular_shape({1, 1, 1, 1, 1}));
    for (double l : r.lengths)
        c.expect(std::abs(l - 0.2) <= 1e-8, "regular pentagon length " + std::to_string(l));
    check_km(c, r, "regular pentagon");
    check_km(c, km_map(ones(5), bent_shape(ones(5), 2, 0.35)), "bent pentagon");
    std::mt19937 rng(11);
    int done = 0;
    while (done < 10)
    {
        Necklace s = random_full_dim(4 + done % 4, rng);
        FixedLengthsShape shape;
        try
        {
            shape = inscribed_shape(as_doubles(s));
        }
        catch (const std::exception&)
        {
            continue;
        }
        check_km(c, km_map(s, shape), "[" + to_string(s) + "]");
        ++done;
    }
}

void criterion12(Check& c)
{
    auto grid = log_grid(1e-2, 1e-4, 9);
    struct Case
    {
        Necklace s;
        int k;
        double q;
    };
    for (const auto& [s, k, q] : {Case{ones(5), 1, 0.2}, Case{Necklace{1, 3, 2, 4, 5}, 1, 7.0 / 15}})
    {
        auto probe = boundary_exponent_probe(s, k, grid);
        std::ostringstream msg;
        msg << "[" << to_string(s) << "] q_hat " << probe.q_hat << " vs " << q;
        c.expect(std::abs(probe.q_analytic - q) <= 1e-12, msg.str() + " (analytic)");
        c.expect(std::abs(probe.q_hat - q) <= 0.02 * q, msg.str());
    }
}

}   // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"1 pentagon [1,3,2,4,5]", criterion1},
        {"2 sweep sequence 4..12", criterion2},
        {"3 equiangular hexagon", criterion3},
        {"4 majority-dominant duality", criterion4},
        {"5 dipole duality", criterion5},
        {"6 tour counts and bijection", criterion6},
        {"7 evenness vs moment-curve oracle", criterion7},
        {"8 cyclic vertex figures", criterion8},
        {"9 dual neighborliness", criterion9},
        {"10 area-form signature", criterion10},
        {"11 SC map outputs", criterion11},
        {"12 boundary exponent law", criterion12},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria)
    {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try
        {
            run(c);
        }
        catch (const std::exception& e)
        {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%s  %s  (%.1fs)\n", ok ? "PASS" : "FAIL", name.c_str(), secs);
        for (const auto& f : c.failures)
            std::printf("      %s\n", f.c_str());
        if (c.overflow)
            std::printf("      ...\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
