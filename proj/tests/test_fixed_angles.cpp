#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "anglepoly/error.hpp"
#include "anglepoly/fixed_angles.hpp"
#include "anglepoly/sweep.hpp"
#include "support.hpp"

using namespace anglepoly;
using namespace testing_support;

namespace {

Necklace fig2(long long sigma)
{
    return Necklace{1, 3, 1, 4, 2, sigma};
}

/// Every nonempty face, found by trying all 2^n zero sets one at a time.
std::set<std::uint64_t> brute_face_sets(const Necklace& s)
{
    std::set<std::uint64_t> out;
    for (std::uint64_t z = 0; z + 1 < (std::uint64_t{1} << s.size()); ++z)
        if (auto f = face_of_zero_set(s, ZeroSet(z)))
            out.insert(f->closed_zero_set.bits());
    return out;
}

/// Triples i < j < k of surviving edges whose three vertex runs are all light.
std::vector<std::array<int, 3>> brute_trigons(const Necklace& s)
{
    const int n = s.size();
    std::vector<std::array<int, 3>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
            {
                // Edge e joins vertices e-1 and e, so survivors i, j, k leave runs i..j-1, j..k-1, k..i-1.
                Rational a = brute_weight(s, i, j - i), b = brute_weight(s, j, k - j), c = brute_weight(s, k, n - k + i);
                if (2 * a < s.total() && 2 * b < s.total() && 2 * c < s.total())
                    out.push_back({i, j, k});
            }
    return out;
}

}   // namespace

TEST_CASE("classify_polytope examples")
{
    CHECK(classify_polytope(fig2(12)) == PolytopeClass::Empty);
    CHECK(classify_polytope(fig2(11)) == PolytopeClass::Point);
    CHECK(classify_polytope(Necklace{1, 3, 2, 4, 5}) == PolytopeClass::FullDim);
}

TEST_CASE("merge examples")
{
    auto a = merge(Necklace{1, 3, 2, 4, 5}, ZeroSet{2});
    CHECK(a.entries == std::vector<Rational>{4, 2, 4, 5});
    auto b = merge(ones(6), ZeroSet{2, 3});
    CHECK(b.entries == std::vector<Rational>{3, 1, 1, 1});
    auto c = merge(fig2(7), ZeroSet{2, 3, 4, 6});
    CHECK(c.degenerate());
    CHECK(c.entries == std::vector<Rational>{9, 9});
    CHECK_THROWS_AS(merge(ones(5), ZeroSet::full(5)), DomainError);
}

TEST_CASE("face_of_zero_set examples")
{
    Necklace s{1, 3, 2, 4, 5};
    CHECK_FALSE(face_of_zero_set(s, ZeroSet{5}));
    auto whole = face_of_zero_set(s, ZeroSet{});
    REQUIRE(whole);
    CHECK(whole->kind == FaceKind::Generic);
    CHECK(whole->dim == 2);
    auto d = face_of_zero_set(ones(6), ZeroSet{2, 3});
    REQUIRE(d);
    CHECK(d->kind == FaceKind::DigonVertex);
    CHECK(d->closed_zero_set == ZeroSet{2, 3, 5, 6});
    CHECK(d->dim == 0);
    CHECK_THROWS_AS(face_of_zero_set(fig2(12), ZeroSet{}), DomainError);
}

TEST_CASE("width-2 tie gives a digon vertex of a full-dimensional polytope")
{
    // s_{k-1} + s_k = S/2 with the edge between them shrunk.
    Necklace s{2, 4, 3, 4, 5};
    CHECK(classify_polytope(s) == PolytopeClass::FullDim);
    auto f = face_of_zero_set(s, ZeroSet{5});
    REQUIRE(f);
    CHECK(f->kind == FaceKind::DigonVertex);
    CHECK(f->dim == 0);
}

TEST_CASE("enumerate_faces examples")
{
    auto q = enumerate_faces(Necklace{1, 3, 2, 4, 5});
    CHECK(q.fvector() == std::vector<std::size_t>{4, 4});
    CHECK(q.facet_edges() == IndexSet{1, 2, 3, 4});
    CHECK_FALSE(q.facet_edges().contains(5));

    auto cube = enumerate_faces(fig2(4));
    CHECK(cube.fvector() == std::vector<std::size_t>{8, 12, 6});
    CHECK(cube.facet_sizes() == std::vector<int>(6, 4));

    auto hex = enumerate_faces(ones(6));
    CHECK(hex.fvector() == std::vector<std::size_t>{5, 9, 6});
    CHECK_THROWS_AS(enumerate_faces(ones(9), 8), DomainError);
}

TEST_CASE("enumerate_faces agrees with the zero-set brute force")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 80; ++trial)
    {
        int n = 4 + trial % 6;
        Necklace s = random_full_dim(n, rng);
        auto lat = enumerate_faces(s);
        std::set<std::uint64_t> got;
        for (const auto& f : lat.faces())
            got.insert(f.closed_zero_set.bits());
        CHECK(got == brute_face_sets(s));
    }
    // Necklaces with many ties.
    for (const Necklace& s : {ones(6), ones(8), Necklace{1, 1, 2, 1, 1, 2}, Necklace{2, 4, 3, 4, 5}, fig2(5), fig2(7), fig2(9)})
    {
        std::set<std::uint64_t> got;
        auto lat = enumerate_faces(s);
        for (const auto& f : lat.faces())
            got.insert(f.closed_zero_set.bits());
        CHECK(got == brute_face_sets(s));
    }
}

TEST_CASE("trigon_vertices examples and brute force")
{
    CHECK(trigon_vertices(ones(5)).size() == 5);
    auto h = trigon_vertices(ones(6));
    CHECK(h == std::vector<std::array<int, 3>>{{1, 3, 5}, {2, 4, 6}});
    CHECK(trigon_vertices(Necklace{1, 3, 2, 4, 5}).size() == 4);

    std::mt19937 rng(4);
    for (int trial = 0; trial < 100; ++trial)
    {
        Necklace s = random_full_dim(4 + trial % 7, rng);
        auto got = trigon_vertices(s);
        std::sort(got.begin(), got.end());
        CHECK(got == brute_trigons(s));
    }
}

TEST_CASE("digon_vertices examples")
{
    CHECK(digon_vertices(ones(6)).size() == 3);
    CHECK(digon_vertices(Necklace{1, 3, 2, 4, 5}).empty());
    auto d = digon_vertices(Necklace{2, 4, 3, 4, 5});
    REQUIRE(d.size() == 1);
    CHECK(d[0].tie.width == 2);
}

TEST_CASE("vertex figures")
{
    Necklace q{1, 3, 2, 4, 5};
    for (const auto& v : enumerate_faces(q).vertices())
        CHECK(vertex_figure(q, v) == VertexFigureShape{1, 0});

    auto hex = enumerate_faces(ones(6));
    for (const auto& v : hex.vertices())
    {
        auto fig = vertex_figure(ones(6), v);
        if (v.kind == FaceKind::DigonVertex)
        {
            CHECK(fig == VertexFigureShape{1, 1});
            CHECK(fig.facet_count() == 4);
            CHECK(hex.incident_facets(v).size() == 4);
        }
        else
            CHECK(fig.is_simplex());
    }

    Necklace w2{2, 4, 3, 4, 5};
    for (const auto& v : enumerate_faces(w2).vertices())
        if (v.kind == FaceKind::DigonVertex)
        {
            CHECK(vertex_figure(w2, v).is_simplex());
            CHECK(vertex_figure(w2, v) == VertexFigureShape::product(0, 1));
        }
}

TEST_CASE("is_simple examples")
{
    CHECK(is_simple(Necklace{1, 3, 2, 4, 5}));
    CHECK_FALSE(is_simple(ones(6)));
    CHECK(is_simple(Necklace{2, 4, 3, 4, 5}));
}

TEST_CASE("lattice invariants on random necklaces")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial)
    {
        int n = 4 + trial % 7;
        Necklace s = random_full_dim(n, rng);
        auto lat = enumerate_faces(s);
        const int d = n - 3;
        CHECK(lat.dim() == d);

        // Closure idempotence.
        for (const auto& f : lat.faces())
        {
            auto again = face_of_zero_set(s, f.closed_zero_set);
            REQUIRE(again);
            CHECK(*again == f);
        }
        // Monotonicity: adding a zero never gives a larger face.
        for (const auto& f : lat.faces())
            for (int e = 1; e <= n; ++e)
            {
                ZeroSet bigger = f.closed_zero_set;
                bigger.insert(e);
                if (auto g = face_of_zero_set(s, bigger))
                    CHECK(FaceLattice::leq(*g, f));
            }
        // Vertex count identity.
        CHECK(lat.fvector()[0] == trigon_vertices(s).size() + digon_vertices(s).size());
        // Euler relation for the boundary of a d-polytope.
        CHECK(lat.euler_characteristic() == 1 - (d % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("dual neighborliness and simpliciality under majority dominance")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 24; ++trial)
    {
        int n = 5 + trial % 5;
        Necklace s = random_majority_dominant(n, rng);
        CHECK(dual_is_neighborly(s));
        if (substring_ties(s).empty())
            CHECK(is_simple(s));
    }
}

TEST_CASE("critical values of the swept template")
{
    SweepTemplate t = parse_sweep_template("1,3,1,4,2,?");
    CHECK(t.marked == 6);
    CHECK(critical_values(t, 4, 12) == std::vector<Rational>{5, 7, 9, 11});
    CHECK(critical_values(t) == std::vector<Rational>{1, 3, 5, 7, 9, 11});
    CHECK_THROWS_AS(parse_sweep_template("1,3,1,4,2,5"), ParseError);
    CHECK_THROWS_AS(parse_sweep_template("1,?,1,?"), ParseError);
}

TEST_CASE("sweep reproduces the sequence from 4 to 12")
{
    SweepTemplate t = parse_sweep_template("1,3,1,4,2,?");
    std::vector<Rational> values;
    for (int v = 4; v <= 12; ++v)
        values.push_back(v);
    auto r = sweep(t, values);
    REQUIRE(r.size() == 9);
    std::map<int, std::vector<std::size_t>> f;
    for (const auto& rep : r)
        f[static_cast<int>(rep.value)] = rep.fvector;
    CHECK(f[4] == std::vector<std::size_t>{8, 12, 6});
    CHECK(f[6] == std::vector<std::size_t>{8, 12, 6});
    CHECK(f[8] == std::vector<std::size_t>{6, 9, 5});
    CHECK(f[10] == std::vector<std::size_t>{4, 6, 4});
    CHECK(r[1].facet_sizes == std::vector<int>{3, 3, 4, 4, 4, 4});
    CHECK(r[1].critical);
    CHECK(r[1].ties.size() == 1);
    CHECK(r[7].polytope == PolytopeClass::Point);
    CHECK(r[8].polytope == PolytopeClass::Empty);
    CHECK(r[1].value == 5);
    CHECK(r[1].fvector == std::vector<std::size_t>{7, 11, 6});
}

TEST_CASE("sweep samples and interval constancy")
{
    SweepTemplate t = parse_sweep_template("1,3,1,4,2,?");
    auto samples = sweep_samples(t, 4, 12);
    CHECK(samples.front() == 4);
    CHECK(samples.back() == 12);
    CHECK(std::is_sorted(samples.begin(), samples.end()));
    CHECK(std::find(samples.begin(), samples.end(), Rational(9, 2)) != samples.end());
    // The combinatorial type is constant strictly between critical values.
    auto r = sweep(t, {Rational(51, 10), Rational(6), Rational(69, 10)});
    CHECK(r[0].fvector == r[1].fvector);
    CHECK(r[1].fvector == r[2].fvector);
    CHECK(r[0].facet_sizes == r[2].facet_sizes);
    CHECK_THROWS_AS(t.instantiate(0), DomainError);
}

TEST_CASE("transitions at critical values")
{
    SweepTemplate t = parse_sweep_template("1,3,1,4,2,?");
    auto r = sweep(t, {7, 9});
    for (const auto& rep : r)
    {
        REQUIRE(rep.transitions.size() == 1);
        const auto& tr = rep.transitions[0];
        CHECK(tr.tie.width == 2);
        CHECK(tr.below_dim + tr.above_dim == 2);
    }
}
