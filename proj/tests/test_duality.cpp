#include <doctest.h>

#include "anglepoly/duality.hpp"
#include "anglepoly/error.hpp"
#include "support.hpp"

using namespace anglepoly;
using namespace testing_support;

TEST_CASE("facet_vertex_map examples")
{
    CHECK(facet_vertex_map(5, 1) == 3);
    CHECK(facet_vertex_map(5, 5) == 5);
    CHECK(facet_vertex_map(7, 3) == 1);
    CHECK_THROWS_AS(facet_vertex_map(6, 1), DomainError);
    for (int n = 5; n <= 21; n += 2)
        for (int i = 1; i <= n; ++i)
        {
            CHECK(facet_vertex_map(n, facet_vertex_map_inverse(n, i)) == i);
            CHECK(facet_vertex_map_inverse(n, facet_vertex_map(n, i)) == i);
        }
}

TEST_CASE("verify_prop4 examples")
{
    auto a = verify_prop4(ones(5));
    CHECK(a.verdict);
    CHECK(a.method == DualityMethod::ExplicitOddMap);
    auto b = verify_prop4(ones(7));
    CHECK(b.verdict);
    for (int i = 1; i <= 7; ++i)
        CHECK(b.witness[i - 1] == facet_vertex_map(7, i));
    CHECK(verify_prop4(Necklace{1, 1, 10, 1, 1, 1, 10}).verdict);
    CHECK_THROWS_AS(verify_prop4(ones(6)), DomainError);
    CHECK_THROWS_AS(verify_prop4(Necklace{1, 3, 2, 4, 5}), DomainError);
}

TEST_CASE("verify_prop6 examples")
{
    auto a = verify_prop6(ones(6, 2));
    CHECK(a.verdict);
    CHECK(a.method == DualityMethod::EvenReduction);
    REQUIRE(a.reduction_matches);
    CHECK(*a.reduction_matches);
    CHECK(enumerate_faces(ones(6, 2)).facet_sizes() == std::vector<int>{3, 3, 4, 4, 5, 5});

    CHECK(verify_prop6(Necklace{1, 2, 1, 4, 3, 4}).verdict);

    auto c = verify_prop6(ones(6));
    CHECK_FALSE(c.verdict);
    REQUIRE(c.failure_certificate);
    CHECK(c.failure_certificate->facets.size() == 4);
    CHECK_THROWS_AS(verify_prop6(ones(5)), DomainError);
}

TEST_CASE("anti_isomorphic examples")
{
    auto pent = enumerate_faces(ones(5));
    auto c25 = face_lattice(2, 5);
    std::vector<int> identity{1, 2, 3, 4, 5}, neg2(5);
    for (int i = 1; i <= 5; ++i)
        neg2[i - 1] = facet_vertex_map(5, i);
    auto with_neg2 = anti_isomorphic(pent, c25, neg2);
    CHECK(with_neg2.verdict);
    auto with_identity = anti_isomorphic(pent, c25, identity);
    CHECK_FALSE(with_identity.verdict);
    CHECK(with_identity.failure_certificate);

    auto cube = enumerate_faces(Necklace{1, 3, 1, 4, 2, 4});
    auto r = anti_isomorphic(cube, face_lattice(3, 6));
    CHECK_FALSE(r.verdict);
    CHECK(r.failure_certificate);

    std::mt19937 rng(6);
    for (int trial = 0; trial < 20; ++trial)
    {
        Necklace s = random_full_dim(4 + trial % 5, rng);
        auto lat = enumerate_faces(s);
        CHECK(anti_isomorphic(lat, formal_dual(lat)).verdict);
    }
}

TEST_CASE("witness counts for [1,...,1,2]")
{
    CHECK(all_anti_isomorphisms(enumerate_faces(ones(6, 2)), face_lattice(3, 6)).size() == 4);
    CHECK(all_anti_isomorphisms(enumerate_faces(ones(8, 2)), face_lattice(5, 8)).size() == 4);
}

TEST_CASE("random majority-dominant necklaces are dual cyclic")
{
    std::mt19937 rng(2024);
    for (int n : {5, 7})
        for (int trial = 0; trial < 10; ++trial)
            CHECK(verify_prop4(random_majority_dominant(n, rng)).verdict);
    int tested = 0;
    for (int attempt = 0; attempt < 400 && tested < 10; ++attempt)
    {
        Necklace s = random_majority_dominant(6, rng);
        if (!dipole_tie_breaking(s))
            continue;
        auto r = verify_prop6(s);
        CHECK(r.verdict);
        CHECK(r.reduction_matches.value_or(false));
        ++tested;
    }
    CHECK(tested == 10);
}

TEST_CASE("dual f-vector and max-faced")
{
    auto hex = enumerate_faces(ones(6));
    CHECK(dual_fvector(hex) == std::vector<std::size_t>{6, 9, 5});
    CHECK(dual_is_neighborly(ones(6)));
    CHECK_FALSE(max_faced_check(hex, 3, 6));
    CHECK(max_faced_check(enumerate_faces(ones(7)), 4, 7));
}
