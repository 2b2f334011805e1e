#include <doctest.h>

#include "glindex/complex.hpp"
#include "oracles.hpp"

using namespace glindex;

namespace {

SimplicialComplex from(std::size_t n, std::vector<Face> facets) { return SimplicialComplex::from_facets(n, facets); }

SimplicialComplex projective_plane()
{
    return from(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                    {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

SimplicialComplex torus()
{
    std::vector<Face> facets;
    for (std::uint32_t i = 0; i < 7; ++i) {
        Face a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        facets.push_back(a);
        facets.push_back(b);
    }
    return from(7, facets);
}

} // namespace

TEST_CASE("void and irrelevant complexes")
{
    CHECK(reduced_homology_dims(SimplicialComplex::void_complex(3), Field::rationals()).empty());
    CHECK(reduced_homology_dims(SimplicialComplex::irrelevant(3), Field::rationals()) == std::vector<std::size_t>{1});
    CHECK(SimplicialComplex::irrelevant(2).dimension() == -1);
    CHECK(component_count(SimplicialComplex::irrelevant(2)) == 0);
}

TEST_CASE("closure of facets is downward closed")
{
    auto x = from(4, {{0, 1, 2}, {2, 3}});
    CHECK(x.is_downward_closed());
    CHECK(x.f_vector() == std::vector<std::size_t>{1, 4, 4, 1});
    CHECK(x.contains({0, 2}));
    CHECK_FALSE(x.contains({1, 3}));
    CHECK_THROWS(SimplicialComplex::from_faces(3, {{}, {0, 1}}));
}

TEST_CASE("spheres, torus and projective plane")
{
    auto circle = from(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(reduced_homology_dims(circle, Field::rationals()) == std::vector<std::size_t>{0, 0, 1});
    auto two_points = from(2, {{0}, {1}});
    CHECK(reduced_homology_dims(two_points, Field::rationals()) == std::vector<std::size_t>{0, 1});
    CHECK(reduced_homology_dims(torus(), Field::rationals()) == std::vector<std::size_t>{0, 0, 2, 1});
    CHECK(reduced_homology_dims(torus(), Field::prime(2)) == std::vector<std::size_t>{0, 0, 2, 1});
    CHECK(reduced_homology_dims(projective_plane(), Field::rationals()) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(reduced_homology_dims(projective_plane(), Field::prime(2)) == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(reduced_homology_dims(projective_plane(), Field::prime(3)) == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("truncated homology matches the full computation in low degrees")
{
    auto full = reduced_homology_dims(torus(), Field::rationals());
    auto low = reduced_homology_dims(torus(), Field::rationals(), 1);
    REQUIRE(low.size() >= 3);
    CHECK(low[0] == full[0]);
    CHECK(low[1] == full[1]);
    CHECK(low[2] == full[2]);
}

TEST_CASE("homology agrees with the Smith normal form oracle on random complexes")
{
    oracle::Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto x = oracle::random_complex(rng, 3 + trial % 7, 2 + trial % 6, 4);
        for (unsigned p : {0U, 2U, 3U}) {
            Field f = p == 0 ? Field::rationals() : Field::prime(p);
            CHECK(reduced_homology_dims(x, f) == oracle::homology_by_smith(x, p));
        }
        CHECK(is_connected(x) == (component_count(x) <= 1));
    }
}

TEST_CASE("Euler characteristic is field independent")
{
    oracle::Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = oracle::random_complex(rng, 8, 6, 5);
        long euler_f = 0, euler_h2 = 0, euler_hq = 0;
        auto f = x.f_vector();
        auto h2 = reduced_homology_dims(x, Field::prime(2));
        auto hq = reduced_homology_dims(x, Field::rationals());
        for (std::size_t k = 0; k < f.size(); ++k) {
            long sign = k % 2 == 0 ? 1 : -1;
            euler_f += sign * static_cast<long>(f[k]);
            euler_h2 += sign * static_cast<long>(h2[k]);
            euler_hq += sign * static_cast<long>(hq[k]);
        }
        CHECK(euler_f == euler_h2);
        CHECK(euler_f == euler_hq);
    }
}

TEST_CASE("induced subcomplex keeps faces inside W")
{
    auto x = from(4, {{0, 1, 2}, {2, 3}});
    std::vector<std::uint32_t> w{0, 2, 3};
    auto y = x.induced(w);
    CHECK(y.contains({0, 2}));
    CHECK(y.contains({2, 3}));
    CHECK_FALSE(y.contains({0, 1}));
    CHECK(y.f_vector() == std::vector<std::size_t>{1, 3, 2});
}

TEST_CASE("order complex of a divisor poset")
{
    std::vector<Monomial> elems{Monomial::of({1, 0}), Monomial::of({0, 1}), Monomial::of({1, 1})};
    auto x = order_complex(elems);
    CHECK(x.f_vector() == std::vector<std::size_t>{1, 3, 2});
    CHECK(is_connected(x));
    std::vector<Monomial> antichain{Monomial::of({1, 0}), Monomial::of({0, 1})};
    CHECK(component_count(order_complex(antichain)) == 2);
    auto chains = order_complex(std::vector<Monomial>{Monomial::of({1}), Monomial::of({2}), Monomial::of({3})}, 2);
    CHECK(chains.f_vector() == std::vector<std::size_t>{1, 3, 3});
}
