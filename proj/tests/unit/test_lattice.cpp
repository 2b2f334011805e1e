#include <doctest.h>

#include "glindex/lattice.hpp"
#include "oracles.hpp"

using namespace glindex;

TEST_CASE("lattice elements are the lcms of all subsets of generators")
{
    oracle::Rng rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        auto ideal = oracle::random_squarefree_ideal(rng, 6, 6, 3);
        LcmLattice lattice(ideal);
        auto expected = oracle::brute_lattice(ideal);
        CHECK(std::set<Monomial>(lattice.elements().begin(), lattice.elements().end()) == expected);
        CHECK(lattice.bottom().is_one());
        CHECK(lattice.atoms() == ideal.generators());
        for (std::size_t i = 1; i < lattice.size(); ++i)
            CHECK(lattice.elements()[i - 1].degree() <= lattice.elements()[i].degree());
    }
}

TEST_CASE("open intervals")
{
    std::vector<Monomial> gens{Monomial::of({1, 1, 0}), Monomial::of({0, 1, 1}), Monomial::of({1, 0, 1})};
    MonomialIdeal ideal(3, gens);
    LcmLattice lattice(ideal);
    CHECK(lattice.size() == 5);
    auto top = Monomial::of({1, 1, 1});
    CHECK(lattice.open_interval(top).size() == 3);
    CHECK(lattice.open_interval(gens[0]).empty());
    CHECK(lattice.atoms_below(top).size() == 3);
    CHECK(lattice.chain_length_to(top) == 2);
    CHECK_THROWS(lattice.open_interval(Monomial::of({1, 0, 0})));
    // three atoms, pairwise lcm = top: the interval is three isolated points
    CHECK(component_count(interval_order_complex(lattice, top)) == 3);
    CHECK(interval_components(gens, top) == 3);
    CHECK(interval_components(gens, gens[0]) == 0);
}

TEST_CASE("interval components match the order complex")
{
    oracle::Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        auto ideal = oracle::random_squarefree_ideal(rng, 6, 6, 3);
        LcmLattice lattice(ideal);
        for (std::size_t i = 1; i < lattice.size(); ++i) {
            const auto& u = lattice.elements()[i];
            if (ideal.is_generator(u))
                continue;
            CHECK(interval_components(ideal.generators(), u) ==
                  component_count(interval_order_complex(lattice, u)));
        }
    }
}

TEST_CASE("the zero ideal has no lattice")
{
    CHECK_THROWS(LcmLattice(MonomialIdeal(3)));
}
