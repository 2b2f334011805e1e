#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "glindex/betti.hpp"
#include "glindex/linpres.hpp"
#include "glindex/search.hpp"
#include "oracles.hpp"

using namespace glindex;

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Burnside: orbits on k-subsets = average over g of the x^k coefficient of ∏_cycles (1 + x^len).
std::vector<std::size_t> burnside_counts(const PermGroup& g, std::span<const std::uint64_t> ground)
{
    const std::size_t m = ground.size();
    std::vector<std::size_t> total(m + 1, 0);
    for (const auto& p : g.elements()) {
        std::vector<int> pos(m);
        for (std::size_t i = 0; i < m; ++i)
            pos[i] = static_cast<int>(std::find(ground.begin(), ground.end(), apply_to_mask(p, ground[i])) - ground.begin());
        std::vector<bool> seen(m, false);
        std::vector<std::size_t> poly{1};
        for (std::size_t i = 0; i < m; ++i) {
            if (seen[i])
                continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(pos[j])) {
                seen[j] = true;
                ++len;
            }
            std::vector<std::size_t> next(poly.size() + len, 0);
            for (std::size_t a = 0; a < poly.size(); ++a) {
                next[a] += poly[a];
                next[a + len] += poly[a];
            }
            poly = next;
        }
        for (std::size_t k = 0; k <= m; ++k)
            total[k] += poly[k];
    }
    for (auto& t : total)
        t /= g.order();
    return total;
}

using QuadKey = std::array<std::uint64_t, 4>;

QuadKey quad_key(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d)
{
    QuadKey k1{std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)};
    QuadKey k2{k1[2], k1[3], k1[0], k1[1]};
    return std::min(k1, k2);
}

bool quad_isomorphic(std::size_t n, const Quad& a, const Quad& b)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    const auto target = quad_key(b.u1, b.u2, b.v1, b.v2);
    do {
        if (quad_key(oracle::permute_mask(p, a.u1), oracle::permute_mask(p, a.u2), oracle::permute_mask(p, a.v1),
                     oracle::permute_mask(p, a.v2)) == target)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

} // namespace

TEST_CASE("printed stabilizer generators")
{
    auto g124 = stabilizer(6, vertex_set({1, 2, 4}));
    auto g145 = stabilizer(6, vertex_set({1, 4, 5}));
    CHECK(g124.order() == 12);
    CHECK(g145.order() == 4);
    CHECK(stabilizer(8, vertex_set({1, 4, 5})).order() == 24);
    for (const auto& p : g145.elements()) {
        CHECK(apply_to_mask(p, vertex_set({1, 2, 3})) == vertex_set({1, 2, 3}));
        CHECK(apply_to_mask(p, vertex_set({1, 4, 5})) == vertex_set({1, 4, 5}));
    }
    // the printed generators for F = {1,2,4} fix {1,2,3} but move F itself
    bool moves_f = false;
    for (const auto& p : g124.elements()) {
        CHECK(apply_to_mask(p, vertex_set({1, 2, 3})) == vertex_set({1, 2, 3}));
        moves_f = moves_f || apply_to_mask(p, vertex_set({1, 2, 4})) != vertex_set({1, 2, 4});
    }
    CHECK(moves_f);
    CHECK_THROWS_AS(stabilizer(6, vertex_set({1, 2, 5})), UnsupportedInput);
    CHECK_THROWS_AS(stabilizer(9, vertex_set({1, 2, 4})), UnsupportedInput);
}

TEST_CASE("group closure")
{
    auto h = triangle_pair_group();
    CHECK(h.order() == 36);
    std::vector<int> pts{1, 2, 3, 4};
    CHECK(PermGroup::symmetric_on(5, pts).order() == 24);
    CHECK(PermGroup(4, {}).order() == 1);
    CHECK_THROWS(PermGroup(3, {Permutation{0, 0, 1}}));
    CHECK_THROWS(PermGroup::from_cycles(3, {{{1, 4}}}));
}

TEST_CASE("orbit counts on mixed triples")
{
    auto h = triangle_pair_group();
    auto omega = mixed_triples();
    CHECK(omega.size() == 9);
    auto counts = subset_orbit_counts(h, omega);
    CHECK(counts == std::vector<std::size_t>{1, 1, 3, 6, 7, 7, 6, 3, 1, 1});
    CHECK(counts == burnside_counts(h, omega));
    CHECK(subset_orbits(h, omega).size() == 36);
}

TEST_CASE("orbit counts match Burnside for the stabilizers")
{
    auto ground = oracle::subsets_of_size(6, 3);
    for (auto f : {vertex_set({1, 2, 4}), vertex_set({1, 4, 5})}) {
        auto g = stabilizer(6, f);
        CHECK(subset_orbit_counts(g, ground) == burnside_counts(g, ground));
    }
}

TEST_CASE("trivial and full symmetric groups")
{
    PermGroup trivial(5, {});
    auto ground = oracle::subsets_of_size(5, 2);
    auto counts = subset_orbit_counts(trivial, ground);
    for (std::size_t k = 0; k <= ground.size(); ++k)
        CHECK(counts[k] == binomial(ground.size(), k));
    std::vector<int> pts{1, 2, 3, 4, 5};
    auto full = subset_orbit_counts(PermGroup::symmetric_on(5, pts), ground);
    CHECK(full[1] == 1);
    CHECK(full[2] == 2);
}

TEST_CASE("quadruple search")
{
    auto six = algorithm1(6);
    REQUIRE(six.size() == 1);
    Quad printed6{vertex_set({1, 2, 3}), vertex_set({2, 4, 6}), vertex_set({1, 4, 5}), vertex_set({3, 5, 6})};
    CHECK(quad_isomorphic(6, six[0], printed6));
    auto eight = algorithm1(8);
    REQUIRE(eight.size() == 1);
    Quad printed8{vertex_set({1, 2, 3}), vertex_set({4, 5, 6}), vertex_set({1, 4, 7}), vertex_set({2, 5, 8})};
    CHECK(quad_isomorphic(8, eight[0], printed8));
    auto seven = algorithm1(7);
    Quad printed7{vertex_set({1, 2, 3}), vertex_set({3, 4, 7}), vertex_set({1, 4, 5}), vertex_set({2, 6, 7})};
    for (const auto& q : seven)
        CHECK(quad_isomorphic(7, q, printed7));
    for (std::size_t n = 6; n <= 8; ++n)
        for (const auto& q : algorithm1(n)) {
            CHECK(quad_split_free(n, q));
            CHECK(quad_lcm(n, q).degree() == 8);
            CHECK(quad_overlap(q) != 5);
        }
    CHECK_THROWS_AS(algorithm1(5), UnsupportedInput);
}

TEST_CASE("rule sets of the clutter search")
{
    auto q = algorithm1(6).front();
    auto sets = algorithm2_sets(6, q);
    CHECK(sets.forced_in.size() == 4);
    for (auto f : sets.forced_out)
        CHECK(std::find(sets.forced_in.begin(), sets.forced_in.end(), f) == sets.forced_in.end());
    std::set<std::uint64_t> ruled(sets.forced_in.begin(), sets.forced_in.end());
    ruled.insert(sets.forced_out.begin(), sets.forced_out.end());
    for (auto [a, b] : sets.conflicts) {
        ruled.insert(a);
        ruled.insert(b);
    }
    CHECK(ruled.size() + sets.free.size() == 20);
}

TEST_CASE("clutter search at n = 6")
{
    auto q = algorithm1(6).front();
    auto out = algorithm2(6, q);
    CHECK(out == algorithm2_direct(6, q));
    std::set<Clutter> forms;
    for (const auto& c : out) {
        forms.insert(canonical_form(c));
        auto ideal = edge_ideal(c);
        CHECK(linearly_presented_graph(ideal).linearly_presented);
        CHECK_FALSE(power_check(ideal, 2).linearly_presented);
        CHECK(complement_c_free(c));
    }
    CHECK(forms.size() == 6);
    CHECK(forms.count(canonical_form(catalog::sturmfels())) == 1);
}

TEST_CASE("clutter search agrees with the direct search at n = 7")
{
    auto q = algorithm1(7).front();
    CHECK(algorithm2(7, q, {2, ""}) == algorithm2_direct(7, q));
}

TEST_CASE("worker count does not change results")
{
    auto q = algorithm1(8).front();
    CHECK(algorithm2(8, q, {1, ""}) == algorithm2(8, q, {3, ""}));
    CHECK(clutter_classes(6, 3, 4, {1, ""}) == clutter_classes(6, 3, 4, {3, ""}));
}

TEST_CASE("family cache round trip")
{
    auto dir = std::filesystem::temp_directory_path() / "glindex-cache-test";
    std::filesystem::remove_all(dir);
    SearchOptions opts{0, dir.string()};
    auto first = family_d(opts);
    CHECK(std::filesystem::exists(dir / "family_d.json"));
    auto second = family_d(opts);
    CHECK(first == second);
    {
        std::ofstream corrupt(dir / "family_d.json");
        corrupt << "{\"recipe\": \"other\"}";
    }
    CHECK(family_d(opts) == first);
    std::filesystem::remove_all(dir);
    std::set<Clutter> distinct(first.begin(), first.end());
    CHECK(distinct.size() == first.size());
    for (const auto& c : first)
        CHECK(canonical_form(c) == c);
    for (const auto& seed : {catalog::sturmfels(), catalog::d6_7(), catalog::d48_7(), catalog::d1_8()})
        CHECK(std::find(first.begin(), first.end(), canonical_form(seed)) != first.end());
}

TEST_CASE("table-based complement test agrees with embedding search")
{
    oracle::Rng rng(19);
    auto family = catalog::family_c();
    for (int trial = 0; trial < 300; ++trial) {
        auto c = oracle::random_clutter(rng, 5 + trial % 3, 3, 0.5 + 0.1 * (trial % 5));
        CHECK(complement_c_free(c) == is_family_free(complement(c), family));
    }
}

TEST_CASE("canonical family lookup")
{
    std::vector<Clutter> members{catalog::bipyramid()};
    CanonicalFamily fam(members);
    auto host = Clutter(7, 3, catalog::bipyramid().circuits());
    auto hit = fam.find(host);
    REQUIRE(hit.has_value());
    CHECK(hit->vertices == vertex_set({1, 2, 3, 4, 5}));
    CHECK(fam.is_free(Clutter(7, 3, {})));
}

TEST_CASE("the clutter C_d")
{
    auto c2 = construct_cd(2);
    CHECK(c2 == Clutter::from_lists(4, 2, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    auto c3 = construct_cd(3);
    CHECK(c3.size() == 6);
    CHECK(c3.vertices() == 5);
    CHECK(are_isomorphic(c3, catalog::bipyramid()));
    CHECK(hochster_beta(complement(c2), 1, 4) != 0);
}

TEST_CASE("kappa for graphs")
{
    auto result = kappa(2);
    CHECK(result.kappa == 4);
    CHECK(result.witness.size() == 4);
    CHECK_THROWS_AS(kappa(5), UnsupportedInput);
}

TEST_CASE("clutter classes count graphs up to isomorphism")
{
    // graphs on 4 and 5 vertices: 11 and 34 classes
    auto count = [](std::size_t n) {
        std::size_t total = 0;
        for (const auto& level : clutter_classes(n, 2, SIZE_MAX))
            total += level.size();
        return total;
    };
    CHECK(count(4) == 11);
    CHECK(count(5) == 34);
}

TEST_CASE("first failing power and small omega values")
{
    CHECK(first_failing_power_is(complement(catalog::bipyramid()), 1));
    CHECK(first_failing_power_is(catalog::sturmfels(), 2));
    CHECK_FALSE(first_failing_power_is(catalog::sturmfels(), 1));
    std::vector<std::size_t> graphs;
    for (std::size_t n = 1; n <= 5; ++n)
        graphs.push_back(enumerate_omega(2, 1, n).count);
    CHECK(graphs == std::vector<std::size_t>{0, 0, 0, 1, 0});
    CHECK(enumerate_omega(3, 1, 5).count == 3);
    CHECK_THROWS_AS(enumerate_omega(4, 1, 5), UnsupportedInput);
    CHECK_THROWS_AS(enumerate_omega(3, 2, 9), UnsupportedInput);
}

TEST_CASE("minimal representatives lose the property when a vertex is removed")
{
    for (const auto& c : enumerate_omega(3, 1, 5).representatives)
        for (std::uint64_t v = 0; v < c.vertices(); ++v) {
            auto w = c.vertex_mask() & ~(std::uint64_t{1} << v);
            CHECK_FALSE(first_failing_power_is(induced(c, w), 1));
        }
}

TEST_CASE("case census")
{
    auto census = case_census_deg6();
    CHECK(census.cases == 105);
    CHECK(census.representatives == 36);
    CHECK(census.all_obstructed);
}
