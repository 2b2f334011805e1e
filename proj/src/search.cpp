#include "glindex/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "glindex/betti.hpp"
#include "glindex/linpres.hpp"

namespace glindex {

namespace {

using json = nlohmann::json;

std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::vector<std::uint64_t> subsets_of_size(std::size_t n, std::size_t k)
{
    std::vector<std::uint64_t> out;
    if (k > n)
        return out;
    if (k == 0)
        return {0};
    for (std::uint64_t m = low_bits(k); m <= low_bits(n);) {
        out.push_back(m);
        std::uint64_t c = m & (~m + 1);
        std::uint64_t r = m + c;
        if (r == 0)
            break;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

int top_bit(std::uint64_t m) { return 63 - std::countl_zero(m); }

// Runs body(i) for i in [0, count) on up to `jobs` threads; rethrows the first failure.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body)
{
    jobs = std::min<unsigned>(effective_jobs(jobs), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < count; i = next++)
                    body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        });
    for (auto& t : workers)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

Permutation compose(const Permutation& outer, const Permutation& inner)
{
    Permutation r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i)
        r[i] = outer[inner[i]];
    return r;
}

// ---- obstruction tables on five and six vertices ----

struct ObstructionTables {
    // Indexed by the 10-bit membership mask of the triples of a 5-set, in
    // ascending local mask order: whether that clutter is B, B1 or B2.
    std::array<bool, 1024> bad5{};
    std::array<std::uint64_t, 10> local5{};
};

const ObstructionTables& obstruction_tables()
{
    static const ObstructionTables tables = [] {
        ObstructionTables t;
        auto local = subsets_of_size(5, 3);
        std::copy(local.begin(), local.end(), t.local5.begin());
        std::set<Clutter> bad{canonical_form(catalog::bipyramid()), canonical_form(catalog::bipyramid_plus_one()),
                              canonical_form(catalog::bipyramid_plus_two())};
        for (std::uint32_t m = 0; m < 1024; ++m) {
            std::vector<std::uint64_t> masks;
            for (int b = 0; b < 10; ++b)
                if (m >> b & 1)
                    masks.push_back(t.local5[b]);
            t.bad5[m] = bad.count(canonical_form(Clutter(5, 3, masks))) > 0;
        }
        return t;
    }();
    return tables;
}

// Triple index lookup for a fixed vertex count.
struct TripleIndex {
    std::vector<std::uint64_t> triples; // ascending masks
    std::unordered_map<std::uint64_t, int> index;

    explicit TripleIndex(std::size_t n) : triples(subsets_of_size(n, 3))
    {
        for (std::size_t i = 0; i < triples.size(); ++i)
            index.emplace(triples[i], static_cast<int>(i));
    }
    int at(std::uint64_t m) const { return index.at(m); }
};

// 5- and 6-vertex windows used to test the complement for obstructions.
struct Window5 {
    std::array<int, 10> triple{};
};
struct Window6 {
    std::array<int, 20> triple{};
    std::array<std::uint8_t, 20> partner{}; // position of the complementary triple
};

struct Windows {
    // windows grouped by their highest vertex
    std::vector<std::vector<Window5>> five;
    std::vector<std::vector<Window6>> six;

    Windows(std::size_t n, const TripleIndex& idx) : five(n), six(n)
    {
        const auto& tables = obstruction_tables();
        for (auto w : subsets_of_size(n, 5)) {
            Window5 win;
            for (int b = 0; b < 10; ++b)
                win.triple[b] = idx.at(expand(tables.local5[b], w));
            five[top_bit(w)].push_back(win);
        }
        auto local6 = subsets_of_size(6, 3);
        for (auto w : subsets_of_size(n, 6)) {
            Window6 win;
            for (int b = 0; b < 20; ++b) {
                win.triple[b] = idx.at(expand(local6[b], w));
                auto other = std::find(local6.begin(), local6.end(), local6[b] ^ 0x3F);
                win.partner[b] = static_cast<std::uint8_t>(other - local6.begin());
            }
            six[top_bit(w)].push_back(win);
        }
    }

    static std::uint64_t expand(std::uint64_t local, std::uint64_t w)
    {
        std::uint64_t out = 0;
        int pos = 0;
        for (auto x = w; x; x &= x - 1, ++pos)
            if (local >> pos & 1)
                out |= x & (~x + 1);
        return out;
    }

    // Whether the complement of `present` has an obstruction on a window whose top vertex is hv.
    template <class Present>
    bool obstructed_at(int hv, Present&& present) const
    {
        const auto& tables = obstruction_tables();
        for (const auto& win : five[hv]) {
            std::uint32_t comp = 0;
            for (int b = 0; b < 10; ++b)
                if (!present(win.triple[b]))
                    comp |= 1U << b;
            if (tables.bad5[comp])
                return true;
        }
        for (const auto& win : six[hv]) {
            int count = 0, first = -1;
            for (int b = 0; b < 20 && count <= 2; ++b)
                if (present(win.triple[b])) {
                    if (count == 0)
                        first = b;
                    ++count;
                }
            if (count == 2 && present(win.triple[win.partner[first]]))
                return true;
        }
        return false;
    }
};

// Degree-6 products of two triples dividing lcm(u, v), with adjacency when
// their lcm has degree 7; answers whether u and v are separated.
class ProductGraph {
public:
    ProductGraph(std::size_t n, const Quad& q, const TripleIndex& idx)
    {
        const Monomial l = quad_lcm(n, q);
        std::vector<Monomial> products;
        std::vector<std::vector<std::pair<int, int>>> factors;
        for (std::size_t a = 0; a < idx.triples.size(); ++a)
            for (std::size_t b = a; b < idx.triples.size(); ++b) {
                Monomial w = triple_monomial(n, idx.triples[a]) * triple_monomial(n, idx.triples[b]);
                if (!divides(w, l))
                    continue;
                auto it = std::find(products.begin(), products.end(), w);
                if (it == products.end()) {
                    products.push_back(w);
                    factors.emplace_back();
                    it = products.end() - 1;
                }
                factors[it - products.begin()].emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        if (products.size() > 64)
            throw std::logic_error("too many products below lcm(u, v)");
        factors_ = std::move(factors);
        adjacency_.assign(products.size(), 0);
        for (std::size_t a = 0; a < products.size(); ++a)
            for (std::size_t b = 0; b < products.size(); ++b)
                if (lcm(products[a], products[b]).degree() == 7)
                    adjacency_[a] |= std::uint64_t{1} << b;
        const Monomial u = triple_monomial(n, q.u1) * triple_monomial(n, q.u2);
        const Monomial v = triple_monomial(n, q.v1) * triple_monomial(n, q.v2);
        u_ = static_cast<int>(std::find(products.begin(), products.end(), u) - products.begin());
        v_ = static_cast<int>(std::find(products.begin(), products.end(), v) - products.begin());
    }

    bool separated(std::uint64_t clutter) const
    {
        std::uint64_t present = 0;
        for (std::size_t p = 0; p < factors_.size(); ++p)
            for (auto [a, b] : factors_[p])
                if ((clutter >> a & 1) && (clutter >> b & 1)) {
                    present |= std::uint64_t{1} << p;
                    break;
                }
        std::uint64_t seen = std::uint64_t{1} << u_, frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (auto x = frontier; x; x &= x - 1)
                next |= adjacency_[std::countr_zero(x)];
            next &= present & ~seen;
            seen |= next;
            frontier = next;
        }
        return !(seen >> v_ & 1);
    }

private:
    std::vector<std::vector<std::pair<int, int>>> factors_;
    std::vector<std::uint64_t> adjacency_;
    int u_ = 0, v_ = 0;
};

Clutter clutter_from_bits(std::size_t n, const TripleIndex& idx, std::uint64_t bits)
{
    std::vector<std::uint64_t> masks;
    for (auto x = bits; x; x &= x - 1)
        masks.push_back(idx.triples[std::countr_zero(x)]);
    return Clutter(n, 3, std::move(masks));
}

} // namespace

unsigned effective_jobs(unsigned requested)
{
    if (requested != 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::uint64_t apply_to_mask(const Permutation& p, std::uint64_t mask)
{
    std::uint64_t out = 0;
    for (auto x = mask; x; x &= x - 1)
        out |= std::uint64_t{1} << p[std::countr_zero(x)];
    return out;
}

// ---- permutation groups ----

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators))
{
    if (degree == 0 || degree > 64)
        throw std::invalid_argument("permutation degree must be in 1..64");
    for (const auto& g : generators_) {
        if (g.size() != degree)
            throw std::invalid_argument("generator of wrong degree");
        std::vector<bool> hit(degree, false);
        for (auto x : g) {
            if (x >= degree || hit[x])
                throw std::invalid_argument("generator is not a permutation");
            hit[x] = true;
        }
    }
    Permutation id(degree);
    for (std::size_t i = 0; i < degree; ++i)
        id[i] = static_cast<std::uint8_t>(i);
    std::set<Permutation> seen{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& g : generators_) {
                auto q = compose(g, p);
                if (seen.insert(q).second)
                    next.push_back(std::move(q));
            }
        frontier = std::move(next);
        if (seen.size() > 1000000)
            throw UnsupportedInput("group too large to materialize");
    }
    elements_.assign(seen.begin(), seen.end());
}

PermGroup PermGroup::from_cycles(std::size_t degree, const std::vector<std::vector<std::vector<int>>>& generators)
{
    std::vector<Permutation> gens;
    for (const auto& cycles : generators) {
        Permutation p(degree);
        for (std::size_t i = 0; i < degree; ++i)
            p[i] = static_cast<std::uint8_t>(i);
        for (const auto& cyc : cycles) {
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                if (from < 1 || to < 1 || static_cast<std::size_t>(from) > degree || static_cast<std::size_t>(to) > degree)
                    throw std::invalid_argument("cycle point out of range");
                p[from - 1] = static_cast<std::uint8_t>(to - 1);
            }
        }
        gens.push_back(std::move(p));
    }
    return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::symmetric_on(std::size_t degree, std::span<const int> points)
{
    std::vector<std::vector<std::vector<int>>> gens;
    for (std::size_t k = 1; k < points.size(); ++k)
        gens.push_back({{points[0], points[k]}});
    return from_cycles(degree, gens);
}

PermGroup join(const PermGroup& a, const PermGroup& b)
{
    if (a.degree() != b.degree())
        throw std::invalid_argument("groups of different degree");
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return PermGroup(a.degree(), std::move(gens));
}

PermGroup stabilizer(std::size_t n, std::uint64_t f)
{
    if (n < 6 || n > 8)
        throw UnsupportedInput("stabilizers are provided for n = 6, 7, 8 only");
    std::vector<int> tail;
    if (f == vertex_set({1, 2, 4})) {
        for (int p = 4; p <= static_cast<int>(n); ++p)
            tail.push_back(p);
        return join(PermGroup::from_cycles(n, {{{1, 2}}}), PermGroup::symmetric_on(n, tail));
    }
    if (f == vertex_set({1, 4, 5})) {
        for (int p = 6; p <= static_cast<int>(n); ++p)
            tail.push_back(p);
        return join(PermGroup::from_cycles(n, {{{2, 3}}, {{4, 5}}}), PermGroup::symmetric_on(n, tail));
    }
    throw UnsupportedInput("stabilizers are provided for F = {1,2,4} and F = {1,4,5} only");
}

PermGroup triangle_pair_group() { return PermGroup::from_cycles(6, {{{1, 2, 3}}, {{1, 2}}, {{4, 5, 6}}, {{4, 5}}}); }

std::vector<std::uint64_t> mixed_triples()
{
    std::vector<std::uint64_t> out;
    for (auto m : subsets_of_size(6, 3))
        if (std::popcount(m & 0x7) == 2)
            out.push_back(m);
    return out;
}

std::vector<std::vector<std::uint64_t>> subset_orbits(const PermGroup& g, std::span<const std::uint64_t> ground)
{
    const std::size_t m = ground.size();
    if (m > 24)
        throw UnsupportedInput("subset orbits are computed for ground sets of at most 24 elements");
    std::vector<std::vector<int>> moves;
    for (const auto& p : g.elements()) {
        std::vector<int> pos(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto img = apply_to_mask(p, ground[i]);
            auto it = std::find(ground.begin(), ground.end(), img);
            if (it == ground.end())
                throw std::invalid_argument("ground set is not closed under the group");
            pos[i] = static_cast<int>(it - ground.begin());
        }
        moves.push_back(std::move(pos));
    }
    std::vector<bool> seen(std::size_t{1} << m, false);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        if (seen[s])
            continue;
        std::set<std::uint64_t> orbit;
        for (const auto& pos : moves) {
            std::uint64_t img = 0;
            for (auto x = s; x; x &= x - 1)
                img |= std::uint64_t{1} << pos[std::countr_zero(x)];
            orbit.insert(img);
        }
        for (auto t : orbit)
            seen[t] = true;
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

std::vector<std::size_t> subset_orbit_counts(const PermGroup& g, std::span<const std::uint64_t> ground)
{
    std::vector<std::size_t> counts(ground.size() + 1, 0);
    for (const auto& orbit : subset_orbits(g, ground))
        ++counts[static_cast<std::size_t>(std::popcount(orbit.front()))];
    return counts;
}

// ---- quadruples ----

Monomial triple_monomial(std::size_t n, std::uint64_t mask) { return Monomial::from_mask(n, mask); }

Monomial quad_lcm(std::size_t n, const Quad& q)
{
    return lcm(triple_monomial(n, q.u1) * triple_monomial(n, q.u2), triple_monomial(n, q.v1) * triple_monomial(n, q.v2));
}

int quad_overlap(const Quad& q) { return std::popcount((q.u1 | q.u2) & (q.v1 | q.v2)); }

bool quad_split_free(std::size_t n, const Quad& q)
{
    const Monomial l = quad_lcm(n, q);
    for (auto a : {q.u1, q.u2})
        for (auto b : {q.v1, q.v2})
            if (divides(triple_monomial(n, a) * triple_monomial(n, b), l))
                return false;
    return true;
}

std::vector<Quad> algorithm1(std::size_t n, const Algorithm1Options& options)
{
    if (n < 6 || n > 8)
        throw UnsupportedInput("the quadruple search runs for n = 6, 7, 8 only");
    const auto triples = subsets_of_size(n, 3);
    const std::uint64_t first = vertex_set({1, 2, 3});
    std::vector<Quad> out;
    for (auto partner : {vertex_set({1, 2, 4}), vertex_set({1, 4, 5})}) {
        const PermGroup g = stabilizer(n, partner);
        // key: the two unordered pairs, each stored sorted
        auto key = [](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
            return std::array<std::uint64_t, 4>{std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)};
        };
        std::map<std::array<std::uint64_t, 4>, Quad> found;
        for (auto u2 : triples)
            for (auto v2 : triples) {
                Quad q{first, u2, partner, v2};
                if (quad_split_free(n, q))
                    found.emplace(key(q.u1, q.u2, q.v1, q.v2), q);
            }
        // Equivalence classes of found quadruples under the group; the
        // representative is the member with the least (U2, V2).
        std::vector<Quad> ordered;
        for (const auto& [k, q] : found)
            ordered.push_back(q);
        std::sort(ordered.begin(), ordered.end(),
                  [](const Quad& a, const Quad& b) { return std::pair(a.u2, a.v2) < std::pair(b.u2, b.v2); });
        std::set<std::array<std::uint64_t, 4>> covered;
        for (const auto& q : ordered) {
            auto k = key(q.u1, q.u2, q.v1, q.v2);
            if (covered.count(k))
                continue;
            for (const auto& p : g.elements()) {
                auto img = key(apply_to_mask(p, q.u1), apply_to_mask(p, q.u2), apply_to_mask(p, q.v1),
                               apply_to_mask(p, q.v2));
                if (found.count(img))
                    covered.insert(img);
            }
            if (options.require_full_support && (q.u1 | q.u2 | q.v1 | q.v2) != low_bits(n))
                continue;
            if (quad_lcm(n, q).degree() < options.min_lcm_degree)
                continue;
            if (options.drop_overlap_five && quad_overlap(q) == 5)
                continue;
            out.push_back(q);
        }
    }
    return out;
}

// ---- clutter search for one quadruple ----

Algorithm2Sets algorithm2_sets(std::size_t n, const Quad& q)
{
    if (n < 6 || n > 8)
        throw UnsupportedInput("the clutter search runs for n = 6, 7, 8 only");
    const auto triples = subsets_of_size(n, 3);
    auto mono = [&](std::uint64_t m) { return triple_monomial(n, m); };
    const Monomial u1 = mono(q.u1), u2 = mono(q.u2), v1 = mono(q.v1), v2 = mono(q.v2);
    const Monomial u = u1 * u2, v = v1 * v2, l = lcm(u, v);
    auto adjacent = [](const Monomial& a, const Monomial& b) { return lcm(a, b).degree() == 7; };
    // some mixed product x_i * y_j divides lcm(x1 x2, y1 y2)
    auto mixed_divides = [](const Monomial& x1, const Monomial& x2, const Monomial& y1, const Monomial& y2) {
        const Monomial m = lcm(x1 * x2, y1 * y2);
        for (const auto* a : {&x1, &x2})
            for (const auto* b : {&y1, &y2})
                if (divides(*a * *b, m))
                    return true;
        return false;
    };

    Algorithm2Sets sets;
    sets.forced_in = {q.u1, q.u2, q.v1, q.v2};
    std::sort(sets.forced_in.begin(), sets.forced_in.end());
    sets.forced_in.erase(std::unique(sets.forced_in.begin(), sets.forced_in.end()), sets.forced_in.end());

    for (auto f : triples) {
        const Monomial w1 = mono(f);
        bool joins = false;
        for (const auto* w2 : {&u1, &u2}) {
            const Monomial p = w1 * *w2;
            if (divides(p, l) && adjacent(u, p) && mixed_divides(v1, v2, w1, *w2))
                joins = true;
        }
        for (const auto* w2 : {&v1, &v2}) {
            const Monomial p = w1 * *w2;
            if (divides(p, l) && adjacent(v, p) && mixed_divides(u1, u2, w1, *w2))
                joins = true;
        }
        if (joins)
            sets.forced_out.push_back(f);
    }

    const std::array<const Monomial*, 4> quad{&u1, &u2, &v1, &v2};
    std::set<std::uint64_t> in_conflict;
    for (std::size_t a = 0; a < triples.size(); ++a)
        for (std::size_t b = a + 1; b < triples.size(); ++b) {
            const Monomial x1 = mono(triples[a]), x2 = mono(triples[b]);
            bool conflict = false;
            const Monomial p = x1 * x2;
            if (divides(p, l) && adjacent(u, p) && adjacent(p, v))
                conflict = true;
            for (int side = 0; side < 2 && !conflict; ++side) {
                const Monomial& near_u = side == 0 ? x1 : x2;
                const Monomial& near_v = side == 0 ? x2 : x1;
                for (auto* w1 : quad)
                    for (auto* w2 : quad) {
                        const Monomial p1 = near_u * *w1, p2 = near_v * *w2;
                        if (divides(p1, l) && divides(p2, l) && adjacent(u, p1) && adjacent(p1, p2) && adjacent(p2, v))
                            conflict = true;
                    }
            }
            if (!conflict && p == u)
                for (const auto* y : {&v1, &v2})
                    if (divides(x1 * *y, l) || divides(x2 * *y, l))
                        conflict = true;
            if (!conflict && p == v)
                for (const auto* y : {&u1, &u2})
                    if (divides(x1 * *y, l) || divides(x2 * *y, l))
                        conflict = true;
            if (conflict) {
                sets.conflicts.emplace_back(triples[a], triples[b]);
                in_conflict.insert(triples[a]);
                in_conflict.insert(triples[b]);
            }
        }

    for (auto f : triples) {
        const bool ruled = std::binary_search(sets.forced_in.begin(), sets.forced_in.end(), f) ||
                           std::binary_search(sets.forced_out.begin(), sets.forced_out.end(), f) ||
                           in_conflict.count(f);
        if (!ruled)
            sets.free.push_back(f);
    }
    return sets;
}

namespace {

// Depth-first search over triple memberships in ascending triple order.
// Triples are decided one at a time; a branch is cut as soon as u and v
// become joined (adding triples never separates them again) or a fully
// decided vertex window shows an obstruction in the complement.
struct CluttersSearch {
    std::size_t n;
    const TripleIndex& idx;
    const Windows& windows;
    const ProductGraph& graph;
    std::vector<int> choice;                 // triple indices decided by branching, ascending
    std::vector<std::uint64_t> conflict_of;  // per triple: conflicting triple bits
    std::vector<std::vector<int>> checks_before; // per choice position: top vertices to check
    std::vector<int> checks_at_end;

    bool window_ok(std::uint64_t bits, int hv) const
    {
        return !windows.obstructed_at(hv, [bits](int t) { return (bits >> t & 1) != 0; });
    }

    bool checks_ok(std::uint64_t bits, const std::vector<int>& tops) const
    {
        return std::all_of(tops.begin(), tops.end(), [&](int hv) { return window_ok(bits, hv); });
    }

    void run(std::size_t pos, std::uint64_t bits, std::vector<std::uint64_t>& out, std::size_t stop_at,
             std::vector<std::pair<std::size_t, std::uint64_t>>* tasks) const
    {
        if (pos < choice.size() && !checks_ok(bits, checks_before[pos]))
            return;
        if (pos == choice.size()) {
            if (checks_ok(bits, checks_at_end))
                out.push_back(bits);
            return;
        }
        if (tasks && pos == stop_at) {
            tasks->emplace_back(pos, bits);
            return;
        }
        const int t = choice[pos];
        // leave the triple out
        run(pos + 1, bits, out, stop_at, tasks);
        // put it in
        if ((conflict_of[t] & bits) == 0) {
            const std::uint64_t with = bits | (std::uint64_t{1} << t);
            if (graph.separated(with))
                run(pos + 1, with, out, stop_at, tasks);
        }
    }
};

std::vector<Clutter> run_clutter_search(std::size_t n, const Quad& q, const std::vector<std::uint64_t>& forced_in,
                                        const std::vector<std::uint64_t>& forced_out,
                                        const std::vector<std::pair<std::uint64_t, std::uint64_t>>& conflicts,
                                        unsigned jobs)
{
    const TripleIndex idx(n);
    const Windows windows(n, idx);
    const ProductGraph graph(n, q, idx);

    std::uint64_t start = 0, out_bits = 0;
    for (auto m : forced_in)
        start |= std::uint64_t{1} << idx.at(m);
    for (auto m : forced_out)
        out_bits |= std::uint64_t{1} << idx.at(m);
    if (start & out_bits)
        return {};
    CluttersSearch search{n, idx, windows, graph, {}, std::vector<std::uint64_t>(idx.triples.size(), 0), {}, {}};
    for (auto [a, b] : conflicts) {
        const int ia = idx.at(a), ib = idx.at(b);
        search.conflict_of[ia] |= std::uint64_t{1} << ib;
        search.conflict_of[ib] |= std::uint64_t{1} << ia;
    }
    for (int t = 0; t < static_cast<int>(idx.triples.size()); ++t)
        if ((start >> t & 1) && (search.conflict_of[t] & start))
            return {};
    if (!graph.separated(start))
        return {};
    for (int t = 0; t < static_cast<int>(idx.triples.size()); ++t) {
        const std::uint64_t bit = std::uint64_t{1} << t;
        if ((start & bit) || (out_bits & bit) || (search.conflict_of[t] & start))
            continue;
        search.choice.push_back(t);
    }
    // A window with top vertex hv is complete once every triple inside {0..hv} is decided.
    search.checks_before.assign(search.choice.size(), {});
    int checked_through = -1;
    for (std::size_t p = 0; p < search.choice.size(); ++p) {
        const int hv = top_bit(idx.triples[search.choice[p]]);
        for (int v = checked_through + 1; v < hv; ++v)
            search.checks_before[p].push_back(v);
        checked_through = std::max(checked_through, hv - 1);
    }
    for (int v = checked_through + 1; v < static_cast<int>(n); ++v)
        search.checks_at_end.push_back(v);

    std::vector<std::uint64_t> found;
    std::vector<std::pair<std::size_t, std::uint64_t>> tasks;
    const std::size_t split = std::min<std::size_t>(search.choice.size(), 12);
    search.run(0, start, found, split, &tasks);
    std::vector<std::vector<std::uint64_t>> partial(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) {
        search.run(tasks[i].first, tasks[i].second, partial[i], 0, nullptr);
    });
    for (auto& part : partial)
        found.insert(found.end(), part.begin(), part.end());

    std::vector<Clutter> out;
    out.reserve(found.size());
    for (auto bits : found)
        out.push_back(clutter_from_bits(n, idx, bits));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Clutter> algorithm2(std::size_t n, const Quad& q, const SearchOptions& options)
{
    auto sets = algorithm2_sets(n, q);
    return run_clutter_search(n, q, sets.forced_in, sets.forced_out, sets.conflicts, options.jobs);
}

std::vector<Clutter> algorithm2_direct(std::size_t n, const Quad& q)
{
    if (n < 6 || n > 8)
        throw UnsupportedInput("the clutter search runs for n = 6, 7, 8 only");
    const TripleIndex idx(n);
    const ProductGraph graph(n, q, idx);
    std::uint64_t start = 0;
    for (auto m : {q.u1, q.u2, q.v1, q.v2})
        start |= std::uint64_t{1} << idx.at(m);
    std::vector<int> rest;
    for (int t = 0; t < static_cast<int>(idx.triples.size()); ++t)
        if (!(start >> t & 1))
            rest.push_back(t);
    const auto family = catalog::family_c();
    std::vector<Clutter> out;
    auto visit = [&](auto&& self, std::size_t pos, std::uint64_t bits) -> void {
        if (pos == rest.size()) {
            Clutter c = clutter_from_bits(n, idx, bits);
            if (is_family_free(complement(c), family))
                out.push_back(std::move(c));
            return;
        }
        self(self, pos + 1, bits);
        const std::uint64_t with = bits | (std::uint64_t{1} << rest[pos]);
        if (graph.separated(with))
            self(self, pos + 1, with);
    };
    if (graph.separated(start))
        visit(visit, 0, start);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- the family of square obstructions ----

namespace {

constexpr const char* kFamilyRecipe = "quadruples(full-support,lcm>=8,drop-overlap-5)/clutters(v1)";

std::string fnv1a_hex(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

json family_payload(const std::vector<Clutter>& family)
{
    json list = json::array();
    for (const auto& c : family)
        list.push_back({{"n", c.vertices()}, {"d", c.uniformity()}, {"circuits", c.to_lists()}});
    return list;
}

std::optional<std::vector<Clutter>> load_family(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    try {
        json doc = json::parse(in);
        const json& list = doc.at("clutters");
        if (doc.at("recipe").get<std::string>() != kFamilyRecipe)
            return std::nullopt;
        if (doc.at("hash").get<std::string>() != fnv1a_hex(std::string(kFamilyRecipe) + list.dump()))
            return std::nullopt;
        std::vector<Clutter> out;
        for (const auto& item : list)
            out.push_back(Clutter::from_lists(item.at("n").get<std::size_t>(), item.at("d").get<std::size_t>(),
                                              item.at("circuits").get<std::vector<std::vector<int>>>()));
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void store_family(const std::filesystem::path& file, const std::vector<Clutter>& family)
{
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    json list = family_payload(family);
    json doc{{"recipe", kFamilyRecipe}, {"hash", fnv1a_hex(std::string(kFamilyRecipe) + list.dump())}, {"clutters", list}};
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << doc.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, file, ec);
}

} // namespace

std::vector<Clutter> family_d(const SearchOptions& options)
{
    std::filesystem::path file;
    if (!options.cache_dir.empty()) {
        file = std::filesystem::path(options.cache_dir) / "family_d.json";
        if (auto cached = load_family(file))
            return *cached;
    }
    std::set<Clutter> forms;
    for (std::size_t n = 6; n <= 8; ++n)
        for (const auto& q : algorithm1(n))
            for (const auto& c : algorithm2(n, q, options))
                forms.insert(canonical_form(c));
    std::vector<Clutter> out(forms.begin(), forms.end());
    if (!file.empty())
        store_family(file, out);
    return out;
}

CanonicalFamily::CanonicalFamily(std::span<const Clutter> members)
{
    for (const auto& m : members) {
        members_.push_back(canonical_form(m));
        sizes_.push_back(m.vertices());
    }
    std::sort(sizes_.begin(), sizes_.end());
    sizes_.erase(std::unique(sizes_.begin(), sizes_.end()), sizes_.end());
}

std::optional<CanonicalFamily::Hit> CanonicalFamily::find(const Clutter& c) const
{
    for (auto s : sizes_) {
        if (s > c.vertices())
            break;
        for (auto w : subsets_of_size(c.vertices(), s)) {
            const Clutter sub = induced(c, w);
            bool plausible = false;
            for (const auto& m : members_)
                if (m.vertices() == s && m.size() == sub.size() && m.uniformity() == sub.uniformity())
                    plausible = true;
            if (!plausible)
                continue;
            const Clutter form = canonical_form(sub);
            for (std::size_t i = 0; i < members_.size(); ++i)
                if (members_[i] == form)
                    return Hit{i, w};
        }
    }
    return std::nullopt;
}

bool complement_c_free(const Clutter& c)
{
    if (c.uniformity() != 3)
        throw UnsupportedInput("the obstruction tables are for 3-uniform clutters");
    const std::size_t n = c.vertices();
    if (n < 5)
        return true;
    const TripleIndex idx(n);
    const Windows windows(n, idx);
    std::vector<bool> present(idx.triples.size(), false);
    for (auto m : c.circuits())
        present[idx.at(m)] = true;
    for (std::size_t hv = 4; hv < n; ++hv)
        if (windows.obstructed_at(static_cast<int>(hv), [&](int t) { return present[t]; }))
            return false;
    return true;
}

// ---- κ and Ω ----

Clutter construct_cd(std::size_t d)
{
    if (d < 1 || d + 2 > kMaxClutterVertices)
        throw UnsupportedInput("d out of range");
    const std::size_t n = d + 2;
    std::uint64_t first = low_bits(d + 1);      // {1..d+1}
    std::uint64_t second = low_bits(d + 2) & ~1ULL; // {2..d+2}
    std::uint64_t middle = first & ~1ULL;        // {2..d+1}
    std::set<std::uint64_t> masks;
    for (auto m : subsets_of_size(n, d))
        if (((m & ~first) == 0 || (m & ~second) == 0) && m != middle)
            masks.insert(m);
    return Clutter(n, d, std::vector<std::uint64_t>(masks.begin(), masks.end()));
}

std::vector<std::vector<Clutter>> clutter_classes(std::size_t n, std::size_t d, std::size_t max_size,
                                                  const SearchOptions& options)
{
    if (n > 9)
        throw UnsupportedInput("clutter classes are enumerated for at most 9 vertices");
    const auto all = subsets_of_size(n, d);
    max_size = std::min(max_size, all.size());
    std::vector<std::vector<Clutter>> levels;
    levels.push_back({Clutter(n, d, {})});
    for (std::size_t s = 1; s <= max_size; ++s) {
        const auto& prev = levels.back();
        std::vector<std::set<Clutter>> found(prev.size());
        parallel_for(prev.size(), options.jobs, [&](std::size_t i) {
            const auto& base = prev[i];
            for (auto m : all) {
                if (base.contains(m))
                    continue;
                auto masks = base.circuits();
                masks.push_back(m);
                found[i].insert(canonical_form(Clutter(n, d, std::move(masks))));
            }
        });
        std::set<Clutter> merged;
        for (auto& f : found)
            merged.insert(f.begin(), f.end());
        levels.emplace_back(merged.begin(), merged.end());
    }
    return levels;
}

KappaResult kappa(std::size_t d, const SearchOptions& options)
{
    if (d < 2 || d > 3)
        throw UnsupportedInput("kappa is searched exhaustively for d = 2, 3 only");
    std::map<std::size_t, std::vector<std::vector<Clutter>>> by_vertices;
    for (std::size_t s = 1;; ++s) {
        for (std::size_t m = d + 1; m <= 2 * d + 2; ++m) {
            auto& levels = by_vertices[m];
            if (levels.size() <= s)
                levels = clutter_classes(m, d, s, options);
            if (levels.size() <= s)
                continue;
            for (const auto& c : levels[s])
                if (!hochster_linear(clique_complex(c), d))
                    return KappaResult{s, c};
        }
        if (s > 4 * d + 4)
            throw std::logic_error("no clutter found within the search bound");
    }
}

bool first_failing_power_is(const Clutter& c, std::size_t k)
{
    if (k == 0)
        throw UnsupportedInput("the power must be positive");
    const MonomialIdeal ideal = edge_ideal(c);
    for (std::size_t j = 1; j < k; ++j)
        if (!power_check(ideal, static_cast<int>(j)).linearly_presented)
            return false;
    return !power_check(ideal, static_cast<int>(k)).linearly_presented;
}

namespace {

bool minimal_for_power(const Clutter& c, std::size_t k)
{
    const std::uint64_t full = c.vertex_mask();
    for (std::uint64_t w = 0; w < full; ++w) {
        if ((w & ~full) != 0)
            continue;
        if (static_cast<std::size_t>(std::popcount(w)) < c.uniformity())
            continue;
        if (first_failing_power_is(induced(c, w), k))
            return false;
    }
    return true;
}

} // namespace

OmegaResult enumerate_omega(std::size_t d, std::size_t k, std::size_t n, const SearchOptions& options)
{
    const bool supported = n >= 1 && ((d == 2 && k == 1 && n <= 6) || (d == 3 && k == 1 && n <= 6) ||
                                      (d == 3 && k == 2 && n <= 8));
    if (!supported)
        throw UnsupportedInput("supported (d, k, n): (2, 1, n <= 6), (3, 1, n <= 6), (3, 2, n <= 8)");
    OmegaResult result;
    if (d == 3 && k == 2 && n >= 6) {
        for (const auto& c : family_d(options))
            if (c.vertices() == n && first_failing_power_is(c, 2) && minimal_for_power(c, 2))
                result.representatives.push_back(c);
        result.count = result.representatives.size();
        return result;
    }
    std::vector<Clutter> all;
    for (auto& level : clutter_classes(n, d, SIZE_MAX, options))
        all.insert(all.end(), level.begin(), level.end());
    std::vector<char> keep(all.size(), 0);
    parallel_for(all.size(), options.jobs, [&](std::size_t i) {
        keep[i] = first_failing_power_is(all[i], k) && minimal_for_power(all[i], k);
    });
    for (std::size_t i = 0; i < all.size(); ++i)
        if (keep[i])
            result.representatives.push_back(all[i]);
    result.count = result.representatives.size();
    return result;
}

// ---- case census for two disjoint triples ----

CensusResult case_census_deg6()
{
    const PermGroup h = triangle_pair_group();
    const auto omega = mixed_triples();
    // triples with one vertex in {1,2,3} and two in {4,5,6}
    std::vector<std::uint64_t> reverse_mixed;
    for (auto m : subsets_of_size(6, 3))
        if (std::popcount(m & 0x7) == 1)
            reverse_mixed.push_back(m);
    const std::uint64_t u = vertex_set({1, 2, 3}), v = vertex_set({4, 5, 6});
    const auto family = catalog::family_c();

    CensusResult result;
    result.orbit_counts = subset_orbit_counts(h, omega);
    result.all_obstructed = true;
    const auto orbits = subset_orbits(h, omega);
    result.representatives = orbits.size();
    for (const auto& orbit : orbits) {
        const std::uint64_t rep = orbit.front();
        std::vector<std::uint64_t> chosen;
        std::set<std::uint64_t> excluded;
        for (std::size_t i = 0; i < omega.size(); ++i) {
            if (!(rep >> i & 1))
                continue;
            const std::uint64_t t = omega[i];
            chosen.push_back(t);
            // t = {i, j, a}: the path u - t - {i or j, a, b} - v must be broken
            const std::uint64_t a = t & v;
            for (auto x = t & u; x; x &= x - 1)
                for (auto y = v & ~a; y; y &= y - 1)
                    excluded.insert((x & (~x + 1)) | a | (y & (~y + 1)));
        }
        std::vector<std::uint64_t> open;
        for (auto m : reverse_mixed)
            if (!excluded.count(m))
                open.push_back(m);
        result.cases += chosen.empty() ? 1 : (std::size_t{1} << open.size());
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << open.size()); ++pick) {
            std::vector<std::uint64_t> masks{u, v};
            masks.insert(masks.end(), chosen.begin(), chosen.end());
            for (std::size_t b = 0; b < open.size(); ++b)
                if (pick >> b & 1)
                    masks.push_back(open[b]);
            if (is_family_free(complement(Clutter(6, 3, masks)), family))
                result.all_obstructed = false;
        }
    }
    return result;
}

} // namespace glindex
