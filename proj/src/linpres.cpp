#include "glindex/linpres.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace glindex {

namespace {

int require_degree(const MonomialIdeal& ideal)
{
    auto d = ideal.generating_degree();
    if (!d)
        throw UnsupportedInput("generator graphs need a non-zero ideal generated in one degree");
    return *d;
}

GeneratorGraph graph_on(std::vector<Monomial> verts, int d)
{
    GeneratorGraph g;
    g.vertices = std::move(verts);
    g.adjacency.assign(g.vertices.size(), {});
    for (std::size_t a = 0; a < g.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < g.vertices.size(); ++b)
            if (lcm(g.vertices[a], g.vertices[b]).degree() == d + 1) {
                g.adjacency[a].push_back(static_cast<std::uint32_t>(b));
                g.adjacency[b].push_back(static_cast<std::uint32_t>(a));
            }
    for (auto& adj : g.adjacency)
        std::sort(adj.begin(), adj.end());
    return g;
}

std::vector<Monomial> divisors_among(const std::vector<Monomial>& gens, const Monomial& bound)
{
    std::vector<Monomial> out;
    for (const auto& g : gens)
        if (divides_unchecked(g, bound))
            out.push_back(g);
    return out;
}

// Component label per vertex of the graph on the given generators.
std::vector<std::uint32_t> components(const std::vector<Monomial>& verts, int d)
{
    std::vector<std::uint32_t> label(verts.size(), UINT32_MAX);
    std::uint32_t next = 0;
    std::vector<std::uint32_t> stack;
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (label[s] != UINT32_MAX)
            continue;
        label[s] = next;
        stack.assign(1, static_cast<std::uint32_t>(s));
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < verts.size(); ++y)
                if (label[y] == UINT32_MAX && lcm(verts[x], verts[y]).degree() == d + 1) {
                    label[y] = next;
                    stack.push_back(static_cast<std::uint32_t>(y));
                }
        }
        ++next;
    }
    return label;
}

} // namespace

std::size_t GeneratorGraph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& adj : adjacency)
        total += adj.size();
    return total / 2;
}

std::optional<std::size_t> GeneratorGraph::index_of(const Monomial& m) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
    if (it == vertices.end() || *it != m)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

GeneratorGraph generator_graph(const MonomialIdeal& ideal)
{
    return graph_on(ideal.generators(), require_degree(ideal));
}

GeneratorGraph restricted_graph(const MonomialIdeal& ideal, const Monomial& u, const Monomial& v)
{
    const int d = require_degree(ideal);
    if (!ideal.is_generator(u) || !ideal.is_generator(v))
        throw std::invalid_argument("restricted graphs are taken between minimal generators");
    return graph_on(divisors_among(ideal.generators(), lcm(u, v)), d);
}

PairConnection pair_connected(const MonomialIdeal& ideal, const Monomial& u, const Monomial& v)
{
    auto g = restricted_graph(ideal, u, v);
    const auto s = *g.index_of(u);
    const auto t = *g.index_of(v);
    std::vector<std::int64_t> prev(g.vertices.size(), -1);
    prev[s] = static_cast<std::int64_t>(s);
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && prev[t] < 0) {
        auto x = queue.front();
        queue.pop_front();
        for (auto y : g.adjacency[x])
            if (prev[y] < 0) {
                prev[y] = static_cast<std::int64_t>(x);
                queue.push_back(y);
            }
    }
    PairConnection out;
    if (prev[t] < 0)
        return out;
    out.connected = true;
    for (std::size_t x = t;; x = static_cast<std::size_t>(prev[x])) {
        out.path.push_back(g.vertices[x]);
        if (x == s)
            break;
    }
    std::reverse(out.path.begin(), out.path.end());
    return out;
}

PresentationResult linearly_presented_graph(const MonomialIdeal& ideal)
{
    PresentationResult out;
    if (ideal.is_zero())
        return out;
    const int d = require_degree(ideal);
    const auto& gens = ideal.generators();

    // Pairs sharing an lcm share a restricted graph; compute its components once.
    struct Restricted {
        std::vector<Monomial> verts;
        std::vector<std::uint32_t> label;
    };
    std::unordered_map<Monomial, Restricted, MonomialHash> by_lcm;
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const Monomial l = lcm(gens[a], gens[b]);
            if (l.degree() <= d + 1)
                continue;
            auto it = by_lcm.find(l);
            if (it == by_lcm.end()) {
                Restricted r;
                r.verts = divisors_among(gens, l);
                r.label = components(r.verts, d);
                it = by_lcm.emplace(l, std::move(r)).first;
            }
            const auto& r = it->second;
            auto pos = [&](const Monomial& m) {
                return static_cast<std::size_t>(std::lower_bound(r.verts.begin(), r.verts.end(), m) - r.verts.begin());
            };
            if (r.label[pos(gens[a])] != r.label[pos(gens[b])]) {
                out.linearly_presented = false;
                out.witness = PresentationWitness{gens[a], gens[b]};
                return out;
            }
        }
    }
    return out;
}

PresentationResult power_check(const MonomialIdeal& ideal, int k)
{
    return linearly_presented_graph(power_generators(ideal, k));
}

bool split_divides(std::span<const Monomial> u_factors, std::span<const Monomial> v_factors,
                   std::span<const std::size_t> a, std::span<const std::size_t> b)
{
    const std::size_t k = u_factors.size();
    if (k == 0 || v_factors.size() != k)
        throw std::invalid_argument("factor lists must be non-empty and of equal length");
    if (a.empty() || b.empty() || a.size() + b.size() != k)
        throw std::invalid_argument("index sets must be non-empty with sizes summing to k");
    Monomial u = u_factors[0], v = v_factors[0];
    for (std::size_t i = 1; i < k; ++i) {
        u = u * u_factors[i];
        v = v * v_factors[i];
    }
    Monomial mixed(u.vars());
    for (auto i : a) {
        if (i >= k)
            throw std::out_of_range("factor index out of range");
        mixed = mixed * u_factors[i];
    }
    for (auto j : b) {
        if (j >= k)
            throw std::out_of_range("factor index out of range");
        mixed = mixed * v_factors[j];
    }
    return divides(mixed, lcm(u, v));
}

} // namespace glindex
