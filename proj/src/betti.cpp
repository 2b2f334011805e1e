#include "glindex/betti.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "glindex/lattice.hpp"

namespace glindex {

namespace {

int require_degree(const MonomialIdeal& ideal)
{
    if (ideal.is_zero())
        throw UnsupportedInput("the index is defined here only for non-zero ideals");
    auto d = ideal.generating_degree();
    if (!d)
        throw UnsupportedInput("the index is defined here only for ideals generated in one degree");
    return *d;
}

// Distinct lcms of pairs of distinct generators with the given total degree.
std::vector<Monomial> pair_lcms_of_degree(const MonomialIdeal& ideal, int j)
{
    std::unordered_set<Monomial, MonomialHash> seen;
    const auto& g = ideal.generators();
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            Monomial m = lcm(g[a], g[b]);
            if (m.degree() == j)
                seen.insert(m);
        }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t homology_at(const SimplicialComplex& x, int degree, Field f)
{
    auto dims = reduced_homology_dims(x, f, degree);
    const auto idx = static_cast<std::size_t>(degree + 1);
    return idx < dims.size() ? dims[idx] : 0;
}

} // namespace

IndexValue IndexValue::of(int value)
{
    if (value < 1)
        throw std::invalid_argument("index values are positive");
    IndexValue v;
    v.value_ = value;
    return v;
}

int IndexValue::value() const
{
    if (!value_)
        throw std::logic_error("infinite index has no integer value");
    return *value_;
}

std::string IndexValue::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

BettiTable::BettiTable(std::size_t vars, std::vector<BettiEntry> entries) : vars_(vars), entries_(std::move(entries))
{
    std::erase_if(entries_, [](const BettiEntry& e) { return e.rank == 0; });
    std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
        return a.i != b.i ? a.i < b.i : a.degree < b.degree;
    });
}

GradedBetti BettiTable::graded() const
{
    GradedBetti out;
    for (const auto& e : entries_)
        out[{e.i, e.degree.degree()}] += e.rank;
    return out;
}

std::size_t BettiTable::at(int i, int j) const
{
    std::size_t total = 0;
    for (const auto& e : entries_)
        if (e.i == i && e.degree.degree() == j)
            total += e.rank;
    return total;
}

std::size_t beta_multi(const MonomialIdeal& ideal, int i, const Monomial& u, Field f)
{
    if (i < 0 || ideal.is_zero() || u.is_one())
        return 0;
    if (u.vars() != ideal.vars())
        throw DimensionError("multidegree and ideal differ in variable count");
    if (i == 0)
        return ideal.is_generator(u) ? 1 : 0;
    if (i == 1) {
        // u must be a join of generators to lie in the lattice
        std::vector<Monomial> below;
        for (const auto& g : ideal.generators())
            if (divides_unchecked(g, u))
                below.push_back(g);
        if (below.empty())
            return 0;
        Monomial join = below.front();
        for (const auto& g : below)
            join = lcm(join, g);
        if (join != u)
            return 0;
        std::size_t c = interval_components(below, u);
        return c == 0 ? 0 : c - 1;
    }
    auto lattice = lattice_cache().get(ideal);
    if (!lattice->contains(u))
        return 0;
    auto x = interval_order_complex(*lattice, u, static_cast<std::size_t>(i + 1));
    return homology_at(x, i - 1, f);
}

std::size_t beta_graded(const MonomialIdeal& ideal, int i, int j, Field f)
{
    if (i < 0 || ideal.is_zero())
        return 0;
    if (i == 0)
        return static_cast<std::size_t>(std::count_if(ideal.generators().begin(), ideal.generators().end(),
                                                      [&](const Monomial& g) { return g.degree() == j; }));
    if (i == 1) {
        // a disconnected interval (1,u) forces u = lcm of two atoms from different components
        std::size_t total = 0;
        for (const auto& u : pair_lcms_of_degree(ideal, j)) {
            std::size_t c = interval_components(ideal.generators(), u);
            total += c == 0 ? 0 : c - 1;
        }
        return total;
    }
    auto lattice = lattice_cache().get(ideal);
    std::size_t total = 0;
    for (const auto& u : lattice->elements())
        if (u.degree() == j)
            total += beta_multi(ideal, i, u, f);
    return total;
}

BettiTable betti_table(const MonomialIdeal& ideal, Field f)
{
    if (ideal.is_zero())
        return BettiTable(ideal.vars(), {});
    auto lattice = lattice_cache().get(ideal);
    std::vector<BettiEntry> entries;
    for (std::size_t k = 1; k < lattice->size(); ++k) {
        const auto& u = lattice->elements()[k];
        auto x = interval_order_complex(*lattice, u);
        auto dims = reduced_homology_dims(x, f);
        for (std::size_t t = 0; t < dims.size(); ++t)
            if (dims[t] != 0)
                entries.push_back(BettiEntry{static_cast<int>(t), u, dims[t]});
    }
    return BettiTable(ideal.vars(), std::move(entries));
}

GradedBetti hochster_table(const SimplicialComplex& delta, Field f)
{
    GradedBetti out;
    const std::size_t n = delta.vertex_count();
    if (n > 20)
        throw UnsupportedInput("Hochster's formula is evaluated here for at most 20 vertices");
    if (delta.is_void())
        return out;
    std::vector<std::uint32_t> w;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        w.clear();
        for (std::size_t v = 0; v < n; ++v)
            if (m >> v & 1)
                w.push_back(static_cast<std::uint32_t>(v));
        const int j = static_cast<int>(w.size());
        auto dims = reduced_homology_dims(delta.induced(w), f);
        for (std::size_t t = 0; t < dims.size(); ++t) {
            const int k = static_cast<int>(t) - 1;
            const int i = j - k - 2;
            if (dims[t] != 0 && i >= 0)
                out[{i, j}] += dims[t];
        }
    }
    return out;
}

std::size_t hochster_beta(const SimplicialComplex& delta, int i, int j, Field f)
{
    const std::size_t n = delta.vertex_count();
    if (i < 0 || j < 1 || static_cast<std::size_t>(j) > n || delta.is_void())
        return 0;
    const int k = j - i - 2;
    std::size_t total = 0;
    std::vector<std::uint32_t> w;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        if (std::popcount(m) != j)
            continue;
        w.clear();
        for (std::size_t v = 0; v < n; ++v)
            if (m >> v & 1)
                w.push_back(static_cast<std::uint32_t>(v));
        total += homology_at(delta.induced(w), k, f);
    }
    return total;
}

std::size_t hochster_beta(const MonomialIdeal& ideal, int i, int j, Field f)
{
    if (!ideal.is_squarefree())
        throw UnsupportedInput("Hochster's formula needs a square-free ideal");
    return hochster_beta(stanley_reisner_complex(ideal), i, j, f);
}

std::size_t hochster_beta(const Clutter& c, int i, int j, Field f)
{
    return hochster_beta(clique_complex(complement(c)), i, j, f);
}

bool hochster_linear(const SimplicialComplex& delta, std::size_t d, Field f)
{
    for (const auto& [key, rank] : hochster_table(delta, f))
        if (rank != 0 && key.second - key.first != static_cast<int>(d))
            return false;
    return true;
}

IndexValue gl_index(const MonomialIdeal& ideal, Field f)
{
    const int d = require_degree(ideal);
    auto lattice = lattice_cache().get(ideal);
    const auto& elems = lattice->elements();

    // First step: a disconnected interval above degree d + 1.
    for (const auto& u : elems)
        if (u.degree() > d + 1 && interval_components(lattice->atoms(), u) > 1)
            return IndexValue::of(1);

    // Later steps: β_{i,u} with i >= 2 and deg u - i > d. The interval below u
    // has no chains longer than it has elements, so only finitely many
    // homological degrees can be non-zero and the scan is exhaustive.
    int best = 0;
    for (const auto& u : elems) {
        const int top_i = u.degree() - d - 1;
        if (top_i < 2)
            continue;
        const int limit_i = best ? std::min(top_i, best - 1) : top_i;
        if (limit_i < 2)
            continue;
        auto x = interval_order_complex(*lattice, u, static_cast<std::size_t>(limit_i + 1));
        auto dims = reduced_homology_dims(x, f, limit_i - 1);
        for (int i = 2; i <= limit_i; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            if (idx < dims.size() && dims[idx] != 0) {
                best = i;
                break;
            }
        }
    }
    return best ? IndexValue::of(best) : IndexValue::infinity();
}

bool is_linearly_presented(const MonomialIdeal& ideal, Field f)
{
    const int d = require_degree(ideal);
    for (int j = d + 2; j <= 2 * d; ++j)
        if (beta_graded(ideal, 1, j, f) != 0)
            return false;
    return true;
}

bool has_linear_resolution(const MonomialIdeal& ideal, Field f) { return gl_index(ideal, f).is_infinite(); }

} // namespace glindex
