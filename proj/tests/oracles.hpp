#pragma once
// Slow, direct reference computations used to cross-check the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "glindex/clutter.hpp"
#include "glindex/complex.hpp"
#include "glindex/monomial.hpp"

namespace oracle {

using glindex::Clutter;
using glindex::Face;
using glindex::Monomial;
using glindex::MonomialIdeal;
using glindex::SimplicialComplex;

using Rng = std::mt19937_64;

inline std::vector<std::uint64_t> subsets_of_size(int n, int k)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (std::popcount(m) == k)
            out.push_back(m);
    return out;
}

// Invariant factors of an integer matrix (non-zero ones only), by Smith normal form.
inline std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a)
{
    std::vector<mpz_class> out;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest non-zero absolute value in the remaining block
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == rows)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0)
                    continue;
                mpz_class q = a[r][t] / a[t][t];
                for (std::size_t c = t; c < cols; ++c)
                    a[r][c] -= q * a[t][c];
                if (a[r][t] != 0) {
                    std::swap(a[t], a[r]);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0)
                    continue;
                mpz_class q = a[t][c] / a[t][t];
                for (std::size_t r = t; r < rows; ++r)
                    a[r][c] -= q * a[r][t];
                if (a[t][c] != 0) {
                    for (auto& row : a)
                        std::swap(row[t], row[c]);
                    clean = false;
                }
            }
            if (clean) {
                // the pivot must divide the rest of the block
                for (std::size_t r = t + 1; r < rows && clean; ++r)
                    for (std::size_t c = t + 1; c < cols && clean; ++c)
                        if (a[r][c] % a[t][t] != 0) {
                            for (std::size_t k = t; k < cols; ++k)
                                a[t][k] += a[r][k];
                            clean = false;
                        }
            }
        }
        out.push_back(abs(a[t][t]));
        ++t;
    }
    return out;
}

// Rank over GF(p) (p > 0) or Q (p == 0) from invariant factors.
inline std::size_t rank_from_invariants(const std::vector<mpz_class>& inv, unsigned p)
{
    if (p == 0)
        return inv.size();
    return static_cast<std::size_t>(
        std::count_if(inv.begin(), inv.end(), [p](const mpz_class& x) { return x % p != 0; }));
}

// Reduced homology dims H̃_{-1..top} via dense integer boundary matrices and SNF.
inline std::vector<std::size_t> homology_by_smith(const SimplicialComplex& x, unsigned p)
{
    const auto f = x.f_vector();
    const std::size_t levels = f.size();
    std::vector<std::size_t> rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        auto lower = x.faces_of_size(k - 1);
        auto upper = x.faces_of_size(k);
        std::map<Face, std::size_t> row_of;
        for (std::size_t r = 0; r < lower.size(); ++r)
            row_of[lower[r]] = r;
        std::vector<std::vector<mpz_class>> m(lower.size(), std::vector<mpz_class>(upper.size(), 0));
        for (std::size_t c = 0; c < upper.size(); ++c)
            for (std::size_t drop = 0; drop < upper[c].size(); ++drop) {
                Face g = upper[c];
                g.erase(g.begin() + static_cast<long>(drop));
                m[row_of.at(g)][c] = drop % 2 == 0 ? 1 : -1;
            }
        rank[k] = rank_from_invariants(smith_invariants(std::move(m)), p);
    }
    std::vector<std::size_t> dims(levels);
    for (std::size_t k = 0; k < levels; ++k)
        dims[k] = f[k] - rank[k] - rank[k + 1];
    return dims;
}

inline SimplicialComplex random_complex(Rng& rng, std::size_t vertices, std::size_t facets, std::size_t max_size)
{
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::vector<Face> list;
    for (std::size_t i = 0; i < facets; ++i) {
        std::vector<std::uint32_t> all(vertices);
        std::iota(all.begin(), all.end(), 0U);
        std::shuffle(all.begin(), all.end(), rng);
        Face f(all.begin(), all.begin() + static_cast<long>(std::min(size(rng), vertices)));
        std::sort(f.begin(), f.end());
        list.push_back(f);
    }
    return SimplicialComplex::from_facets(vertices, list);
}

inline Clutter random_clutter(Rng& rng, std::size_t n, std::size_t d, double density)
{
    std::bernoulli_distribution keep(density);
    std::vector<std::uint64_t> masks;
    for (auto m : subsets_of_size(static_cast<int>(n), static_cast<int>(d)))
        if (keep(rng))
            masks.push_back(m);
    return Clutter(n, d, masks);
}

inline MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t n, std::size_t max_gens, int max_degree)
{
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::uniform_int_distribution<int> degree(1, max_degree);
    std::vector<Monomial> gens;
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> vars(n);
        std::iota(vars.begin(), vars.end(), 0);
        std::shuffle(vars.begin(), vars.end(), rng);
        std::vector<int> e(n, 0);
        for (int j = 0; j < std::min<int>(degree(rng), static_cast<int>(n)); ++j)
            e[vars[j]] = 1;
        gens.emplace_back(n, e);
    }
    return MonomialIdeal(n, gens);
}

inline std::uint64_t permute_mask(const std::vector<int>& p, std::uint64_t m)
{
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (m >> i & 1)
            out |= std::uint64_t{1} << p[i];
    return out;
}

// Least sorted circuit list over all n! relabelings.
inline std::vector<std::uint64_t> brute_canonical(const Clutter& c)
{
    std::vector<int> p(c.vertices());
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::uint64_t> best;
    bool first = true;
    do {
        std::vector<std::uint64_t> img;
        for (auto m : c.circuits())
            img.push_back(permute_mask(p, m));
        std::sort(img.begin(), img.end());
        if (first || img < best) {
            best = img;
            first = false;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Whether some vertex subset of host induces a copy of pattern, by trying every injection.
inline bool brute_contains_induced(const Clutter& host, const Clutter& pattern)
{
    const int n = static_cast<int>(host.vertices()), k = static_cast<int>(pattern.vertices());
    if (k > n)
        return false;
    const auto target = brute_canonical(pattern);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
        if (std::popcount(w) == k && brute_canonical(glindex::induced(host, w)) == target)
            return true;
    return false;
}

// Generators of I^k by multiplying every multiset of k generators, then discarding non-minimal ones.
inline std::set<Monomial> brute_power(const MonomialIdeal& ideal, int k)
{
    std::set<Monomial> products{Monomial(ideal.vars())};
    for (int step = 0; step < k; ++step) {
        std::set<Monomial> next;
        for (const auto& p : products)
            for (const auto& g : ideal.generators())
                next.insert(p * g);
        products = std::move(next);
    }
    std::set<Monomial> out;
    for (const auto& a : products) {
        bool minimal = true;
        for (const auto& b : products)
            if (b != a && glindex::divides(b, a))
                minimal = false;
        if (minimal)
            out.insert(a);
    }
    return out;
}

// lcm over every non-empty subset of generators, plus 1.
inline std::set<Monomial> brute_lattice(const MonomialIdeal& ideal)
{
    const auto& g = ideal.generators();
    std::set<Monomial> out{Monomial(ideal.vars())};
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.size()); ++s) {
        Monomial m(ideal.vars());
        for (std::size_t i = 0; i < g.size(); ++i)
            if (s >> i & 1)
                m = glindex::lcm(m, g[i]);
        out.insert(m);
    }
    return out;
}

} // namespace oracle
