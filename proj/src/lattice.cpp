#include "glindex/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace glindex {

namespace {

bool lattice_less(const Monomial& a, const Monomial& b)
{
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
}

} // namespace

LcmLattice::LcmLattice(const MonomialIdeal& ideal)
{
    if (ideal.is_zero())
        throw std::invalid_argument("the lcm-lattice of the zero ideal is not defined");
    atoms_ = ideal.generators();
    std::unordered_set<Monomial, MonomialHash> seen(atoms_.begin(), atoms_.end());
    std::vector<Monomial> frontier = atoms_;
    // Every lcm of a generator subset is reached by repeatedly joining with single generators.
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& e : frontier) {
            for (const auto& g : atoms_) {
                Monomial j = lcm(e, g);
                if (seen.insert(j).second)
                    next.push_back(j);
            }
        }
        frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
    elements_.push_back(Monomial(ideal.vars()));
    std::sort(elements_.begin(), elements_.end(), lattice_less);
}

bool LcmLattice::contains(const Monomial& u) const
{
    return std::binary_search(elements_.begin(), elements_.end(), u, lattice_less);
}

std::vector<Monomial> LcmLattice::open_interval(const Monomial& u) const
{
    if (u.vars() != bottom().vars())
        throw DimensionError("monomial and lattice differ in variable count");
    if (!contains(u))
        throw std::invalid_argument(u.to_string() + " is not in the lcm-lattice");
    std::vector<Monomial> out;
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        if (e.degree() >= u.degree())
            break;
        if (divides_unchecked(e, u))
            out.push_back(e);
    }
    return out;
}

std::vector<Monomial> LcmLattice::atoms_below(const Monomial& u) const
{
    std::vector<Monomial> out;
    for (const auto& a : atoms_)
        if (divides(a, u))
            out.push_back(a);
    return out;
}

std::size_t LcmLattice::chain_length_to(const Monomial& u) const
{
    auto below = open_interval(u);
    // longest chain ending at each element, elements already in a linear extension
    std::vector<std::size_t> len(below.size(), 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i < below.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (len[j] + 1 > len[i] && divides_unchecked(below[j], below[i]) && below[j] != below[i])
                len[i] = len[j] + 1;
        best = std::max(best, len[i]);
    }
    return best + 1;
}

SimplicialComplex interval_order_complex(const LcmLattice& lattice, const Monomial& u,
                                         std::optional<std::size_t> max_face_size)
{
    auto elems = lattice.open_interval(u);
    return order_complex(elems, max_face_size);
}

std::size_t interval_components(std::span<const Monomial> atoms, const Monomial& u)
{
    std::vector<const Monomial*> below;
    for (const auto& a : atoms)
        if (divides(a, u))
            below.push_back(&a);
    if (below.size() <= 1)
        return below.empty() || *below.front() == u ? 0 : 1;
    if (std::any_of(below.begin(), below.end(), [&](const Monomial* a) { return *a == u; }))
        return 0;
    std::vector<std::size_t> parent(below.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t sets = below.size();
    for (std::size_t i = 0; i < below.size(); ++i)
        for (std::size_t j = i + 1; j < below.size(); ++j) {
            auto a = find(i), b = find(j);
            if (a == b)
                continue;
            if (lcm(*below[i], *below[j]) != u) {
                parent[a] = b;
                --sets;
            }
        }
    return sets;
}

std::shared_ptr<const LcmLattice> LatticeCache::get(const MonomialIdeal& ideal)
{
    const std::string key = ideal.serialize();
    {
        std::lock_guard lock(mutex_);
        if (auto it = table_.find(key); it != table_.end())
            return it->second;
    }
    auto built = std::make_shared<const LcmLattice>(ideal);
    std::lock_guard lock(mutex_);
    if (table_.size() >= kLimit)
        table_.clear();
    return table_.emplace(key, std::move(built)).first->second;
}

void LatticeCache::clear()
{
    std::lock_guard lock(mutex_);
    table_.clear();
}

std::size_t LatticeCache::size() const
{
    std::lock_guard lock(mutex_);
    return table_.size();
}

LatticeCache& lattice_cache()
{
    static LatticeCache cache;
    return cache;
}

} // namespace glindex
