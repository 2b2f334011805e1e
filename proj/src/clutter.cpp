#include "glindex/clutter.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace glindex {

namespace {

std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Next mask with the same popcount (Gosper's hack); 0 past the end of 64 bits.
std::uint64_t next_same_popcount(std::uint64_t x)
{
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    if (r == 0)
        return 0;
    return (((r ^ x) >> 2) / c) | r;
}

template <class F>
void for_each_subset_of_size(std::size_t n, std::size_t k, F&& f)
{
    if (k > n)
        return;
    if (k == 0) {
        f(std::uint64_t{0});
        return;
    }
    const std::uint64_t limit = low_bits(n);
    for (std::uint64_t m = low_bits(k); m != 0 && (m & ~limit) == 0; m = next_same_popcount(m))
        f(m);
}

// Packs the bits of x selected by w into the low bits, keeping their order.
std::uint64_t compress(std::uint64_t x, std::uint64_t w)
{
    std::uint64_t out = 0;
    int pos = 0;
    while (w) {
        int b = std::countr_zero(w);
        if (x >> b & 1)
            out |= std::uint64_t{1} << pos;
        ++pos;
        w &= w - 1;
    }
    return out;
}

Face mask_to_face(std::uint64_t m)
{
    Face f;
    while (m) {
        f.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return f;
}

std::uint64_t relabel(std::uint64_t m, const std::vector<int>& label)
{
    std::uint64_t out = 0;
    while (m) {
        out |= std::uint64_t{1} << label[std::countr_zero(m)];
        m &= m - 1;
    }
    return out;
}

// Iterated degree refinement; returns an isomorphism-invariant colour per vertex.
std::vector<std::uint32_t> refine_colours(const Clutter& c)
{
    const std::size_t n = c.vertices();
    std::vector<std::uint32_t> colour(n, 0);
    std::vector<std::vector<std::uint64_t>> incident(n);
    for (auto m : c.circuits())
        for (auto x = m; x; x &= x - 1)
            incident[std::countr_zero(x)].push_back(m);

    std::size_t classes = 0;
    {
        std::vector<std::size_t> deg(n);
        for (std::size_t v = 0; v < n; ++v)
            deg[v] = incident[v].size();
        std::vector<std::size_t> distinct = deg;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t v = 0; v < n; ++v)
            colour[v] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), deg[v]) -
                                                   distinct.begin());
        classes = distinct.size();
    }
    while (true) {
        std::vector<std::vector<std::uint32_t>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::vector<std::uint32_t>> around;
            around.reserve(incident[v].size());
            for (auto m : incident[v]) {
                std::vector<std::uint32_t> others;
                for (auto x = m & ~(std::uint64_t{1} << v); x; x &= x - 1)
                    others.push_back(colour[std::countr_zero(x)]);
                std::sort(others.begin(), others.end());
                around.push_back(std::move(others));
            }
            std::sort(around.begin(), around.end());
            sig[v].push_back(colour[v]);
            for (const auto& o : around) {
                sig[v].push_back(0xFFFFFFFFU);
                sig[v].insert(sig[v].end(), o.begin(), o.end());
            }
        }
        std::vector<std::vector<std::uint32_t>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t v = 0; v < n; ++v)
            colour[v] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                                   distinct.begin());
        if (distinct.size() == classes)
            break;
        classes = distinct.size();
    }
    return colour;
}

// Twin classes: v ~ w when swapping v and w maps the clutter to itself.
std::vector<int> twin_classes(const Clutter& c)
{
    const std::size_t n = c.vertices();
    std::vector<int> cls(n, -1);
    int next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (cls[v] >= 0)
            continue;
        cls[v] = next;
        for (std::size_t w = v + 1; w < n; ++w) {
            if (cls[w] >= 0)
                continue;
            const std::uint64_t bv = std::uint64_t{1} << v, bw = std::uint64_t{1} << w;
            bool twin = true;
            for (auto m : c.circuits()) {
                if (((m & bv) != 0) == ((m & bw) != 0))
                    continue;
                if (!c.contains(m ^ bv ^ bw)) {
                    twin = false;
                    break;
                }
            }
            if (twin)
                cls[w] = next;
        }
        ++next;
    }
    return cls;
}

Clutter canonical_form_uncached(const Clutter& c)
{
    const std::size_t n = c.vertices();
    if (n == 0)
        return c;
    const auto colour = refine_colours(c);
    const auto twins = twin_classes(c);

    std::map<std::uint32_t, std::vector<std::size_t>> by_colour;
    for (std::size_t v = 0; v < n; ++v)
        by_colour[colour[v]].push_back(v);

    // Per cell: the twin class of each slot (permuted as a multiset) and the
    // vertices of each twin class inside the cell.
    struct Cell {
        std::size_t offset;
        std::vector<int> slots;
        std::map<int, std::vector<std::size_t>> members;
    };
    std::vector<Cell> cells;
    std::size_t offset = 0;
    for (auto& [col, verts] : by_colour) {
        Cell cell{offset, {}, {}};
        for (auto v : verts) {
            cell.slots.push_back(twins[v]);
            cell.members[twins[v]].push_back(v);
        }
        std::sort(cell.slots.begin(), cell.slots.end());
        offset += verts.size();
        cells.push_back(std::move(cell));
    }

    std::vector<int> label(n);
    std::vector<std::uint64_t> best, current;
    bool have_best = false;
    while (true) {
        for (const auto& cell : cells) {
            std::map<int, std::size_t> used;
            for (std::size_t p = 0; p < cell.slots.size(); ++p) {
                int t = cell.slots[p];
                label[cell.members.at(t)[used[t]++]] = static_cast<int>(cell.offset + p);
            }
        }
        current.clear();
        for (auto m : c.circuits())
            current.push_back(relabel(m, label));
        std::sort(current.begin(), current.end());
        if (!have_best || current < best) {
            best = current;
            have_best = true;
        }
        bool advanced = false;
        for (std::size_t i = cells.size(); i-- > 0;) {
            if (std::next_permutation(cells[i].slots.begin(), cells[i].slots.end())) {
                advanced = true;
                break;
            }
        }
        if (!advanced)
            break;
    }
    return Clutter(n, c.uniformity(), std::move(best));
}

struct CanonicalMemo {
    std::shared_mutex mutex;
    std::unordered_map<std::string, Clutter> table;
    static constexpr std::size_t kLimit = 1U << 18;
};

CanonicalMemo& memo()
{
    static CanonicalMemo m;
    return m;
}

std::string memo_key(const Clutter& c)
{
    std::string key;
    key.reserve(2 + 8 * c.size());
    key.push_back(static_cast<char>(c.vertices()));
    key.push_back(static_cast<char>(c.uniformity()));
    for (auto m : c.circuits())
        key.append(reinterpret_cast<const char*>(&m), sizeof m);
    return key;
}

bool embed(const Clutter& host, const Clutter& pattern, const std::vector<int>& order, std::size_t depth,
           std::vector<int>& phi, std::uint64_t& used)
{
    if (depth == order.size())
        return true;
    const std::size_t d = pattern.uniformity();
    const int pv = order[depth];
    for (std::size_t hv = 0; hv < host.vertices(); ++hv) {
        if (used >> hv & 1)
            continue;
        phi[pv] = static_cast<int>(hv);
        bool ok = true;
        if (d >= 1 && depth + 1 >= d) {
            // every d-subset of the placed vertices that uses the new one
            const std::size_t k = depth;
            auto check = [&](std::uint64_t pick) {
                std::uint64_t pm = std::uint64_t{1} << pv;
                std::uint64_t hm = std::uint64_t{1} << hv;
                for (auto x = pick; x; x &= x - 1) {
                    int q = order[std::countr_zero(x)];
                    pm |= std::uint64_t{1} << q;
                    hm |= std::uint64_t{1} << phi[q];
                }
                return pattern.contains(pm) == host.contains(hm);
            };
            if (d == 1) {
                ok = check(0);
            } else {
                for_each_subset_of_size(k, d - 1, [&](std::uint64_t pick) {
                    if (ok && !check(pick))
                        ok = false;
                });
            }
        }
        if (ok) {
            used |= std::uint64_t{1} << hv;
            if (embed(host, pattern, order, depth + 1, phi, used))
                return true;
            used &= ~(std::uint64_t{1} << hv);
        }
    }
    phi[pv] = -1;
    return false;
}

} // namespace

Clutter::Clutter(std::size_t n, std::size_t d, std::vector<std::uint64_t> circuits)
    : n_(n), d_(d), circuits_(std::move(circuits))
{
    if (n > kMaxClutterVertices)
        throw UnsupportedInput("clutters support at most " + std::to_string(kMaxClutterVertices) + " vertices");
    if (d == 0)
        throw std::invalid_argument("uniformity must be positive");
    const std::uint64_t limit = low_bits(n);
    for (auto m : circuits_) {
        if (static_cast<std::size_t>(std::popcount(m)) != d)
            throw std::invalid_argument("circuit does not have exactly " + std::to_string(d) + " vertices");
        if (m & ~limit)
            throw std::invalid_argument("circuit vertex outside 1.." + std::to_string(n));
    }
    std::sort(circuits_.begin(), circuits_.end());
    circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
}

Clutter Clutter::from_lists(std::size_t n, std::size_t d, const std::vector<std::vector<int>>& circuits)
{
    std::vector<std::uint64_t> masks;
    masks.reserve(circuits.size());
    for (const auto& list : circuits) {
        std::uint64_t m = 0;
        for (int v : list) {
            if (v < 1 || static_cast<std::size_t>(v) > n)
                throw std::invalid_argument("circuit vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            if (m >> (v - 1) & 1)
                throw std::invalid_argument("circuit with repeated vertex " + std::to_string(v));
            m |= std::uint64_t{1} << (v - 1);
        }
        masks.push_back(m);
    }
    return Clutter(n, d, std::move(masks));
}

Clutter Clutter::complete(std::size_t n, std::size_t d)
{
    std::vector<std::uint64_t> masks;
    for_each_subset_of_size(n, d, [&](std::uint64_t m) { masks.push_back(m); });
    return Clutter(n, d, std::move(masks));
}

bool Clutter::contains(std::uint64_t circuit) const
{
    return std::binary_search(circuits_.begin(), circuits_.end(), circuit);
}

std::uint64_t Clutter::cover() const noexcept
{
    std::uint64_t m = 0;
    for (auto c : circuits_)
        m |= c;
    return m;
}

std::uint64_t Clutter::vertex_mask() const noexcept { return low_bits(n_); }

bool Clutter::is_spanning() const noexcept { return cover() == vertex_mask(); }

std::vector<std::vector<int>> Clutter::to_lists() const
{
    std::vector<std::vector<int>> out;
    out.reserve(circuits_.size());
    for (auto m : circuits_) {
        std::vector<int> list;
        for (auto x = m; x; x &= x - 1)
            list.push_back(std::countr_zero(x) + 1);
        out.push_back(std::move(list));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Clutter::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& list : to_lists()) {
        if (!first)
            os << ',';
        first = false;
        for (int v : list) {
            if (v <= 9)
                os << v;
            else
                os << '[' << v << ']';
        }
    }
    os << '}';
    return os.str();
}

std::uint64_t vertex_set(std::initializer_list<int> vertices)
{
    std::uint64_t m = 0;
    for (int v : vertices) {
        if (v < 1 || v > 64)
            throw std::out_of_range("vertex outside 1..64");
        m |= std::uint64_t{1} << (v - 1);
    }
    return m;
}

Clutter complement(const Clutter& c)
{
    std::vector<std::uint64_t> masks;
    for_each_subset_of_size(c.vertices(), c.uniformity(), [&](std::uint64_t m) {
        if (!c.contains(m))
            masks.push_back(m);
    });
    return Clutter(c.vertices(), c.uniformity(), std::move(masks));
}

Clutter induced(const Clutter& c, std::uint64_t w)
{
    w &= c.vertex_mask();
    std::vector<std::uint64_t> masks;
    for (auto m : c.circuits())
        if ((m & ~w) == 0)
            masks.push_back(compress(m, w));
    return Clutter(static_cast<std::size_t>(std::popcount(w)), c.uniformity(), std::move(masks));
}

MonomialIdeal edge_ideal(const Clutter& c)
{
    if (c.vertices() > kMaxVars)
        throw UnsupportedInput("edge ideals support at most " + std::to_string(kMaxVars) + " variables");
    const std::size_t n = std::max<std::size_t>(c.vertices(), 1);
    std::vector<Monomial> gens;
    gens.reserve(c.size());
    for (auto m : c.circuits())
        gens.push_back(Monomial::from_mask(n, m));
    return MonomialIdeal(n, gens);
}

SimplicialComplex clique_complex(const Clutter& c)
{
    const std::size_t n = c.vertices();
    const std::size_t d = c.uniformity();
    std::vector<Face> faces;
    for (std::size_t k = 0; k < d && k <= n; ++k)
        for_each_subset_of_size(n, k, [&](std::uint64_t m) { faces.push_back(mask_to_face(m)); });
    std::vector<std::uint64_t> level(c.circuits().begin(), c.circuits().end());
    for (auto m : level)
        faces.push_back(mask_to_face(m));
    while (!level.empty()) {
        std::unordered_set<std::uint64_t> known(level.begin(), level.end());
        std::vector<std::uint64_t> next;
        for (auto f : level) {
            const int top = 63 - std::countl_zero(f);
            for (std::size_t v = static_cast<std::size_t>(top) + 1; v < n; ++v) {
                const std::uint64_t g = f | (std::uint64_t{1} << v);
                bool clique = true;
                for (auto x = f; x && clique; x &= x - 1)
                    clique = known.count(g & ~(x & (~x + 1))) > 0;
                if (clique)
                    next.push_back(g);
            }
        }
        for (auto m : next)
            faces.push_back(mask_to_face(m));
        level = std::move(next);
    }
    return SimplicialComplex::from_faces(n, std::move(faces));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal)
{
    if (!ideal.is_squarefree())
        throw UnsupportedInput("Stanley-Reisner complexes need a square-free ideal");
    const std::size_t n = ideal.vars();
    std::vector<std::uint64_t> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(g.support_mask());
    std::vector<Face> faces;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        bool face = std::none_of(gens.begin(), gens.end(), [&](std::uint64_t g) { return (g & ~m) == 0; });
        if (face)
            faces.push_back(mask_to_face(m));
    }
    if (faces.empty())
        return SimplicialComplex::void_complex(n);
    return SimplicialComplex::from_faces(n, std::move(faces));
}

Clutter canonical_form(const Clutter& c)
{
    auto& m = memo();
    const std::string key = memo_key(c);
    {
        std::shared_lock lock(m.mutex);
        if (auto it = m.table.find(key); it != m.table.end())
            return it->second;
    }
    Clutter form = canonical_form_uncached(c);
    std::unique_lock lock(m.mutex);
    if (m.table.size() >= CanonicalMemo::kLimit)
        m.table.clear();
    m.table.emplace(key, form);
    return form;
}

bool are_isomorphic(const Clutter& a, const Clutter& b)
{
    if (a.vertices() != b.vertices() || a.uniformity() != b.uniformity() || a.size() != b.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<int>> find_induced_embedding(const Clutter& host, const Clutter& pattern)
{
    if (host.uniformity() != pattern.uniformity())
        throw std::invalid_argument("host and pattern differ in uniformity");
    if (pattern.vertices() > host.vertices() || pattern.size() > host.size())
        return std::nullopt;
    // Place high-degree pattern vertices first so mismatches surface early.
    std::vector<int> order(pattern.vertices());
    std::vector<std::size_t> deg(pattern.vertices(), 0);
    for (auto m : pattern.circuits())
        for (auto x = m; x; x &= x - 1)
            ++deg[std::countr_zero(x)];
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

    std::vector<int> phi(pattern.vertices(), -1);
    std::uint64_t used = 0;
    if (embed(host, pattern, order, 0, phi, used))
        return phi;
    return std::nullopt;
}

std::optional<FamilyMatch> find_family_member(const Clutter& c, std::span<const Clutter> family)
{
    for (std::size_t i = 0; i < family.size(); ++i)
        if (auto phi = find_induced_embedding(c, family[i]))
            return FamilyMatch{i, std::move(*phi)};
    return std::nullopt;
}

namespace catalog {

namespace {

Clutter triples(std::size_t n, std::initializer_list<int> codes)
{
    std::vector<std::vector<int>> lists;
    for (int code : codes)
        lists.push_back({code / 100, code / 10 % 10, code % 10});
    return Clutter::from_lists(n, 3, lists);
}

} // namespace

Clutter bipyramid() { return triples(5, {123, 124, 134, 235, 345, 245}); }
Clutter bipyramid_plus_one() { return triples(5, {123, 124, 134, 235, 345, 245, 125}); }
Clutter bipyramid_plus_two() { return triples(5, {123, 124, 134, 235, 345, 245, 125, 135}); }

Clutter two_triangles_removed()
{
    std::vector<std::uint64_t> masks;
    const Clutter all = Clutter::complete(6, 3);
    for (auto m : all.circuits())
        if (m != vertex_set({1, 2, 3}) && m != vertex_set({4, 5, 6}))
            masks.push_back(m);
    return Clutter(6, 3, std::move(masks));
}

Clutter sturmfels() { return triples(6, {123, 246, 145, 356, 134, 136, 146, 346}); }
Clutter d6_7() { return triples(7, {123, 124, 127, 145, 147, 247, 267, 347}); }
Clutter d48_7() { return triples(7, {123, 124, 136, 145, 146, 147, 167, 246, 267, 346, 347}); }
Clutter d1_8() { return triples(8, {123, 124, 125, 145, 147, 246, 248, 258, 456}); }

MonomialIdeal conca()
{
    std::vector<Monomial> gens{Monomial::of({2, 1, 0, 0}), Monomial::of({2, 0, 1, 0}), Monomial::of({1, 0, 2, 0}),
                               Monomial::of({0, 1, 2, 0}), Monomial::of({1, 0, 1, 1})};
    return MonomialIdeal(4, gens);
}

std::vector<Clutter> family_c()
{
    return {bipyramid(), bipyramid_plus_one(), bipyramid_plus_two(), two_triangles_removed()};
}

std::vector<std::string> clutter_names() { return {"B", "B1", "B2", "Bprime", "D1_6", "D6_7", "D48_7", "D1_8"}; }

std::optional<Clutter> lookup(const std::string& name)
{
    if (name == "B")
        return bipyramid();
    if (name == "B1")
        return bipyramid_plus_one();
    if (name == "B2")
        return bipyramid_plus_two();
    if (name == "Bprime")
        return two_triangles_removed();
    if (name == "D1_6")
        return sturmfels();
    if (name == "D6_7")
        return d6_7();
    if (name == "D48_7")
        return d48_7();
    if (name == "D1_8")
        return d1_8();
    return std::nullopt;
}

} // namespace catalog

} // namespace glindex
