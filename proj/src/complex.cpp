#include "glindex/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glindex {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    std::size_t sets;

    explicit UnionFind(std::size_t n) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0U); }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --sets;
        }
    }
};

void add_subsets(const Face& facet, std::vector<Face>& out)
{
    const std::size_t k = facet.size();
    if (k > 30)
        throw std::invalid_argument("facet too large to close downward");
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
        Face f;
        for (std::size_t i = 0; i < k; ++i)
            if (m >> i & 1)
                f.push_back(facet[i]);
        out.push_back(std::move(f));
    }
}

} // namespace

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertices)
{
    SimplicialComplex x;
    x.vertices_ = vertices;
    return x;
}

SimplicialComplex SimplicialComplex::irrelevant(std::size_t vertices)
{
    SimplicialComplex x;
    x.vertices_ = vertices;
    x.by_size_.push_back({Face{}});
    return x;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertices, std::span<const Face> facets)
{
    std::vector<Face> faces;
    for (Face f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("facet with repeated vertex");
        if (!f.empty() && f.back() >= vertices)
            throw std::invalid_argument("facet vertex out of range");
        add_subsets(f, faces);
    }
    SimplicialComplex x;
    x.vertices_ = vertices;
    for (auto& f : faces) {
        if (x.by_size_.size() <= f.size())
            x.by_size_.resize(f.size() + 1);
        x.by_size_[f.size()].push_back(std::move(f));
    }
    x.normalize();
    return x;
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertices, std::vector<Face> faces)
{
    SimplicialComplex x;
    x.vertices_ = vertices;
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("face with repeated vertex");
        if (!f.empty() && f.back() >= vertices)
            throw std::invalid_argument("face vertex out of range");
        if (x.by_size_.size() <= f.size())
            x.by_size_.resize(f.size() + 1);
        x.by_size_[f.size()].push_back(std::move(f));
    }
    x.normalize();
    if (!x.is_downward_closed())
        throw std::invalid_argument("face set is not downward closed");
    return x;
}

void SimplicialComplex::normalize()
{
    for (auto& bucket : by_size_) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }
    while (!by_size_.empty() && by_size_.back().empty())
        by_size_.pop_back();
}

int SimplicialComplex::dimension() const
{
    if (is_void())
        throw std::invalid_argument("the void complex has no dimension");
    return static_cast<int>(by_size_.size()) - 2;
}

std::span<const Face> SimplicialComplex::faces_of_size(std::size_t k) const
{
    if (k >= by_size_.size())
        return {};
    return by_size_[k];
}

std::size_t SimplicialComplex::face_count() const
{
    std::size_t c = 0;
    for (const auto& b : by_size_)
        c += b.size();
    return c;
}

bool SimplicialComplex::contains(const Face& f) const
{
    if (f.size() >= by_size_.size())
        return false;
    return std::binary_search(by_size_[f.size()].begin(), by_size_[f.size()].end(), f);
}

SimplicialComplex SimplicialComplex::induced(std::span<const std::uint32_t> w) const
{
    std::vector<bool> keep(vertices_, false);
    for (auto v : w)
        if (v < vertices_)
            keep[v] = true;
    SimplicialComplex x;
    x.vertices_ = vertices_;
    for (const auto& bucket : by_size_) {
        std::vector<Face> kept;
        for (const auto& f : bucket)
            if (std::all_of(f.begin(), f.end(), [&](auto v) { return keep[v]; }))
                kept.push_back(f);
        x.by_size_.push_back(std::move(kept));
    }
    x.normalize();
    return x;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> out;
    for (const auto& b : by_size_)
        out.push_back(b.size());
    return out;
}

bool SimplicialComplex::is_downward_closed() const
{
    if (is_void())
        return true;
    if (by_size_[0].size() != 1)
        return false;
    for (std::size_t k = 1; k < by_size_.size(); ++k) {
        for (const auto& f : by_size_[k]) {
            Face g(f.size() - 1);
            for (std::size_t skip = 0; skip < f.size(); ++skip) {
                std::size_t t = 0;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != skip)
                        g[t++] = f[i];
                if (!std::binary_search(by_size_[k - 1].begin(), by_size_[k - 1].end(), g))
                    return false;
            }
        }
    }
    return true;
}

SparseMatrix boundary_matrix(const SimplicialComplex& x, std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("boundary of the empty face is not defined");
    auto cols = x.faces_of_size(k);
    auto rows = x.faces_of_size(k - 1);
    SparseMatrix m;
    m.rows = rows.size();
    m.columns.reserve(cols.size());
    Face g(k - 1);
    for (const auto& f : cols) {
        SparseColumn col;
        col.reserve(k);
        for (std::size_t skip = 0; skip < k; ++skip) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (i != skip)
                    g[t++] = f[i];
            auto it = std::lower_bound(rows.begin(), rows.end(), g);
            if (it == rows.end() || *it != g)
                throw std::logic_error("complex is not downward closed");
            col.emplace_back(static_cast<std::uint32_t>(it - rows.begin()), (skip % 2 == 0) ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
        m.columns.push_back(std::move(col));
    }
    return m;
}

std::size_t component_count(const SimplicialComplex& x)
{
    auto verts = x.faces_of_size(1);
    if (verts.empty())
        return 0;
    std::vector<std::uint32_t> ids;
    ids.reserve(verts.size());
    for (const auto& v : verts)
        ids.push_back(v[0]);
    UnionFind uf(verts.size());
    auto index_of = [&](std::uint32_t v) {
        return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    for (const auto& e : x.faces_of_size(2))
        uf.unite(index_of(e[0]), index_of(e[1]));
    return uf.sets;
}

bool is_connected(const SimplicialComplex& x)
{
    if (x.is_void())
        throw std::invalid_argument("connectivity of the void complex is undefined");
    return component_count(x) <= 1;
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& x, Field f, std::optional<int> max_degree)
{
    if (x.is_void())
        return {};
    int top = x.dimension();
    if (max_degree)
        top = std::min(top, *max_degree);
    if (top < -1)
        return {};
    // rank of the boundary from size-k faces, k = 0 .. top + 2
    std::vector<std::size_t> rk(static_cast<std::size_t>(top) + 3, 0);
    for (std::size_t k = 1; k < rk.size(); ++k) {
        std::size_t nk = x.faces_of_size(k).size();
        if (nk == 0)
            break;
        if (k == 1)
            rk[k] = 1;
        else if (k == 2)
            rk[k] = x.faces_of_size(1).size() - component_count(x);
        else
            rk[k] = rank(boundary_matrix(x, k), f);
    }
    std::vector<std::size_t> out;
    for (int i = -1; i <= top; ++i) {
        std::size_t k = static_cast<std::size_t>(i + 1);
        std::size_t nk = x.faces_of_size(k).size();
        out.push_back(nk - rk[k] - rk[k + 1]);
    }
    return out;
}

SimplicialComplex order_complex(std::span<const Monomial> elements, std::optional<std::size_t> max_face_size)
{
    const std::size_t n = elements.size();
    std::vector<std::vector<std::uint32_t>> above(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && elements[i] != elements[j] && divides(elements[i], elements[j]))
                above[i].push_back(static_cast<std::uint32_t>(j));

    const std::size_t cap = max_face_size.value_or(n + 1);
    std::vector<std::vector<Face>> buckets(1, std::vector<Face>{Face{}});
    Face chain;
    auto extend = [&](auto&& self, std::uint32_t top) -> void {
        Face sorted = chain;
        std::sort(sorted.begin(), sorted.end());
        if (buckets.size() <= sorted.size())
            buckets.resize(sorted.size() + 1);
        buckets[sorted.size()].push_back(std::move(sorted));
        if (chain.size() >= cap)
            return;
        for (auto j : above[top]) {
            chain.push_back(j);
            self(self, j);
            chain.pop_back();
        }
    };
    if (cap >= 1) {
        for (std::uint32_t i = 0; i < n; ++i) {
            chain.assign(1, i);
            extend(extend, i);
        }
    }
    std::vector<Face> all;
    for (auto& b : buckets)
        for (auto& f : b)
            all.push_back(std::move(f));
    // Chains are downward closed by construction; from_faces re-validates.
    return SimplicialComplex::from_faces(n, std::move(all));
}

} // namespace glindex
