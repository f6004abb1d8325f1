#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace fixtures
{

using mdm::MeshFile;
using mdm::Point3;
using mdm::SimplexId;
using mdm::VertexId;

Square square()
{
    Square sq;
    auto& K = sq.complex;
    for (VertexId v = 0; v < 4; ++v)
        K.insert({v});
    K.insert({0, 1}); // AC
    K.insert({1, 2}); // AB
    K.insert({2, 3}); // BD
    K.insert({0, 3}); // CD
    K.insert({1, 3}); // AD
    K.insert({0, 1, 3});
    K.insert({1, 2, 3});
    // A top-left, B top-right, C bottom-left, D bottom-right.
    sq.coords = {Point3{0, 0, 0}, Point3{0, 1, 0}, Point3{1, 1, 0}, Point3{1, 0, 0}};
    sq.map = {2, {0, 0, /*A*/ 1, 2, /*B*/ 0, 0, /*D*/ 2, 1}};
    return sq;
}

MeshFile square_mesh()
{
    auto sq = square();
    return {sq.coords, {{0, 1, 3}, {1, 2, 3}}};
}

double exact_cos(long i, long n)
{
    long a = ((i % n) + n) % n;
    a = std::min(a, n - a);
    if (4 * a == n)
        return 0.0;
    if (n % 2 == 0 && 4 * a > n)
        return -std::cos(2.0 * std::numbers::pi * static_cast<double>(n / 2 - a) / static_cast<double>(n));
    return std::cos(2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(n));
}

double exact_sin(long i, long n)
{
    if (n % 4 == 0)
        return exact_cos(i - n / 4, n);
    return std::sin(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
}

Circle circle()
{
    Circle c;
    for (VertexId v = 0; v < 12; ++v)
        c.complex.insert({v});
    for (VertexId v = 0; v < 12; ++v)
    {
        VertexId w = (v + 1) % 12;
        c.complex.insert({std::min(v, w), std::max(v, w)});
    }
    c.map.k = 2;
    for (long i = 0; i < 12; ++i)
    {
        double x = exact_cos(i, 12), y = exact_sin(i, 12);
        c.coords.push_back({x, y, 0.0});
        c.map.values.push_back(x);
        c.map.values.push_back(y);
    }
    return c;
}

SimplexId Circle::vertex(int degrees) const
{
    return *complex.vertex_simplex(static_cast<VertexId>((degrees / 30) % 12));
}

SimplexId Circle::edge(int from_degrees, int to_degrees) const
{
    VertexId a = static_cast<VertexId>((from_degrees / 30) % 12);
    VertexId b = static_cast<VertexId>((to_degrees / 30) % 12);
    auto id = complex.find({std::min(a, b), std::max(a, b)});
    if (!id)
        throw std::logic_error("no such circle edge");
    return *id;
}

MeshFile triangle_mesh()
{
    return {{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}}, {{0, 1, 2}}};
}

MeshFile octahedron()
{
    MeshFile m;
    m.vertices = {Point3{1, 0, 0}, Point3{-1, 0, 0}, Point3{0, 1, 0},
                  Point3{0, -1, 0}, Point3{0, 0, 1}, Point3{0, 0, -1}};
    for (VertexId x : {0u, 1u})
        for (VertexId y : {2u, 3u})
            for (VertexId z : {4u, 5u})
                m.faces.push_back({x, y, z});
    return m;
}

std::vector<Point3> helix_coords(std::size_t vertices)
{
    std::vector<Point3> out;
    for (std::size_t i = 0; i < vertices; ++i)
    {
        double t = static_cast<double>(i);
        out.push_back({std::cos(0.9 * t), std::sin(0.9 * t), 0.1 * t});
    }
    return out;
}

MeshFile torus7()
{
    MeshFile m;
    m.vertices = helix_coords(7);
    for (VertexId i = 0; i < 7; ++i)
    {
        m.faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        m.faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return m;
}

MeshFile projective_plane6()
{
    static const int faces[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                     {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
    MeshFile m;
    m.vertices = helix_coords(6);
    for (const auto& f : faces)
        m.faces.push_back({static_cast<VertexId>(f[0] - 1), static_cast<VertexId>(f[1] - 1),
                           static_cast<VertexId>(f[2] - 1)});
    return m;
}

namespace
{

MeshFile grid_surface(int n, int m, bool flip)
{
    // (i, j) with j wrapping through a reflection i -> -i when flip is set.
    auto id = [&](int i, int j) {
        while (j >= m)
        {
            j -= m;
            if (flip)
                i = -i;
        }
        i = ((i % n) + n) % n;
        return static_cast<VertexId>(i * m + j);
    };
    MeshFile mesh;
    mesh.vertices.resize(static_cast<std::size_t>(n * m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            mesh.vertices[static_cast<std::size_t>(i * m + j)] = {static_cast<double>(i), static_cast<double>(j),
                                                                  0.0};
    for (int i = 0; i < n; ++i)
    {
        for (int j = 0; j < m; ++j)
        {
            mesh.faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            mesh.faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    return mesh;
}

} // namespace

MeshFile klein_bottle(int n, int m)
{
    return grid_surface(n, m, true);
}

MeshFile grid_torus(int n, int m)
{
    return grid_surface(n, m, false);
}

MeshFile dunce_hat()
{
    // One triangle P0 P1 P2 with its sides glued along the word a a a^-1,
    // barycentrically subdivided twice so the gluing stays simplicial.
    using P = std::array<long, 2>;
    constexpr long S = 144;
    std::vector<std::array<P, 3>> tris{{P{0, 0}, P{S, 0}, P{0, S}}};
    for (int level = 0; level < 2; ++level)
    {
        std::vector<std::array<P, 3>> next;
        for (const auto& t : tris)
        {
            auto mid = [](P a, P b) { return P{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2}; };
            P b{(t[0][0] + t[1][0] + t[2][0]) / 3, (t[0][1] + t[1][1] + t[2][1]) / 3};
            P m01 = mid(t[0], t[1]), m12 = mid(t[1], t[2]), m20 = mid(t[2], t[0]);
            next.push_back({t[0], m01, b});
            next.push_back({m01, t[1], b});
            next.push_back({t[1], m12, b});
            next.push_back({m12, t[2], b});
            next.push_back({t[2], m20, b});
            next.push_back({m20, t[0], b});
        }
        tris.swap(next);
    }

    // Boundary points get the label of their parameter along a (quarters);
    // both ends of a are the single corner vertex 0.
    MeshFile mesh;
    std::map<P, VertexId> interior;
    std::map<long, VertexId> boundary;
    auto label = [&](P p) -> VertexId {
        long t = -1;
        if (p[1] == 0)
            t = p[0];
        else if (p[0] + p[1] == S)
            t = p[1];
        else if (p[0] == 0)
            t = p[1];
        if (t >= 0)
        {
            if (t % (S / 4) != 0)
                throw std::logic_error("boundary point off the subdivision");
            long q = (t / (S / 4)) % 4;
            auto [it, fresh] = boundary.emplace(q, static_cast<VertexId>(mesh.vertices.size()));
            if (fresh)
                mesh.vertices.push_back({static_cast<double>(p[0]) / S, static_cast<double>(p[1]) / S, 0.0});
            return it->second;
        }
        auto [it, fresh] = interior.emplace(p, static_cast<VertexId>(mesh.vertices.size()));
        if (fresh)
            mesh.vertices.push_back({static_cast<double>(p[0]) / S, static_cast<double>(p[1]) / S, 0.0});
        return it->second;
    };
    for (const auto& t : tris)
        mesh.faces.push_back({label(t[0]), label(t[1]), label(t[2])});
    return mesh;
}

MeshFile parametric_torus(int n_major, int n_minor)
{
    constexpr double R = 2.0, r = 1.0;
    MeshFile mesh;
    for (int i = 0; i < n_major; ++i)
    {
        for (int j = 0; j < n_minor; ++j)
        {
            double ring = R + r * exact_cos(j, n_minor);
            mesh.vertices.push_back({ring * exact_cos(i, n_major), ring * exact_sin(i, n_major),
                                     r * exact_sin(j, n_minor)});
        }
    }
    auto id = [&](int i, int j) {
        return static_cast<VertexId>(((i % n_major) * n_minor) + (j % n_minor));
    };
    for (int i = 0; i < n_major; ++i)
    {
        for (int j = 0; j < n_minor; ++j)
        {
            mesh.faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            mesh.faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    return mesh;
}

MeshFile sphere(int level)
{
    using Key = std::array<long, 3>;
    std::map<Key, VertexId> ids;
    MeshFile mesh;
    auto vertex = [&](Key k) {
        auto [it, fresh] = ids.emplace(k, static_cast<VertexId>(mesh.vertices.size()));
        if (fresh)
        {
            double x = static_cast<double>(k[0]), y = static_cast<double>(k[1]), z = static_cast<double>(k[2]);
            double norm = std::sqrt(x * x + y * y + z * z);
            mesh.vertices.push_back({x / norm, y / norm, z / norm});
        }
        return it->second;
    };
    const long L = level;
    for (long sx : {1L, -1L})
    {
        for (long sy : {1L, -1L})
        {
            for (long sz : {1L, -1L})
            {
                // Face spanned by sx*e_x, sy*e_y, sz*e_z; point (a, b, c) with a + b + c = L.
                auto key = [&](long a, long b) { return Key{sx * a, sy * b, sz * (L - a - b)}; };
                for (long a = 0; a < L; ++a)
                {
                    for (long b = 0; a + b < L; ++b)
                    {
                        mesh.faces.push_back({vertex(key(a, b)), vertex(key(a + 1, b)), vertex(key(a, b + 1))});
                        if (a + b + 1 < L)
                            mesh.faces.push_back(
                                {vertex(key(a + 1, b)), vertex(key(a + 1, b + 1)), vertex(key(a, b + 1))});
                    }
                }
            }
        }
    }
    return mesh;
}

mdm::SimplicialComplex random_complex(std::mt19937_64& rng, int vertices, int triangles, int edges)
{
    mdm::SimplicialComplex K;
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(vertices - 1));
    for (VertexId v = 0; v < static_cast<VertexId>(vertices); ++v)
        K.insert({v});
    for (int t = 0; t < triangles; ++t)
    {
        std::array<VertexId, 3> f{pick(rng), pick(rng), pick(rng)};
        std::sort(f.begin(), f.end());
        if (f[0] == f[1] || f[1] == f[2])
            continue;
        K.insert(std::span<const VertexId>(f));
    }
    for (int e = 0; e < edges; ++e)
    {
        VertexId a = pick(rng), b = pick(rng);
        if (a != b)
            K.insert({std::min(a, b), std::max(a, b)});
    }
    return K;
}

mdm::VertexMap random_vertex_map(std::mt19937_64& rng, std::size_t vertices, std::size_t k, int spread)
{
    std::uniform_int_distribution<int> value(0, spread);
    mdm::VertexMap map;
    map.k = k;
    for (std::size_t i = 0; i < vertices * k; ++i)
        map.values.push_back(static_cast<double>(value(rng)) * 0.5);
    return map;
}

mdm::IndexingMap random_indexing_map(std::mt19937_64& rng, const mdm::SimplicialComplex& K)
{
    std::vector<std::uint32_t> waiting(K.size());
    std::vector<SimplexId> ready;
    for (SimplexId s = 0; s < K.size(); ++s)
    {
        waiting[s] = static_cast<std::uint32_t>(K.facets(s).size());
        if (waiting[s] == 0)
            ready.push_back(s);
    }
    std::vector<double> value(K.size());
    for (std::size_t rank = 0; !ready.empty(); ++rank)
    {
        std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
        std::size_t i = pick(rng);
        SimplexId s = ready[i];
        ready[i] = ready.back();
        ready.pop_back();
        value[s] = static_cast<double>(rank);
        for (SimplexId c : K.cofacets(s))
        {
            if (--waiting[c] == 0)
                ready.push_back(c);
        }
    }
    return mdm::IndexingMap(std::move(value));
}

RandomCase random_case(std::mt19937_64& rng, std::size_t max_simplices)
{
    std::uniform_int_distribution<int> vertices(1, 40), triangles(0, 90), edges(0, 20), arity(1, 3), spread(0, 8);
    std::uniform_real_distribution<double> eps(0.0, 1.0);
    for (;;)
    {
        RandomCase c;
        c.complex = random_complex(rng, vertices(rng), triangles(rng), edges(rng));
        if (c.complex.size() > max_simplices)
            continue;
        auto map = random_vertex_map(rng, c.complex.vertex_bound(), static_cast<std::size_t>(arity(rng)), spread(rng));
        c.f = mdm::max_extension(c.complex, map);
        c.index = random_indexing_map(rng, c.complex);
        do
            c.epsilon = 1.0 - eps(rng); // (0, 1]
        while (c.epsilon <= 0.0);
        return c;
    }
}

} // namespace fixtures
