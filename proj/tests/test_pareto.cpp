#include "fixtures.hpp"
#include "oracles.hpp"

#include "mdm/mdm.hpp"
#include "mdm/pareto.hpp"

#include <doctest.h>

#include <random>

using namespace mdm;

namespace
{

const std::vector<Axis> kXY{Axis::X, Axis::Y};

struct Surface
{
    MeshFile mesh;
    SimplicialComplex K;
    VectorFunction f;
};

Surface xy_surface(MeshFile mesh)
{
    Surface s{std::move(mesh), {}, {}};
    s.K = build_complex(s.mesh);
    s.f = max_extension(s.K, coordinate_vertex_map(s.mesh.vertices, kXY));
    return s;
}

} // namespace

TEST_CASE("a single vertex is its own Pareto set")
{
    SimplicialComplex K;
    K.insert({0});
    VectorFunction f(2, {1, 1});
    auto P = pareto_set(K, f);
    CHECK(P.simplices == SimplexSet({0}));
    CHECK(pareto_components(K, P).size() == 1);
}

TEST_CASE("square: critical levels and primary simplices")
{
    auto sq = fixtures::square();
    auto f = max_extension(sq.complex, sq.map);
    using S = fixtures::Square;
    auto L = level_sets(sq.complex, f);

    // Level (1,2) = {A, AC, AB}: all contain A.
    CHECK(primary_simplex(sq.complex, f, L.levels[1]) == SimplexId{S::A});
    // Level (0,0) = {C, B}: no common vertex.
    CHECK_FALSE(primary_simplex(sq.complex, f, L.levels[0]));
    CHECK(primary_simplex(sq.complex, f, L.levels[3]) == SimplexId{S::AD});

    auto P = pareto_set(sq.complex, f);
    // (0,0) holds two minima, (1,2) and (2,1) join them by a path relative to
    // its ends, and (2,2) is the open square relative to its boundary.
    CHECK(P.critical_values == std::vector<std::vector<double>>{{0, 0}, {1, 2}, {2, 1}, {2, 2}});
    CHECK(P.simplices == all_simplices(sq.complex));
}

TEST_CASE("Pareto components: sphere and torus")
{
    auto sphere = xy_surface(fixtures::sphere(4));
    CHECK(pareto_components(sphere.K, pareto_set(sphere.K, sphere.f)).size() == 2);

    auto torus = xy_surface(fixtures::parametric_torus(16, 8));
    CHECK(pareto_components(torus.K, pareto_set(torus.K, torus.f)).size() == 4);
}

TEST_CASE("Pareto set is invariant under positive rescaling of f")
{
    auto torus = xy_surface(fixtures::parametric_torus(12, 6));
    auto a = pareto_set(torus.K, torus.f);
    auto b = pareto_set(torus.K, torus.f.scaled(3.5));
    CHECK(a.simplices == b.simplices);
}

TEST_CASE("critical levels of an injective vertex map have a primary simplex")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int round = 0; round < 25; ++round)
    {
        auto K = fixtures::random_complex(rng, 10, 10, 3);
        VertexMap map{2, {}};
        for (std::size_t v = 0; v < K.vertex_bound(); ++v)
        {
            map.values.push_back(u(rng));
            map.values.push_back(u(rng));
        }
        auto f = max_extension(K, map);
        auto L = level_sets(K, f);
        auto P = pareto_set(K, f);
        for (auto i : P.critical_levels)
        {
            auto p = primary_simplex(K, f, L.levels[i]);
            REQUIRE(p);
            CHECK(K.dim(*p) <= 1);
        }
    }
}

TEST_CASE("critical components on the square")
{
    auto sq = fixtures::square();
    auto f = max_extension(sq.complex, sq.map);
    auto run = generate_mdm(sq.complex, f, insertion_indexing_map(sq.complex), 0.5);
    using S = fixtures::Square;

    auto g = critical_components(sq.complex, run.g, run.field, &f, Relation::G);
    CHECK(g.blocks.size() == 4);
    auto gp = critical_components(sq.complex, run.g, run.field, &f, Relation::GPrime);
    REQUIRE(gp.blocks.size() == 3);
    // AB and ABD share f_2 = 2 through A; CD and ABD share f_1 = 2.
    CHECK(gp.blocks[0] == SimplexSet({S::C}));
    CHECK(gp.blocks[1] == SimplexSet({S::B}));
    CHECK(gp.blocks[2] == SimplexSet({S::AB, S::CD, S::ABD}));
    CHECK(critical_components(sq.complex, run.g, run.field, &f, Relation::F).blocks.size() == 3);
    CHECK_THROWS_AS(critical_components(sq.complex, run.g, run.field, nullptr, Relation::F), InvalidInput);
}

TEST_CASE("critical components on the torus")
{
    auto torus = xy_surface(fixtures::parametric_torus(16, 8));
    for (auto idx : {0, 1, 2})
    {
        IndexingMap I = idx == 0 ? insertion_indexing_map(torus.K)
                                 : axis_indexing_map(torus.K, torus.mesh.vertices, kXY[idx - 1], Direction::Increasing);
        auto run = generate_mdm(torus.K, torus.f, I, 1e-3);
        CAPTURE(idx);
        CHECK(critical_components(torus.K, run.g, run.field, &torus.f, Relation::GPrime).blocks.size() == 3);
        CHECK(critical_components(torus.K, run.g, run.field, &torus.f, Relation::F).blocks.size() == 4);
    }
}

TEST_CASE("component classes are closed under the defining relation")
{
    std::mt19937_64 rng(8);
    for (int round = 0; round < 30; ++round)
    {
        auto rc = fixtures::random_case(rng, 60);
        auto run = generate_mdm(rc.complex, rc.f, rc.index, rc.epsilon);
        auto crit = run.field.critical_simplices();
        auto blocks = critical_components(rc.complex, run.g, run.field, &rc.f, Relation::G).blocks;

        auto expected = oracles::closure_classes(crit.size(), [&](std::size_t i, std::size_t j) {
            SimplexId a = crit[i], b = crit[j];
            bool shared = false;
            for (std::size_t c = 0; c < rc.f.arity(); ++c)
                shared |= run.g[a].realized(c, run.g.delta()) == run.g[b].realized(c, run.g.delta());
            return shared && connection(rc.complex, run.field, a, b);
        });
        REQUIRE(blocks.size() == expected.size());
        for (std::size_t c = 0; c < blocks.size(); ++c)
        {
            std::vector<SimplexId> ids;
            for (auto i : expected[c])
                ids.push_back(crit[i]);
            CHECK(blocks[c] == SimplexSet(ids));
        }
    }
}

TEST_CASE("relation names")
{
    CHECK(parse_relation("g") == Relation::G);
    CHECK(parse_relation("gprime") == Relation::GPrime);
    CHECK(parse_relation("f") == Relation::F);
    CHECK_THROWS_AS(parse_relation("h"), InvalidInput);
    CHECK(std::string(to_string(Relation::GPrime)) == "gprime");
}
