#ifndef MDM_TESTS_FIXTURES_HPP
#define MDM_TESTS_FIXTURES_HPP

#include "mdm/complex.hpp"
#include "mdm/filtration.hpp"
#include "mdm/io.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fixtures
{

/// Labelled square: C=0, A=1, B=2, D=3, two triangles ACD and ABD.
/// Ids follow the labels v0..v3, e4=AC, e5=AB, e6=BD, e7=CD, e8=AD,
/// t9=ACD, t10=ABD.
struct Square
{
    mdm::SimplicialComplex complex;
    std::vector<mdm::Point3> coords;
    mdm::VertexMap map; // A=(1,2), B=(0,0), C=(0,0), D=(2,1)

    enum : mdm::SimplexId { C, A, B, D, AC, AB, BD, CD, AD, ACD, ABD };
};

Square square();
mdm::MeshFile square_mesh();

/// 12 vertices at 0, 30, ..., 330 degrees; vertex i sits at 30*i degrees.
struct Circle
{
    mdm::SimplicialComplex complex;
    std::vector<mdm::Point3> coords;
    mdm::VertexMap map; // (x, y)

    mdm::SimplexId vertex(int degrees) const;
    mdm::SimplexId edge(int from_degrees, int to_degrees) const;
};

Circle circle();

/// cos/sin of 2*pi*i/n with exact symmetries (0 and +-1 at quarter turns).
double exact_cos(long i, long n);
double exact_sin(long i, long n);

mdm::MeshFile triangle_mesh();       // one triangle
mdm::MeshFile octahedron();          // 6 vertices, 8 faces
mdm::MeshFile torus7();              // 7-vertex torus
mdm::MeshFile projective_plane6();   // 6-vertex RP^2
mdm::MeshFile klein_bottle(int n, int m); // n x m grid, one flipped gluing
mdm::MeshFile grid_torus(int n, int m);
mdm::MeshFile dunce_hat();

/// Torus with major radius 2, minor radius 1 around the z axis, sampled on
/// an n_major x n_minor grid. With n_major % 4 == 0 and n_minor even it
/// contains (0,-3,0) and (0,-1,0).
mdm::MeshFile parametric_torus(int n_major, int n_minor);

/// Octahedron with every face split into level^2 triangles, projected to the
/// unit sphere.
mdm::MeshFile sphere(int level);

/// Random pure-ish 2-complex: `triangles` random triples over `vertices`
/// vertices plus a few loose edges. Closure is taken on insertion.
mdm::SimplicialComplex random_complex(std::mt19937_64& rng, int vertices, int triangles, int edges);

/// Random vertex map with values drawn from a small integer grid, so ties
/// and coincidences are common.
mdm::VertexMap random_vertex_map(std::mt19937_64& rng, std::size_t vertices, std::size_t k, int spread);

/// Random admissible indexing map: a random linear extension of the face order.
mdm::IndexingMap random_indexing_map(std::mt19937_64& rng, const mdm::SimplicialComplex& complex);

/// Random input for the generation property suites: a 2-complex of at most
/// `max_simplices` simplices, f the max-extension of a random vertex map
/// with k in {1,2,3}, a random admissible indexing map and epsilon in (0,1].
struct RandomCase
{
    mdm::SimplicialComplex complex;
    mdm::VectorFunction f;
    mdm::IndexingMap index{std::vector<double>{}};
    double epsilon = 1.0;
};

RandomCase random_case(std::mt19937_64& rng, std::size_t max_simplices);

/// Coordinates for every vertex id of `complex`, placed on a helix.
std::vector<mdm::Point3> helix_coords(std::size_t vertices);

} // namespace fixtures

#endif
