#ifndef MDM_HOMOLOGY_HPP
#define MDM_HOMOLOGY_HPP

#include "mdm/complex.hpp"
#include "mdm/filtration.hpp"
#include "mdm/vector_field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace mdm
{

using Integer = boost::multiprecision::cpp_int;

enum class Ring { Z, Z2 };

const char* to_string(Ring ring);

/// Column-sparse integer matrix.
struct SparseIntMatrix
{
    std::size_t rows = 0;
    std::vector<std::map<std::uint32_t, Integer>> columns;

    std::size_t cols() const { return columns.size(); }
};

using DenseIntMatrix = std::vector<std::vector<Integer>>;

struct SnfResult
{
    std::size_t rank = 0;
    std::vector<Integer> invariant_factors; // entries > 1, each dividing the next
};

SnfResult smith_normal_form(SparseIntMatrix m);
SnfResult smith_normal_form(const DenseIntMatrix& m);

/// Rank over Z/2 (entries taken mod 2).
std::size_t rank_z2(const SparseIntMatrix& m);

/// Boundary map C_p(S) -> C_{p-1}(S) for the chain complex with basis S;
/// facets outside S are dropped. Facet k (vertex k deleted) has sign (-1)^k.
struct BoundaryMatrix
{
    std::vector<SimplexId> row_simplices; // (p-1)-simplices of S
    std::vector<SimplexId> col_simplices; // p-simplices of S
    SparseIntMatrix matrix;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, const SimplexSet& basis, int p);

struct HomologySummary
{
    Ring ring = Ring::Z;
    std::vector<std::size_t> betti;            // index p
    std::vector<std::vector<Integer>> torsion; // index p, empty over Z/2

    bool is_zero() const;
};

/// Homology of the chain complex spanned by S (S closed gives H(S); S
/// face-convex gives H(Cl S, Ex S)).
HomologySummary chain_homology(const SimplicialComplex& complex, const SimplexSet& basis, Ring ring);

HomologySummary betti_numbers(const SimplicialComplex& complex, Ring ring = Ring::Z);

/// H(Cl S, Ex S). Throws InvalidInput if S is not face-convex.
HomologySummary relative_homology(const SimplicialComplex& complex, const SimplexSet& s, Ring ring = Ring::Z);

struct LevelMorseCount
{
    std::uint32_t level;
    std::vector<double> value;
    std::vector<std::size_t> critical; // m_p(u)
    std::vector<std::size_t> rank;     // rank H_p(Cl L_u, Ex L_u)
};

struct MorseCountReport
{
    std::vector<LevelMorseCount> levels;
    bool inequality_holds = true;
    bool relative_perfect = true;
};

/// Compares critical counts with relative homology level by level.
MorseCountReport morse_count_check(const SimplicialComplex& complex, const DiscreteVectorField& field,
                                   const VectorFunction& f, Ring ring = Ring::Z);

} // namespace mdm

#endif
