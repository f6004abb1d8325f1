#ifndef MDM_COMPLEX_HPP
#define MDM_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mdm
{

using VertexId = std::uint32_t;
using SimplexId = std::uint32_t;

inline constexpr SimplexId kNoSimplex = std::numeric_limits<SimplexId>::max();

using Point3 = std::array<double, 3>;

/// Raised on malformed input to any of the library entry points.
class InvalidInput : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Finite abstract simplicial complex.
///
/// A simplex is stored as its strictly increasing vertex tuple. Simplex ids
/// are insertion indices: inserting a simplex first inserts every missing
/// face, so ids are face-monotone (alpha < sigma implies id(alpha) < id(sigma))
/// and double as the default admissible indexing map. Facet and cofacet
/// adjacency is maintained on insertion. There is no removal.
class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Inserts the simplex and its closure. Returns the id of the simplex,
    /// or the existing id when it is already present.
    SimplexId insert(std::span<const VertexId> vertices);
    SimplexId insert(std::initializer_list<VertexId> vertices)
    {
        return insert(std::span<const VertexId>(vertices.begin(), vertices.size()));
    }

    std::optional<SimplexId> find(std::span<const VertexId> vertices) const;
    std::optional<SimplexId> find(std::initializer_list<VertexId> vertices) const
    {
        return find(std::span<const VertexId>(vertices.begin(), vertices.size()));
    }

    std::size_t size() const { return offsets_.size() - 1; }
    bool empty() const { return size() == 0; }

    int dim(SimplexId s) const
    {
        return static_cast<int>(offsets_[s + 1] - offsets_[s]) - 1;
    }

    /// Dimension of the complex, -1 when empty.
    int dimension() const { return max_dim_; }

    std::span<const VertexId> vertices(SimplexId s) const
    {
        return {vertex_data_.data() + offsets_[s], offsets_[s + 1] - offsets_[s]};
    }

    /// Facets in the order obtained by deleting vertex i, i = 0..dim.
    std::span<const SimplexId> facets(SimplexId s) const { return facets_[s]; }
    std::span<const SimplexId> cofacets(SimplexId s) const { return cofacets_[s]; }

    /// Simplex id of the 0-simplex {v}, if present.
    std::optional<SimplexId> vertex_simplex(VertexId v) const;

    /// Largest vertex id plus one (vertex ids are meant to be dense).
    std::size_t vertex_bound() const { return vertex_to_simplex_.size(); }

    std::size_t count_of_dim(int p) const;
    std::vector<SimplexId> simplices_of_dim(int p) const;

    /// alpha <= sigma in the face order.
    bool is_face(SimplexId alpha, SimplexId sigma) const;

    std::string to_string(SimplexId s) const;

private:
    struct TupleHash
    {
        std::size_t operator()(const std::vector<VertexId>& t) const noexcept;
    };

    SimplexId insert_sorted(const std::vector<VertexId>& tuple);

    std::vector<VertexId> vertex_data_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::vector<SimplexId>> facets_;
    std::vector<std::vector<SimplexId>> cofacets_;
    std::unordered_map<std::vector<VertexId>, SimplexId, TupleHash> index_;
    std::vector<SimplexId> vertex_to_simplex_;
    int max_dim_ = -1;
};

/// A subset of the simplices of one complex, kept as a sorted id list.
class SimplexSet
{
public:
    SimplexSet() = default;
    explicit SimplexSet(std::vector<SimplexId> ids);

    bool contains(SimplexId s) const;
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<SimplexId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const SimplexSet&, const SimplexSet&) = default;

private:
    std::vector<SimplexId> ids_;
};

/// Alexandrov-topology operators. All of them are defined for arbitrary
/// subsets; ids must be valid in `complex`.
SimplexSet closure(const SimplicialComplex& complex, const SimplexSet& s);
SimplexSet star(const SimplicialComplex& complex, const SimplexSet& s);
SimplexSet interior(const SimplicialComplex& complex, const SimplexSet& s);
SimplexSet boundary(const SimplicialComplex& complex, const SimplexSet& s);
SimplexSet exit_set(const SimplicialComplex& complex, const SimplexSet& s);

SimplexSet set_difference(const SimplexSet& a, const SimplexSet& b);
SimplexSet set_union(const SimplexSet& a, const SimplexSet& b);
bool is_subset(const SimplexSet& a, const SimplexSet& b);

/// Connected components of `s`, where two members are adjacent when one is a
/// face of the other. Components are sorted and listed by smallest id.
std::vector<SimplexSet> connected_components(const SimplicialComplex& complex,
                                             const SimplexSet& s);

/// Component label for every member of `s` (kNoSimplex for non-members),
/// using the same labelling as connected_components.
std::vector<SimplexId> component_labels(const SimplicialComplex& complex,
                                        const SimplexSet& s);

/// True if sigma <= tau <= sigma' with sigma, sigma' in s forces tau in s.
bool is_face_convex(const SimplicialComplex& complex, const SimplexSet& s);

/// Every simplex of the complex.
SimplexSet all_simplices(const SimplicialComplex& complex);

/// Injective real-valued map on the simplices used as a priority tiebreaker.
class IndexingMap
{
public:
    /// Throws InvalidInput if two simplices share a value.
    explicit IndexingMap(std::vector<double> values);

    double operator()(SimplexId s) const { return values_[s]; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    /// First pair (alpha, sigma) with alpha a facet of sigma and
    /// I(alpha) >= I(sigma), if any.
    std::optional<std::pair<SimplexId, SimplexId>>
    find_violation(const SimplicialComplex& complex) const;

    bool is_admissible(const SimplicialComplex& complex) const
    {
        return !find_violation(complex).has_value();
    }

private:
    std::vector<double> values_;
};

/// I(sigma) = insertion index.
IndexingMap insertion_indexing_map(const SimplicialComplex& complex);

enum class Axis { X = 0, Y = 1, Z = 2 };
enum class Direction { Increasing, Decreasing };

/// Vertices are labelled in increasing (or decreasing) order of the chosen
/// coordinate, ties broken by vertex id; simplices are then ranked by the
/// lexicographic order of their vertex labels listed in decreasing order.
IndexingMap axis_indexing_map(const SimplicialComplex& complex,
                              std::span<const Point3> coords, Axis axis,
                              Direction direction);

} // namespace mdm

#endif
