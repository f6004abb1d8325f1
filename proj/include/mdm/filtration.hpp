#ifndef MDM_FILTRATION_HPP
#define MDM_FILTRATION_HPP

#include "mdm/complex.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mdm
{

/// Values in R^k attached to the simplices of a complex (row-major, k values
/// per simplex id). Admissibility is a property checked separately.
class VectorFunction
{
public:
    VectorFunction() = default;
    VectorFunction(std::size_t k, std::vector<double> values);

    std::size_t arity() const { return k_; }
    std::size_t size() const { return k_ == 0 ? 0 : values_.size() / k_; }

    std::span<const double> operator[](SimplexId s) const
    {
        return {values_.data() + static_cast<std::size_t>(s) * k_, k_};
    }
    double at(SimplexId s, std::size_t i) const { return values_[static_cast<std::size_t>(s) * k_ + i]; }

    const std::vector<double>& raw() const { return values_; }

    /// Single-component function made of component i.
    VectorFunction component(std::size_t i) const;
    /// Componentwise c * f.
    VectorFunction scaled(double c) const;

private:
    std::size_t k_ = 0;
    std::vector<double> values_;
};

/// Per-vertex values in R^k, indexed by vertex id.
struct VertexMap
{
    std::size_t k = 0;
    std::vector<double> values; // k values per vertex id

    std::span<const double> operator[](VertexId v) const
    {
        return {values.data() + static_cast<std::size_t>(v) * k, k};
    }
    std::size_t vertex_count() const { return k == 0 ? 0 : values.size() / k; }
};

/// u <= v componentwise.
bool precedes_eq(std::span<const double> u, std::span<const double> v);
/// Lexicographic order on R^k; refines the componentwise order.
bool lex_less(std::span<const double> u, std::span<const double> v);
bool equal_values(std::span<const double> u, std::span<const double> v);

struct AdmissibilityCheck
{
    bool admissible = true;
    /// First offending (facet, simplex) pair.
    std::optional<std::pair<SimplexId, SimplexId>> violation;
};

/// Facet pairs suffice: the componentwise order is transitive.
AdmissibilityCheck check_admissible(const SimplicialComplex& complex, const VectorFunction& f);

/// Throws InvalidInput naming the violating pair.
void require_admissible(const SimplicialComplex& complex, const VectorFunction& f);

/// f_i(sigma) = max over vertices v of sigma of map_i(v).
VectorFunction max_extension(const SimplicialComplex& complex, const VertexMap& map);

/// Vertex map from coordinates: the listed axes become the components.
VertexMap coordinate_vertex_map(std::span<const Point3> coords, std::span<const Axis> axes);

/// 0 on vertices, largest pairwise vertex distance elsewhere.
VectorFunction rips_diameter_map(const SimplicialComplex& complex, std::span<const Point3> coords);

/// Concatenates the components of several functions on the same complex.
VectorFunction zip(std::span<const VectorFunction> parts);

struct Level
{
    std::vector<double> value;
    std::vector<SimplexId> members; // increasing ids
};

/// Fibers of f ordered lexicographically by value, so that u' < u
/// componentwise places L_{u'} first.
struct LevelSetDecomposition
{
    std::vector<Level> levels;
    std::vector<std::uint32_t> level_of; // simplex id -> level index

    std::size_t max_level_size() const;
};

LevelSetDecomposition level_sets(const SimplicialComplex& complex, const VectorFunction& f);

} // namespace mdm

#endif
