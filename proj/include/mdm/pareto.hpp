#ifndef MDM_PARETO_HPP
#define MDM_PARETO_HPP

#include "mdm/complex.hpp"
#include "mdm/filtration.hpp"
#include "mdm/homology.hpp"
#include "mdm/mdm.hpp"
#include "mdm/vector_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mdm
{

/// A connected component C of a level set with nonzero H(Cl C, Ex C).
struct ParetoComponent
{
    std::uint32_t level;
    SimplexSet simplices;
    HomologySummary homology;
};

struct ParetoSet
{
    Ring ring = Ring::Z;
    std::vector<std::uint32_t> critical_levels; // indices into the level decomposition
    std::vector<std::vector<double>> critical_values;
    SimplexSet simplices;                       // every Pareto critical simplex
    std::vector<ParetoComponent> level_components;
};

ParetoSet pareto_set(const SimplicialComplex& complex, const VectorFunction& f, Ring ring = Ring::Z);

/// Connected components of the Pareto set as a subset of K.
std::vector<SimplexSet> pareto_components(const SimplicialComplex& complex, const ParetoSet& pareto);

/// The simplex of `level` whose lower star is the whole level, if any.
std::optional<SimplexId> primary_simplex(const SimplicialComplex& complex, const VectorFunction& f,
                                         const Level& level);

enum class Relation { G, GPrime, F };

const char* to_string(Relation r);
/// Accepts "g", "gprime" and "f".
Relation parse_relation(const std::string& name);

struct CriticalComponents
{
    Relation relation;
    std::vector<SimplexSet> blocks; // ordered by smallest member
};

/// Classes of the critical simplices of `field` under the transitive closure
/// of the chosen base relation. `f` is required for GPrime and F.
CriticalComponents critical_components(const SimplicialComplex& complex, const MdmFunction& g,
                                       const DiscreteVectorField& field, const VectorFunction* f,
                                       Relation relation);

} // namespace mdm

#endif
