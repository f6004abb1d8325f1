#ifndef MDM_MDM_HPP
#define MDM_MDM_HPP

#include "mdm/complex.hpp"
#include "mdm/filtration.hpp"
#include "mdm/vector_field.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mdm
{

/// g(sigma) kept symbolically as f(sigma) plus bump * delta on the first
/// coordinate. Ordering is exact: the first coordinate compares the pair
/// (base[0], bump) lexicographically, the others compare base directly.
struct MdmValue
{
    std::vector<double> base;
    std::uint32_t bump = 0;

    double realized(std::size_t i, double delta) const
    {
        return i == 0 ? base[0] + static_cast<double>(bump) * delta : base[i];
    }
    std::vector<double> realized(double delta) const;

    friend bool operator==(const MdmValue&, const MdmValue&) = default;
};

/// Componentwise a <= b in the symbolic order.
bool precedes_eq(const MdmValue& a, const MdmValue& b);
/// True when neither a <= b nor b <= a.
bool incomparable(const MdmValue& a, const MdmValue& b);

class MdmFunction
{
public:
    MdmFunction() = default;
    MdmFunction(std::vector<MdmValue> values, double delta, double epsilon)
        : values_(std::move(values))
        , delta_(delta)
        , epsilon_(epsilon)
    {
    }

    std::size_t size() const { return values_.size(); }
    std::size_t arity() const { return values_.empty() ? 0 : values_.front().base.size(); }
    const MdmValue& operator[](SimplexId s) const { return values_[s]; }
    const std::vector<MdmValue>& values() const { return values_; }
    double delta() const { return delta_; }
    double epsilon() const { return epsilon_; }

    /// Realized values as a VectorFunction.
    VectorFunction realized() const;
    /// max over sigma of bump(sigma) * delta.
    double max_deviation() const;
    std::uint32_t max_bump() const;

    /// g = f with bump 0 everywhere.
    static MdmFunction from_function(const VectorFunction& f, double delta = 0.0, double epsilon = 0.0);

private:
    std::vector<MdmValue> values_;
    double delta_ = 0.0;
    double epsilon_ = 0.0;
};

struct TraceEntry
{
    enum class Role : std::uint8_t { PairedWithFacet, PairedWithCofacet, Critical };
    SimplexId simplex;
    Role role;
};

struct LevelStats
{
    std::size_t size = 0;
    std::size_t critical = 0;
    std::size_t pairs = 0;
};

struct GenerationTrace
{
    std::vector<TraceEntry> order;
    std::vector<LevelStats> levels; // in decomposition order
};

struct GenerationResult
{
    MdmFunction g;
    DiscreteVectorField field;
    GenerationTrace trace;
};

/// epsilon / |K| when f_1 is constant, min(epsilon, epsilon') / |K| otherwise,
/// epsilon' being the smallest gap between distinct f_1 values.
double compute_delta(const SimplicialComplex& complex, const VectorFunction& f, double epsilon);

/// Value for sigma from its facets other than tau (absent tau: all facets).
/// Requires g on those facets; throws InvalidInput otherwise.
MdmValue compute_g(const SimplicialComplex& complex, const VectorFunction& f,
                   std::span<const std::optional<MdmValue>> g, SimplexId sigma,
                   std::optional<SimplexId> tau = std::nullopt);

/// Mutable state shared by successive expand_mdm calls.
struct ExpansionState
{
    ExpansionState(const SimplicialComplex& complex, const VectorFunction& f, const IndexingMap& index);

    const SimplicialComplex& complex;
    const VectorFunction& f;
    const IndexingMap& index;
    std::vector<std::optional<MdmValue>> g;
    DiscreteVectorField field;
    GenerationTrace trace;

    std::vector<char> processed;
    std::vector<char> queued_one;
    std::vector<std::uint32_t> unprocessed_facets;
    std::vector<std::uint32_t> level_of;
};

/// Extends g and V over one level set; every earlier level must be done.
void expand_mdm(ExpansionState& state, const Level& level, std::uint32_t level_index);

GenerationResult generate_mdm(const SimplicialComplex& complex, const VectorFunction& f,
                              const IndexingMap& index, double epsilon);

struct MdmViolation
{
    int condition; // 1..4
    SimplexId simplex;
    SimplexId neighbour; // kNoSimplex for head/tail cardinality violations
};

struct MdmCheck
{
    bool valid = true;
    std::vector<MdmViolation> violations;
};

/// The four head/tail conditions on every simplex.
MdmCheck verify_mdm(const SimplicialComplex& complex, const MdmFunction& g);

/// Head: cofacets tau with g(tau) <= g(sigma). Tail: facets alpha with g(alpha) >= g(sigma).
std::vector<SimplexId> head(const SimplicialComplex& complex, const MdmFunction& g, SimplexId sigma);
std::vector<SimplexId> tail(const SimplicialComplex& complex, const MdmFunction& g, SimplexId sigma);

/// Gradient field of an mdm function. Throws InvalidInput if g is not mdm.
DiscreteVectorField gradient_of(const SimplicialComplex& complex, const MdmFunction& g);

} // namespace mdm

#endif
