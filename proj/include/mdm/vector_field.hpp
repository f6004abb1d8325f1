#ifndef MDM_VECTOR_FIELD_HPP
#define MDM_VECTOR_FIELD_HPP

#include "mdm/complex.hpp"
#include "mdm/filtration.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdm
{

/// Combinatorial vector field stored as a partition of K into critical
/// singletons and (facet, cofacet) pairs.
class DiscreteVectorField
{
public:
    enum class Role : std::uint8_t { Unassigned, Critical, Tail, Head };

    DiscreteVectorField() = default;
    explicit DiscreteVectorField(std::size_t simplex_count);

    /// Builds a field from raw (sigma, V(sigma)) entries; sigma == V(sigma)
    /// marks a critical simplex. Throws InvalidInput if the entries do not
    /// describe a valid field (see validate_vector_field).
    static DiscreteVectorField from_entries(const SimplicialComplex& complex,
                                            std::span<const std::pair<SimplexId, SimplexId>> entries);

    void set_critical(SimplexId s);
    /// V(tail) = head.
    void set_pair(SimplexId tail, SimplexId head);

    std::size_t size() const { return role_.size(); }
    Role role(SimplexId s) const { return role_[s]; }
    bool is_critical(SimplexId s) const { return role_[s] == Role::Critical; }
    /// Partner of a paired simplex, kNoSimplex otherwise.
    SimplexId partner(SimplexId s) const { return partner_[s]; }

    std::vector<SimplexId> critical_simplices() const;
    /// (tail, head) pairs in increasing tail order.
    std::vector<std::pair<SimplexId, SimplexId>> pairs() const;
    /// Critical counts per dimension (index p -> m_p).
    std::vector<std::size_t> critical_counts(const SimplicialComplex& complex) const;

    friend bool operator==(const DiscreteVectorField&, const DiscreteVectorField&) = default;

private:
    std::vector<Role> role_;
    std::vector<SimplexId> partner_;
};

struct FieldCheck
{
    bool valid = true;
    std::string violation;
};

/// Checks the vector-field axioms on raw entries: V(sigma) is sigma or one of
/// its cofacets, V is injective, dom V u im V = K, dom V n im V = Fix V.
FieldCheck validate_vector_field(const SimplicialComplex& complex,
                                 std::span<const std::pair<SimplexId, SimplexId>> entries);

/// Checks a stored field for internal consistency against the complex.
FieldCheck validate(const SimplicialComplex& complex, const DiscreteVectorField& field);

/// Alternating sequence sigma_0, tau_0, sigma_1, ... with V(sigma_i) = tau_i.
using VPath = std::vector<SimplexId>;

struct AcyclicityCheck
{
    bool acyclic = true;
    /// Closed V-path sigma_0, tau_0, ..., sigma_n = sigma_0 when not acyclic.
    std::optional<VPath> witness;
};

AcyclicityCheck is_acyclic(const SimplicialComplex& complex, const DiscreteVectorField& field);

/// f(sigma) == f(V(sigma)) for every pair.
bool is_compatible(const DiscreteVectorField& field, const VectorFunction& f);

/// Simplices reached by following V-paths that start at any face of sigma:
/// from a tail go to its head, from a head go to its other facets.
std::vector<char> flow_region(const SimplicialComplex& complex, const DiscreteVectorField& field,
                              SimplexId sigma);

/// sigma connects to tau when sigma >= tau or a V-path runs from a face of
/// sigma to a coface of tau.
bool flows_to(const SimplicialComplex& complex, const DiscreteVectorField& field, SimplexId sigma,
              SimplexId tau);

/// Symmetric closure of flows_to.
bool connection(const SimplicialComplex& complex, const DiscreteVectorField& field, SimplexId sigma,
                SimplexId tau);

} // namespace mdm

#endif
