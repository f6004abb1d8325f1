#include "mdm/vector_field.hpp"

#include <algorithm>
#include <deque>

namespace mdm
{

DiscreteVectorField::DiscreteVectorField(std::size_t simplex_count)
    : role_(simplex_count, Role::Unassigned)
    , partner_(simplex_count, kNoSimplex)
{
}

void DiscreteVectorField::set_critical(SimplexId s)
{
    role_[s] = Role::Critical;
    partner_[s] = kNoSimplex;
}

void DiscreteVectorField::set_pair(SimplexId tail, SimplexId head)
{
    role_[tail] = Role::Tail;
    role_[head] = Role::Head;
    partner_[tail] = head;
    partner_[head] = tail;
}

std::vector<SimplexId> DiscreteVectorField::critical_simplices() const
{
    std::vector<SimplexId> out;
    for (SimplexId s = 0; s < role_.size(); ++s)
    {
        if (role_[s] == Role::Critical)
            out.push_back(s);
    }
    return out;
}

std::vector<std::pair<SimplexId, SimplexId>> DiscreteVectorField::pairs() const
{
    std::vector<std::pair<SimplexId, SimplexId>> out;
    for (SimplexId s = 0; s < role_.size(); ++s)
    {
        if (role_[s] == Role::Tail)
            out.emplace_back(s, partner_[s]);
    }
    return out;
}

std::vector<std::size_t> DiscreteVectorField::critical_counts(const SimplicialComplex& complex) const
{
    std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(complex.dimension(), 0)) + 1, 0);
    for (SimplexId s = 0; s < role_.size(); ++s)
    {
        if (role_[s] == Role::Critical)
            ++counts[static_cast<std::size_t>(complex.dim(s))];
    }
    return counts;
}

namespace
{

bool is_cofacet(const SimplicialComplex& complex, SimplexId s, SimplexId t)
{
    auto cof = complex.cofacets(s);
    return std::find(cof.begin(), cof.end(), t) != cof.end();
}

} // namespace

FieldCheck validate_vector_field(const SimplicialComplex& complex,
                                 std::span<const std::pair<SimplexId, SimplexId>> entries)
{
    const std::size_t n = complex.size();
    std::vector<SimplexId> image_of(n, kNoSimplex);   // V(sigma)
    std::vector<SimplexId> preimage_of(n, kNoSimplex); // V^-1(tau)
    for (auto [s, t] : entries)
    {
        if (s >= n || t >= n)
            return {false, "entry references an unknown simplex"};
        if (image_of[s] != kNoSimplex)
        {
            if (image_of[s] == t)
                continue;
            return {false, "simplex " + complex.to_string(s) + " is mapped twice"};
        }
        if (s != t && !is_cofacet(complex, s, t))
            return {false, complex.to_string(t) + " is not a cofacet of " + complex.to_string(s)};
        if (preimage_of[t] != kNoSimplex)
            return {false, "V is not injective at " + complex.to_string(t)};
        image_of[s] = t;
        preimage_of[t] = s;
    }
    for (SimplexId s = 0; s < n; ++s)
    {
        const bool in_dom = image_of[s] != kNoSimplex;
        const bool in_im = preimage_of[s] != kNoSimplex;
        if (!in_dom && !in_im)
            return {false, complex.to_string(s) + " is neither in the domain nor the image"};
        if (in_dom && in_im && image_of[s] != s)
            return {false, complex.to_string(s) + " is in domain and image without being fixed"};
    }
    return {};
}

DiscreteVectorField DiscreteVectorField::from_entries(
    const SimplicialComplex& complex, std::span<const std::pair<SimplexId, SimplexId>> entries)
{
    auto check = validate_vector_field(complex, entries);
    if (!check.valid)
        throw InvalidInput("invalid vector field: " + check.violation);
    DiscreteVectorField field(complex.size());
    for (auto [s, t] : entries)
    {
        if (s == t)
            field.set_critical(s);
        else
            field.set_pair(s, t);
    }
    return field;
}

FieldCheck validate(const SimplicialComplex& complex, const DiscreteVectorField& field)
{
    if (field.size() != complex.size())
        return {false, "field size does not match the complex"};
    std::vector<std::pair<SimplexId, SimplexId>> entries;
    for (SimplexId s = 0; s < field.size(); ++s)
    {
        switch (field.role(s))
        {
        case DiscreteVectorField::Role::Unassigned:
            return {false, complex.to_string(s) + " is unassigned"};
        case DiscreteVectorField::Role::Critical:
            entries.emplace_back(s, s);
            break;
        case DiscreteVectorField::Role::Tail:
        {
            SimplexId t = field.partner(s);
            if (t == kNoSimplex || field.role(t) != DiscreteVectorField::Role::Head || field.partner(t) != s)
                return {false, "inconsistent pair at " + complex.to_string(s)};
            entries.emplace_back(s, t);
            break;
        }
        case DiscreteVectorField::Role::Head:
        {
            SimplexId t = field.partner(s);
            if (t == kNoSimplex || field.role(t) != DiscreteVectorField::Role::Tail || field.partner(t) != s)
                return {false, "inconsistent pair at " + complex.to_string(s)};
            break;
        }
        }
    }
    return validate_vector_field(complex, entries);
}

AcyclicityCheck is_acyclic(const SimplicialComplex& complex, const DiscreteVectorField& field)
{
    // Graph on tails: sigma -> sigma' when sigma' is a tail, a facet of V(sigma)
    // and sigma' != sigma. A closed V-path is a directed cycle here. Edges never
    // change dimension, so one DFS covers every dimension at once.
    using Role = DiscreteVectorField::Role;
    enum : std::uint8_t { White, Grey, Black };
    std::vector<std::uint8_t> colour(complex.size(), White);
    std::vector<SimplexId> parent(complex.size(), kNoSimplex);

    struct Frame
    {
        SimplexId node;
        std::size_t next;
    };
    std::vector<Frame> stack;

    for (SimplexId root = 0; root < complex.size(); ++root)
    {
        if (field.role(root) != Role::Tail || colour[root] != White)
            continue;
        colour[root] = Grey;
        stack.push_back({root, 0});
        while (!stack.empty())
        {
            Frame& top = stack.back();
            const SimplexId head = field.partner(top.node);
            auto facets = complex.facets(head);
            if (top.next == facets.size())
            {
                colour[top.node] = Black;
                stack.pop_back();
                continue;
            }
            SimplexId nxt = facets[top.next++];
            if (nxt == top.node || field.role(nxt) != Role::Tail)
                continue;
            if (colour[nxt] == Grey)
            {
                // Unwind from top.node back to nxt.
                std::vector<SimplexId> chain;
                for (SimplexId x = top.node;; x = parent[x])
                {
                    chain.push_back(x);
                    if (x == nxt)
                        break;
                }
                std::reverse(chain.begin(), chain.end());
                VPath path;
                for (SimplexId x : chain)
                {
                    path.push_back(x);
                    path.push_back(field.partner(x));
                }
                path.push_back(nxt);
                return {false, std::move(path)};
            }
            if (colour[nxt] == White)
            {
                colour[nxt] = Grey;
                parent[nxt] = top.node;
                stack.push_back({nxt, 0});
            }
        }
    }
    return {};
}

bool is_compatible(const DiscreteVectorField& field, const VectorFunction& f)
{
    for (auto [s, t] : field.pairs())
    {
        if (!equal_values(f[s], f[t]))
            return false;
    }
    return true;
}

std::vector<char> flow_region(const SimplicialComplex& complex, const DiscreteVectorField& field,
                              SimplexId sigma)
{
    using Role = DiscreteVectorField::Role;
    std::vector<char> seen(complex.size(), 0);
    std::deque<SimplexId> queue;

    // Seeds: every face of sigma, sigma included.
    std::vector<SimplexId> stack{sigma};
    while (!stack.empty())
    {
        SimplexId x = stack.back();
        stack.pop_back();
        if (seen[x])
            continue;
        seen[x] = 1;
        queue.push_back(x);
        for (SimplexId f : complex.facets(x))
            stack.push_back(f);
    }

    while (!queue.empty())
    {
        SimplexId x = queue.front();
        queue.pop_front();
        if (field.role(x) == Role::Tail)
        {
            SimplexId h = field.partner(x);
            if (!seen[h])
            {
                seen[h] = 1;
                queue.push_back(h);
            }
        }
        else if (field.role(x) == Role::Head)
        {
            SimplexId from = field.partner(x);
            for (SimplexId f : complex.facets(x))
            {
                if (f != from && !seen[f])
                {
                    seen[f] = 1;
                    queue.push_back(f);
                }
            }
        }
    }
    return seen;
}

namespace
{

bool region_touches_star(const SimplicialComplex& complex, const std::vector<char>& region, SimplexId tau)
{
    // Some simplex in the region is a coface of tau: walk the star of tau.
    std::vector<SimplexId> stack{tau};
    std::vector<char> seen(complex.size(), 0);
    while (!stack.empty())
    {
        SimplexId x = stack.back();
        stack.pop_back();
        if (seen[x])
            continue;
        seen[x] = 1;
        if (region[x])
            return true;
        for (SimplexId c : complex.cofacets(x))
            stack.push_back(c);
    }
    return false;
}

} // namespace

bool flows_to(const SimplicialComplex& complex, const DiscreteVectorField& field, SimplexId sigma,
              SimplexId tau)
{
    if (complex.is_face(tau, sigma))
        return true;
    return region_touches_star(complex, flow_region(complex, field, sigma), tau);
}

bool connection(const SimplicialComplex& complex, const DiscreteVectorField& field, SimplexId sigma,
                SimplexId tau)
{
    return flows_to(complex, field, sigma, tau) || flows_to(complex, field, tau, sigma);
}

} // namespace mdm
