#include "mdm/pareto.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace mdm
{

ParetoSet pareto_set(const SimplicialComplex& complex, const VectorFunction& f, Ring ring)
{
    require_admissible(complex, f);
    auto decomposition = level_sets(complex, f);

    ParetoSet out;
    out.ring = ring;
    std::vector<SimplexId> members;
    for (std::uint32_t l = 0; l < decomposition.levels.size(); ++l)
    {
        const auto& level = decomposition.levels[l];
        SimplexSet whole(level.members);
        auto parts = connected_components(complex, whole);

        bool value_critical = false;
        if (parts.size() == 1)
        {
            auto h = relative_homology(complex, whole, ring);
            if (!h.is_zero())
            {
                value_critical = true;
                out.level_components.push_back({l, whole, std::move(h)});
                members.insert(members.end(), whole.begin(), whole.end());
            }
        }
        else
        {
            // H(Cl L, Ex L) is the direct sum over components.
            for (auto& part : parts)
            {
                auto h = relative_homology(complex, part, ring);
                if (h.is_zero())
                    continue;
                value_critical = true;
                members.insert(members.end(), part.begin(), part.end());
                out.level_components.push_back({l, std::move(part), std::move(h)});
            }
        }
        if (value_critical)
        {
            out.critical_levels.push_back(l);
            out.critical_values.push_back(level.value);
        }
    }
    out.simplices = SimplexSet(std::move(members));
    return out;
}

std::vector<SimplexSet> pareto_components(const SimplicialComplex& complex, const ParetoSet& pareto)
{
    return connected_components(complex, pareto.simplices);
}

std::optional<SimplexId> primary_simplex(const SimplicialComplex& complex, const VectorFunction& f,
                                         const Level& level)
{
    if (level.members.empty())
        return std::nullopt;
    // Low(sigma) lies in the level of sigma for admissible f, so sigma is
    // primary iff every member of the level is a coface of sigma.
    auto first = complex.vertices(level.members.front());
    std::vector<VertexId> common(first.begin(), first.end());
    for (SimplexId s : level.members)
    {
        auto vs = complex.vertices(s);
        std::vector<VertexId> next;
        std::set_intersection(common.begin(), common.end(), vs.begin(), vs.end(), std::back_inserter(next));
        common.swap(next);
        if (common.empty())
            return std::nullopt;
    }
    auto sigma = complex.find(common);
    if (!sigma || !equal_values(f[*sigma], level.value))
        return std::nullopt;
    return sigma;
}

const char* to_string(Relation r)
{
    switch (r)
    {
    case Relation::G:
        return "g";
    case Relation::GPrime:
        return "gprime";
    case Relation::F:
        return "f";
    }
    return "?";
}

Relation parse_relation(const std::string& name)
{
    if (name == "g")
        return Relation::G;
    if (name == "gprime")
        return Relation::GPrime;
    if (name == "f")
        return Relation::F;
    throw InvalidInput("unknown relation '" + name + "' (expected g, gprime or f)");
}

namespace
{

class UnionFind
{
public:
    explicit UnionFind(std::size_t n)
        : parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
        {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

bool share_g_coordinate(const MdmValue& a, const MdmValue& b)
{
    if (a.base[0] == b.base[0] && a.bump == b.bump)
        return true;
    for (std::size_t i = 1; i < a.base.size(); ++i)
    {
        if (a.base[i] == b.base[i])
            return true;
    }
    return false;
}

bool share_f_coordinate(std::span<const double> a, std::span<const double> b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i] == b[i])
            return true;
    }
    return false;
}

/// Faces of the flow region of every critical simplex: tau in Cl(R_sigma)
/// means sigma connects to tau.
void join_by_flow(const SimplicialComplex& complex, const DiscreteVectorField& field,
                  const std::vector<SimplexId>& critical, UnionFind& uf,
                  const std::function<bool(SimplexId, SimplexId)>& same_coordinate)
{
    std::unordered_map<SimplexId, std::size_t> position;
    for (std::size_t i = 0; i < critical.size(); ++i)
        position.emplace(critical[i], i);

    for (std::size_t i = 0; i < critical.size(); ++i)
    {
        auto region = flow_region(complex, field, critical[i]);
        std::vector<SimplexId> ids;
        for (SimplexId s = 0; s < region.size(); ++s)
        {
            if (region[s])
                ids.push_back(s);
        }
        for (SimplexId t : closure(complex, SimplexSet(std::move(ids))))
        {
            auto it = position.find(t);
            if (it != position.end() && it->second != i && same_coordinate(critical[i], t))
                uf.unite(i, it->second);
        }
    }
}

} // namespace

CriticalComponents critical_components(const SimplicialComplex& complex, const MdmFunction& g,
                                       const DiscreteVectorField& field, const VectorFunction* f,
                                       Relation relation)
{
    if (g.size() != complex.size() || field.size() != complex.size())
        throw InvalidInput("mdm function or field does not match the complex");
    if (relation != Relation::G && (f == nullptr || f->size() != complex.size()))
        throw InvalidInput(std::string("relation ") + to_string(relation) + " needs the input function");

    const auto critical = field.critical_simplices();
    UnionFind uf(critical.size());

    switch (relation)
    {
    case Relation::G:
        join_by_flow(complex, field, critical, uf,
                     [&](SimplexId a, SimplexId b) { return share_g_coordinate(g[a], g[b]); });
        break;
    case Relation::GPrime:
        join_by_flow(complex, field, critical, uf,
                     [&](SimplexId a, SimplexId b) { return share_f_coordinate((*f)[a], (*f)[b]); });
        break;
    case Relation::F:
    {
        auto decomposition = level_sets(complex, *f);
        // Component id of every simplex within its level set.
        std::vector<std::uint32_t> comp(complex.size(), 0);
        std::vector<SimplexSet> comps;
        for (const auto& level : decomposition.levels)
        {
            for (auto& part : connected_components(complex, SimplexSet(level.members)))
            {
                for (SimplexId s : part)
                    comp[s] = static_cast<std::uint32_t>(comps.size());
                comps.push_back(std::move(part));
            }
        }
        // Components touching C: those meeting Cl(C) or St(C).
        std::unordered_map<std::uint32_t, std::unordered_set<std::uint32_t>> touching;
        for (SimplexId s : critical)
        {
            const std::uint32_t c = comp[s];
            if (touching.count(c))
                continue;
            auto& set = touching[c];
            for (SimplexId x : set_union(closure(complex, comps[c]), star(complex, comps[c])))
                set.insert(comp[x]);
        }
        for (std::size_t i = 0; i < critical.size(); ++i)
        {
            for (std::size_t j = i + 1; j < critical.size(); ++j)
            {
                SimplexId a = critical[i], b = critical[j];
                if (share_f_coordinate((*f)[a], (*f)[b]) && touching[comp[a]].count(comp[b]))
                    uf.unite(i, j);
            }
        }
        break;
    }
    }

    std::vector<std::vector<SimplexId>> groups;
    std::unordered_map<std::size_t, std::size_t> group_of_root;
    for (std::size_t i = 0; i < critical.size(); ++i)
    {
        auto [it, inserted] = group_of_root.emplace(uf.find(i), groups.size());
        if (inserted)
            groups.emplace_back();
        groups[it->second].push_back(critical[i]);
    }
    CriticalComponents out{relation, {}};
    for (auto& grp : groups)
        out.blocks.emplace_back(std::move(grp));
    return out;
}

} // namespace mdm
