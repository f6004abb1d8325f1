#include "mdm/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mdm
{

VectorFunction::VectorFunction(std::size_t k, std::vector<double> values)
    : k_(k)
    , values_(std::move(values))
{
    if (k_ == 0 && !values_.empty())
        throw InvalidInput("vector function of arity 0 cannot hold values");
    if (k_ != 0 && values_.size() % k_ != 0)
        throw InvalidInput("value count is not a multiple of the arity");
    for (double v : values_)
    {
        if (std::isnan(v))
            throw InvalidInput("NaN is not an admissible function value");
    }
}

VectorFunction VectorFunction::component(std::size_t i) const
{
    std::vector<double> out(size());
    for (SimplexId s = 0; s < size(); ++s)
        out[s] = at(s, i);
    return VectorFunction(1, std::move(out));
}

VectorFunction VectorFunction::scaled(double c) const
{
    std::vector<double> out = values_;
    for (double& v : out)
        v *= c;
    return VectorFunction(k_, std::move(out));
}

bool precedes_eq(std::span<const double> u, std::span<const double> v)
{
    for (std::size_t i = 0; i < u.size(); ++i)
    {
        if (u[i] > v[i])
            return false;
    }
    return true;
}

bool lex_less(std::span<const double> u, std::span<const double> v)
{
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

bool equal_values(std::span<const double> u, std::span<const double> v)
{
    return std::equal(u.begin(), u.end(), v.begin(), v.end());
}

AdmissibilityCheck check_admissible(const SimplicialComplex& complex, const VectorFunction& f)
{
    if (f.size() != complex.size())
        throw InvalidInput("function has " + std::to_string(f.size()) + " values for "
                           + std::to_string(complex.size()) + " simplices");
    for (SimplexId s = 0; s < complex.size(); ++s)
    {
        for (SimplexId a : complex.facets(s))
        {
            if (!precedes_eq(f[a], f[s]))
                return {false, std::make_pair(a, s)};
        }
    }
    return {};
}

void require_admissible(const SimplicialComplex& complex, const VectorFunction& f)
{
    auto check = check_admissible(complex, f);
    if (!check.admissible)
    {
        auto [a, s] = *check.violation;
        throw InvalidInput("function is not admissible: f" + complex.to_string(a)
                           + " is not <= f" + complex.to_string(s));
    }
}

VectorFunction max_extension(const SimplicialComplex& complex, const VertexMap& map)
{
    const std::size_t k = map.k;
    std::vector<double> values(complex.size() * k);
    for (SimplexId s = 0; s < complex.size(); ++s)
    {
        bool first = true;
        for (VertexId v : complex.vertices(s))
        {
            if (v >= map.vertex_count())
                throw InvalidInput("vertex map has no value for vertex " + std::to_string(v));
            auto row = map[v];
            for (std::size_t i = 0; i < k; ++i)
            {
                double& slot = values[s * k + i];
                slot = first ? row[i] : std::max(slot, row[i]);
            }
            first = false;
        }
    }
    return VectorFunction(k, std::move(values));
}

VertexMap coordinate_vertex_map(std::span<const Point3> coords, std::span<const Axis> axes)
{
    VertexMap map;
    map.k = axes.size();
    map.values.reserve(coords.size() * axes.size());
    for (const auto& p : coords)
    {
        for (Axis a : axes)
            map.values.push_back(p[static_cast<std::size_t>(a)]);
    }
    return map;
}

VectorFunction rips_diameter_map(const SimplicialComplex& complex, std::span<const Point3> coords)
{
    std::vector<double> values(complex.size(), 0.0);
    for (SimplexId s = 0; s < complex.size(); ++s)
    {
        auto vs = complex.vertices(s);
        for (VertexId v : vs)
        {
            if (v >= coords.size())
                throw InvalidInput("missing coordinate for vertex " + std::to_string(v));
        }
        double best = 0.0;
        for (std::size_t i = 0; i < vs.size(); ++i)
        {
            for (std::size_t j = i + 1; j < vs.size(); ++j)
            {
                const auto& p = coords[vs[i]];
                const auto& q = coords[vs[j]];
                double d = std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]);
                best = std::max(best, d);
            }
        }
        values[s] = best;
    }
    return VectorFunction(1, std::move(values));
}

VectorFunction zip(std::span<const VectorFunction> parts)
{
    if (parts.empty())
        return {};
    const std::size_t n = parts.front().size();
    std::size_t k = 0;
    for (const auto& p : parts)
    {
        if (p.size() != n)
            throw InvalidInput("cannot zip functions defined on different complexes");
        k += p.arity();
    }
    std::vector<double> values;
    values.reserve(n * k);
    for (SimplexId s = 0; s < n; ++s)
    {
        for (const auto& p : parts)
        {
            auto row = p[s];
            values.insert(values.end(), row.begin(), row.end());
        }
    }
    return VectorFunction(k, std::move(values));
}

std::size_t LevelSetDecomposition::max_level_size() const
{
    std::size_t best = 0;
    for (const auto& l : levels)
        best = std::max(best, l.members.size());
    return best;
}

LevelSetDecomposition level_sets(const SimplicialComplex& complex, const VectorFunction& f)
{
    if (f.size() != complex.size())
        throw InvalidInput("function size does not match the complex");

    std::vector<SimplexId> order(complex.size());
    std::iota(order.begin(), order.end(), SimplexId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](SimplexId a, SimplexId b) { return lex_less(f[a], f[b]); });

    LevelSetDecomposition out;
    out.level_of.assign(complex.size(), 0);
    for (SimplexId s : order)
    {
        if (out.levels.empty() || !equal_values(out.levels.back().value, f[s]))
        {
            auto row = f[s];
            out.levels.push_back(Level{{row.begin(), row.end()}, {}});
        }
        out.levels.back().members.push_back(s);
        out.level_of[s] = static_cast<std::uint32_t>(out.levels.size() - 1);
    }
    return out;
}

} // namespace mdm
