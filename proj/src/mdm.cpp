#include "mdm/mdm.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace mdm
{

std::vector<double> MdmValue::realized(double delta) const
{
    std::vector<double> out = base;
    if (!out.empty())
        out[0] += static_cast<double>(bump) * delta;
    return out;
}

bool precedes_eq(const MdmValue& a, const MdmValue& b)
{
    if (a.base.empty())
        return true;
    if (a.base[0] > b.base[0] || (a.base[0] == b.base[0] && a.bump > b.bump))
        return false;
    for (std::size_t i = 1; i < a.base.size(); ++i)
    {
        if (a.base[i] > b.base[i])
            return false;
    }
    return true;
}

bool incomparable(const MdmValue& a, const MdmValue& b)
{
    return !precedes_eq(a, b) && !precedes_eq(b, a);
}

VectorFunction MdmFunction::realized() const
{
    const std::size_t k = arity();
    std::vector<double> out;
    out.reserve(values_.size() * k);
    for (const auto& v : values_)
    {
        auto r = v.realized(delta_);
        out.insert(out.end(), r.begin(), r.end());
    }
    return VectorFunction(k, std::move(out));
}

std::uint32_t MdmFunction::max_bump() const
{
    std::uint32_t best = 0;
    for (const auto& v : values_)
        best = std::max(best, v.bump);
    return best;
}

double MdmFunction::max_deviation() const
{
    return static_cast<double>(max_bump()) * delta_;
}

MdmFunction MdmFunction::from_function(const VectorFunction& f, double delta, double epsilon)
{
    std::vector<MdmValue> values(f.size());
    for (SimplexId s = 0; s < f.size(); ++s)
    {
        auto row = f[s];
        values[s].base.assign(row.begin(), row.end());
    }
    return MdmFunction(std::move(values), delta, epsilon);
}

double compute_delta(const SimplicialComplex& complex, const VectorFunction& f, double epsilon)
{
    if (!(epsilon > 0.0))
        throw InvalidInput("epsilon must be positive");
    if (complex.empty())
        throw InvalidInput("cannot compute delta on an empty complex");
    if (f.size() != complex.size() || f.arity() == 0)
        throw InvalidInput("function size does not match the complex");

    std::vector<double> first(f.size());
    for (SimplexId s = 0; s < f.size(); ++s)
        first[s] = f.at(s, 0);
    std::sort(first.begin(), first.end());
    first.erase(std::unique(first.begin(), first.end()), first.end());

    const double n = static_cast<double>(complex.size());
    if (first.size() == 1)
        return epsilon / n;
    double gap = first[1] - first[0];
    for (std::size_t i = 2; i < first.size(); ++i)
        gap = std::min(gap, first[i] - first[i - 1]);
    return std::min(epsilon, gap) / n;
}

MdmValue compute_g(const SimplicialComplex& complex, const VectorFunction& f,
                   std::span<const std::optional<MdmValue>> g, SimplexId sigma, std::optional<SimplexId> tau)
{
    auto row = f[sigma];
    MdmValue w{{row.begin(), row.end()}, 0};
    if (complex.dim(sigma) == 0)
        return w;

    auto facets = complex.facets(sigma);
    for (SimplexId a : facets)
    {
        if (tau && a == *tau)
            continue;
        if (!g[a])
            throw InvalidInput("compute_g: facet " + complex.to_string(a) + " of "
                               + complex.to_string(sigma) + " has no value yet");
        const MdmValue& ga = *g[a];
        // f admissible: ga.base[0] <= w.base[0], so only equal bases can raise the bump.
        if (ga.base[0] == w.base[0])
            w.bump = std::max(w.bump, ga.bump);
    }
    for (SimplexId a : facets)
    {
        if (tau && a == *tau)
            continue;
        if (*g[a] == w)
        {
            ++w.bump;
            break;
        }
    }
    return w;
}

ExpansionState::ExpansionState(const SimplicialComplex& c, const VectorFunction& fn, const IndexingMap& i)
    : complex(c)
    , f(fn)
    , index(i)
    , g(c.size())
    , field(c.size())
    , processed(c.size(), 0)
    , queued_one(c.size(), 0)
    , unprocessed_facets(c.size(), 0)
{
}

namespace
{

struct Entry
{
    double priority;
    SimplexId id;
    bool operator>(const Entry& o) const
    {
        return priority > o.priority || (priority == o.priority && id > o.id);
    }
};

using MinQueue = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

} // namespace

void expand_mdm(ExpansionState& st, const Level& level, std::uint32_t level_index)
{
    const auto& K = st.complex;
    LevelStats stats;
    stats.size = level.members.size();

    MinQueue pq_zero;
    MinQueue pq_one;
    auto entry = [&](SimplexId s) { return Entry{st.index(s), s}; };

    for (SimplexId s : level.members)
    {
        std::uint32_t n = 0;
        for (SimplexId a : K.facets(s))
        {
            if (st.level_of[a] == level_index)
                ++n;
        }
        st.unprocessed_facets[s] = n;
    }
    for (SimplexId s : level.members)
    {
        if (st.unprocessed_facets[s] == 0)
            pq_zero.push(entry(s));
        else if (st.unprocessed_facets[s] == 1)
        {
            pq_one.push(entry(s));
            st.queued_one[s] = 1;
        }
    }

    auto mark_processed = [&](SimplexId s) {
        st.processed[s] = 1;
        for (SimplexId c : K.cofacets(s))
        {
            if (st.level_of[c] == level_index)
                --st.unprocessed_facets[c];
        }
    };
    auto add_cofacets = [&](SimplexId s) {
        for (SimplexId c : K.cofacets(s))
        {
            if (st.level_of[c] != level_index || st.processed[c] || st.queued_one[c])
                continue;
            if (st.unprocessed_facets[c] == 1)
            {
                pq_one.push(entry(c));
                st.queued_one[c] = 1;
            }
        }
    };
    auto unprocessed_facet = [&](SimplexId s) {
        for (SimplexId a : K.facets(s))
        {
            if (st.level_of[a] == level_index && !st.processed[a])
                return a;
        }
        return kNoSimplex;
    };

    while (!pq_one.empty() || !pq_zero.empty())
    {
        while (!pq_one.empty())
        {
            SimplexId s = pq_one.top().id;
            pq_one.pop();
            if (st.processed[s])
                continue;
            if (st.unprocessed_facets[s] == 0)
            {
                pq_zero.push(entry(s));
                continue;
            }
            SimplexId t = unprocessed_facet(s);
            MdmValue w = compute_g(K, st.f, st.g, s, t);
            st.g[t] = w;
            st.g[s] = std::move(w);
            st.field.set_pair(t, s);
            st.trace.order.push_back({t, TraceEntry::Role::PairedWithCofacet});
            st.trace.order.push_back({s, TraceEntry::Role::PairedWithFacet});
            ++stats.pairs;
            mark_processed(t);
            mark_processed(s);
            add_cofacets(s);
            add_cofacets(t);
        }
        if (!pq_zero.empty())
        {
            SimplexId s = pq_zero.top().id;
            pq_zero.pop();
            if (st.processed[s])
                continue;
            st.g[s] = compute_g(K, st.f, st.g, s);
            st.field.set_critical(s);
            st.trace.order.push_back({s, TraceEntry::Role::Critical});
            ++stats.critical;
            mark_processed(s);
            add_cofacets(s);
        }
    }
    st.trace.levels.push_back(stats);
}

GenerationResult generate_mdm(const SimplicialComplex& complex, const VectorFunction& f,
                              const IndexingMap& index, double epsilon)
{
    if (!(epsilon > 0.0))
        throw InvalidInput("epsilon must be positive");
    if (index.size() != complex.size())
        throw InvalidInput("indexing map size does not match the complex");
    require_admissible(complex, f);
    if (auto bad = index.find_violation(complex))
        throw InvalidInput("indexing map is not admissible: I" + complex.to_string(bad->first)
                           + " >= I" + complex.to_string(bad->second));
    if (complex.empty())
        return {};

    const double delta = compute_delta(complex, f, epsilon);
    auto decomposition = level_sets(complex, f);

    ExpansionState st(complex, f, index);
    st.level_of = decomposition.level_of;
    for (std::uint32_t i = 0; i < decomposition.levels.size(); ++i)
        expand_mdm(st, decomposition.levels[i], i);

    std::vector<MdmValue> values;
    values.reserve(complex.size());
    for (auto& v : st.g)
        values.push_back(std::move(*v));
    return {MdmFunction(std::move(values), delta, epsilon), std::move(st.field), std::move(st.trace)};
}

std::vector<SimplexId> head(const SimplicialComplex& complex, const MdmFunction& g, SimplexId sigma)
{
    std::vector<SimplexId> out;
    for (SimplexId t : complex.cofacets(sigma))
    {
        if (precedes_eq(g[t], g[sigma]))
            out.push_back(t);
    }
    return out;
}

std::vector<SimplexId> tail(const SimplicialComplex& complex, const MdmFunction& g, SimplexId sigma)
{
    std::vector<SimplexId> out;
    for (SimplexId a : complex.facets(sigma))
    {
        if (precedes_eq(g[sigma], g[a]))
            out.push_back(a);
    }
    return out;
}

MdmCheck verify_mdm(const SimplicialComplex& complex, const MdmFunction& g)
{
    if (g.size() != complex.size())
        throw InvalidInput("mdm function size does not match the complex");
    MdmCheck out;
    for (SimplexId s = 0; s < complex.size(); ++s)
    {
        if (head(complex, g, s).size() > 1)
            out.violations.push_back({1, s, kNoSimplex});
        if (tail(complex, g, s).size() > 1)
            out.violations.push_back({2, s, kNoSimplex});
        for (SimplexId t : complex.cofacets(s))
        {
            if (incomparable(g[t], g[s]))
                out.violations.push_back({3, s, t});
        }
        for (SimplexId a : complex.facets(s))
        {
            if (incomparable(g[a], g[s]))
                out.violations.push_back({4, s, a});
        }
    }
    out.valid = out.violations.empty();
    return out;
}

DiscreteVectorField gradient_of(const SimplicialComplex& complex, const MdmFunction& g)
{
    auto check = verify_mdm(complex, g);
    if (!check.valid)
    {
        const auto& v = check.violations.front();
        throw InvalidInput("function is not mdm: condition " + std::to_string(v.condition)
                           + " fails at " + complex.to_string(v.simplex));
    }
    DiscreteVectorField field(complex.size());
    for (SimplexId s = 0; s < complex.size(); ++s)
    {
        auto h = head(complex, g, s);
        auto t = tail(complex, g, s);
        if (!h.empty() && !t.empty())
            throw InvalidInput("function is not mdm: " + complex.to_string(s) + " has both head and tail");
        if (!h.empty())
            field.set_pair(s, h.front());
        else if (t.empty())
            field.set_critical(s);
    }
    if (auto fc = validate(complex, field); !fc.valid)
        throw InvalidInput("gradient field is inconsistent: " + fc.violation);
    return field;
}

} // namespace mdm
