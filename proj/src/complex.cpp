#include "mdm/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace mdm
{

std::size_t SimplicialComplex::TupleHash::operator()(const std::vector<VertexId>& t) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (VertexId v : t)
    {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

SimplexId SimplicialComplex::insert(std::span<const VertexId> vertices)
{
    if (vertices.empty())
        throw InvalidInput("cannot insert an empty simplex");
    for (std::size_t i = 1; i < vertices.size(); ++i)
    {
        if (vertices[i - 1] >= vertices[i])
            throw InvalidInput("simplex vertices must be strictly increasing");
    }
    return insert_sorted(std::vector<VertexId>(vertices.begin(), vertices.end()));
}

SimplexId SimplicialComplex::insert_sorted(const std::vector<VertexId>& tuple)
{
    if (auto it = index_.find(tuple); it != index_.end())
        return it->second;

    const std::size_t n = tuple.size();
    std::vector<SimplexId> facet_ids(n > 1 ? n : 0, kNoSimplex);
    if (n > 1)
    {
        // Faces go in before the simplex, in lexicographic order of the facets
        // (dropping the last vertex gives the smallest tuple).
        std::vector<VertexId> facet(n - 1);
        for (std::size_t k = n; k-- > 0;)
        {
            std::size_t j = 0;
            for (std::size_t i = 0; i < n; ++i)
            {
                if (i != k)
                    facet[j++] = tuple[i];
            }
            facet_ids[k] = insert_sorted(facet);
        }
    }

    const auto id = static_cast<SimplexId>(size());
    vertex_data_.insert(vertex_data_.end(), tuple.begin(), tuple.end());
    offsets_.push_back(vertex_data_.size());
    for (SimplexId f : facet_ids)
        cofacets_[f].push_back(id);
    facets_.push_back(std::move(facet_ids));
    cofacets_.emplace_back();
    index_.emplace(tuple, id);
    max_dim_ = std::max(max_dim_, static_cast<int>(n) - 1);

    if (n == 1)
    {
        if (tuple[0] >= vertex_to_simplex_.size())
            vertex_to_simplex_.resize(tuple[0] + 1, kNoSimplex);
        vertex_to_simplex_[tuple[0]] = id;
    }
    return id;
}

std::optional<SimplexId> SimplicialComplex::find(std::span<const VertexId> vertices) const
{
    std::vector<VertexId> key(vertices.begin(), vertices.end());
    if (auto it = index_.find(key); it != index_.end())
        return it->second;
    return std::nullopt;
}

std::optional<SimplexId> SimplicialComplex::vertex_simplex(VertexId v) const
{
    if (v >= vertex_to_simplex_.size() || vertex_to_simplex_[v] == kNoSimplex)
        return std::nullopt;
    return vertex_to_simplex_[v];
}

std::size_t SimplicialComplex::count_of_dim(int p) const
{
    std::size_t count = 0;
    for (SimplexId s = 0; s < size(); ++s)
    {
        if (dim(s) == p)
            ++count;
    }
    return count;
}

std::vector<SimplexId> SimplicialComplex::simplices_of_dim(int p) const
{
    std::vector<SimplexId> out;
    for (SimplexId s = 0; s < size(); ++s)
    {
        if (dim(s) == p)
            out.push_back(s);
    }
    return out;
}

bool SimplicialComplex::is_face(SimplexId alpha, SimplexId sigma) const
{
    auto a = vertices(alpha);
    auto s = vertices(sigma);
    return std::includes(s.begin(), s.end(), a.begin(), a.end());
}

std::string SimplicialComplex::to_string(SimplexId s) const
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (VertexId v : vertices(s))
    {
        if (!first)
            out << ',';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

// SimplexSet

SimplexSet::SimplexSet(std::vector<SimplexId> ids)
    : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool SimplexSet::contains(SimplexId s) const
{
    return std::binary_search(ids_.begin(), ids_.end(), s);
}


namespace
{

// Output-sensitive traversal: all simplices reachable from s through `step`.
template <class Step>
SimplexSet reach(const SimplexSet& s, Step step)
{
    std::unordered_set<SimplexId> seen(s.begin(), s.end());
    std::vector<SimplexId> stack(s.begin(), s.end());
    while (!stack.empty())
    {
        SimplexId x = stack.back();
        stack.pop_back();
        for (SimplexId y : step(x))
        {
            if (seen.insert(y).second)
                stack.push_back(y);
        }
    }
    return SimplexSet(std::vector<SimplexId>(seen.begin(), seen.end()));
}

} // namespace

SimplexSet closure(const SimplicialComplex& complex, const SimplexSet& s)
{
    return reach(s, [&](SimplexId x) { return complex.facets(x); });
}

SimplexSet star(const SimplicialComplex& complex, const SimplexSet& s)
{
    return reach(s, [&](SimplexId x) { return complex.cofacets(x); });
}

SimplexSet interior(const SimplicialComplex& complex, const SimplexSet& s)
{
    // sigma is interior iff its whole star lies in s; it suffices that every
    // cofacet is interior, and cofacets carry larger ids.
    std::unordered_set<SimplexId> inner;
    for (auto it = s.ids().rbegin(); it != s.ids().rend(); ++it)
    {
        auto cof = complex.cofacets(*it);
        if (std::all_of(cof.begin(), cof.end(), [&](SimplexId c) { return inner.count(c) != 0; }))
            inner.insert(*it);
    }
    return SimplexSet(std::vector<SimplexId>(inner.begin(), inner.end()));
}

SimplexSet boundary(const SimplicialComplex& complex, const SimplexSet& s)
{
    return set_difference(closure(complex, s), interior(complex, s));
}

SimplexSet exit_set(const SimplicialComplex& complex, const SimplexSet& s)
{
    return set_difference(closure(complex, s), s);
}

SimplexSet set_difference(const SimplexSet& a, const SimplexSet& b)
{
    std::vector<SimplexId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return SimplexSet(std::move(out));
}

SimplexSet set_union(const SimplexSet& a, const SimplexSet& b)
{
    std::vector<SimplexId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return SimplexSet(std::move(out));
}

bool is_subset(const SimplexSet& a, const SimplexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace
{

// Component label per position in s, numbered by smallest member.
std::vector<std::uint32_t> local_labels(const SimplicialComplex& complex, const SimplexSet& s)
{
    // Any comparable pair sigma < tau is linked through a facet chain, but the
    // chain may leave s. Linking every member to every face it has in s keeps
    // the relation exact.
    const auto& ids = s.ids();
    std::vector<std::uint32_t> parent(ids.size());
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x)
        {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto position = [&](SimplexId x) -> std::optional<std::uint32_t> {
        auto it = std::lower_bound(ids.begin(), ids.end(), x);
        if (it == ids.end() || *it != x)
            return std::nullopt;
        return static_cast<std::uint32_t>(it - ids.begin());
    };

    std::vector<SimplexId> stack;
    std::unordered_set<SimplexId> seen;
    for (std::uint32_t i = 0; i < ids.size(); ++i)
    {
        seen.clear();
        stack.assign(complex.facets(ids[i]).begin(), complex.facets(ids[i]).end());
        while (!stack.empty())
        {
            SimplexId f = stack.back();
            stack.pop_back();
            if (!seen.insert(f).second)
                continue;
            if (auto j = position(f))
            {
                std::uint32_t a = find(i), b = find(*j);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
            for (SimplexId g : complex.facets(f))
                stack.push_back(g);
        }
    }

    std::vector<std::uint32_t> labels(ids.size());
    std::vector<std::uint32_t> root_label(ids.size(), UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < ids.size(); ++i)
    {
        std::uint32_t r = find(i);
        if (root_label[r] == UINT32_MAX)
            root_label[r] = next++;
        labels[i] = root_label[r];
    }
    return labels;
}

} // namespace

std::vector<SimplexId> component_labels(const SimplicialComplex& complex, const SimplexSet& s)
{
    auto local = local_labels(complex, s);
    std::vector<SimplexId> labels(complex.size(), kNoSimplex);
    for (std::size_t i = 0; i < local.size(); ++i)
        labels[s.ids()[i]] = local[i];
    return labels;
}

std::vector<SimplexSet> connected_components(const SimplicialComplex& complex, const SimplexSet& s)
{
    auto labels = local_labels(complex, s);
    std::vector<std::vector<SimplexId>> groups;
    for (std::size_t i = 0; i < labels.size(); ++i)
    {
        if (labels[i] >= groups.size())
            groups.resize(labels[i] + 1);
        groups[labels[i]].push_back(s.ids()[i]);
    }
    std::vector<SimplexSet> out;
    out.reserve(groups.size());
    for (auto& g : groups)
        out.emplace_back(std::move(g));
    return out;
}

bool is_face_convex(const SimplicialComplex& complex, const SimplexSet& s)
{
    // A gap tau (not in s, between two members) exists iff some simplex of
    // Cl(s) \ s also lies in St(s).
    auto up = star(complex, s);
    for (SimplexId id : exit_set(complex, s))
    {
        if (up.contains(id))
            return false;
    }
    return true;
}

SimplexSet all_simplices(const SimplicialComplex& complex)
{
    std::vector<SimplexId> ids(complex.size());
    std::iota(ids.begin(), ids.end(), SimplexId{0});
    return SimplexSet(std::move(ids));
}

// IndexingMap

IndexingMap::IndexingMap(std::vector<double> values)
    : values_(std::move(values))
{
    std::vector<double> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("indexing map is not injective");
}

std::optional<std::pair<SimplexId, SimplexId>>
IndexingMap::find_violation(const SimplicialComplex& complex) const
{
    if (values_.size() != complex.size())
        throw InvalidInput("indexing map size does not match the complex");
    for (SimplexId s = 0; s < complex.size(); ++s)
    {
        for (SimplexId f : complex.facets(s))
        {
            if (!(values_[f] < values_[s]))
                return std::make_pair(f, s);
        }
    }
    return std::nullopt;
}

IndexingMap insertion_indexing_map(const SimplicialComplex& complex)
{
    std::vector<double> values(complex.size());
    std::iota(values.begin(), values.end(), 0.0);
    return IndexingMap(std::move(values));
}

IndexingMap axis_indexing_map(const SimplicialComplex& complex, std::span<const Point3> coords,
                              Axis axis, Direction direction)
{
    const auto a = static_cast<std::size_t>(axis);
    std::vector<VertexId> order;
    for (VertexId v = 0; v < complex.vertex_bound(); ++v)
    {
        if (!complex.vertex_simplex(v))
            continue;
        if (v >= coords.size())
            throw InvalidInput("missing coordinate for vertex " + std::to_string(v));
        order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(), [&](VertexId l, VertexId r) {
        if (direction == Direction::Increasing)
            return coords[l][a] < coords[r][a];
        return coords[l][a] > coords[r][a];
    });

    std::vector<std::uint32_t> label(complex.vertex_bound(), 0);
    for (std::uint32_t i = 0; i < order.size(); ++i)
        label[order[i]] = i;

    std::vector<std::vector<std::uint32_t>> keys(complex.size());
    for (SimplexId s = 0; s < complex.size(); ++s)
    {
        auto& key = keys[s];
        for (VertexId v : complex.vertices(s))
            key.push_back(label[v]);
        std::sort(key.begin(), key.end(), std::greater<>());
    }
    std::vector<SimplexId> ranking(complex.size());
    std::iota(ranking.begin(), ranking.end(), SimplexId{0});
    std::sort(ranking.begin(), ranking.end(),
              [&](SimplexId l, SimplexId r) { return keys[l] < keys[r]; });

    std::vector<double> values(complex.size());
    for (std::size_t i = 0; i < ranking.size(); ++i)
        values[ranking[i]] = static_cast<double>(i);
    return IndexingMap(std::move(values));
}

} // namespace mdm
