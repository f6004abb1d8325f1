#include "mdm/homology.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>

namespace mdm
{

const char* to_string(Ring ring)
{
    return ring == Ring::Z ? "Z" : "Z2";
}

namespace
{

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Diagonal entries -> invariant factors: repeatedly replacing (a, b) by
/// (gcd, lcm) yields a divisibility chain without touching the matrix.
std::vector<Integer> invariant_factors(std::vector<Integer> diag)
{
    std::sort(diag.begin(), diag.end());
    for (std::size_t i = 0; i < diag.size(); ++i)
    {
        for (std::size_t j = i + 1; j < diag.size(); ++j)
        {
            if (diag[j] % diag[i] == 0)
                continue;
            Integer g = gcd(diag[i], diag[j]);
            Integer l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    std::vector<Integer> out;
    for (auto& d : diag)
    {
        if (d > 1)
            out.push_back(d);
    }
    return out;
}

/// Diagonalizes a dense matrix in place; returns |diagonal| (nonzero only).
std::vector<Integer> dense_diagonal(DenseIntMatrix a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::vector<Integer> diag;

    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (auto& row : a)
            std::swap(row[i], row[j]);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t)
    {
        // Smallest nonzero |entry| in the trailing block becomes the pivot.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
        {
            for (std::size_t j = t; j < cols; ++j)
            {
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc])))
                {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows)
            break;
        std::swap(a[t], a[pr]);
        swap_cols(t, pc);

        for (;;)
        {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
            {
                if (a[i][t] == 0)
                    continue;
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j)
            {
                if (a[t][j] == 0)
                    continue;
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (clean)
                break;
            // A remainder survived: move the smallest entry of row/column t to the pivot.
            std::size_t br = t, bc = t;
            for (std::size_t i = t + 1; i < rows; ++i)
            {
                if (a[i][t] != 0 && abs(a[i][t]) < abs(a[br][bc]))
                {
                    br = i;
                    bc = t;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j)
            {
                if (a[t][j] != 0 && abs(a[t][j]) < abs(a[br][bc]))
                {
                    br = t;
                    bc = j;
                }
            }
            std::swap(a[t], a[br]);
            swap_cols(t, bc);
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

} // namespace

SnfResult smith_normal_form(SparseIntMatrix m)
{
    auto& cols = m.columns;
    for (auto& c : cols)
    {
        for (auto it = c.begin(); it != c.end();)
            it = it->second == 0 ? c.erase(it) : std::next(it);
    }
    std::vector<std::set<std::uint32_t>> row_support(m.rows);
    for (std::uint32_t j = 0; j < cols.size(); ++j)
    {
        for (auto& [i, v] : cols[j])
            row_support[i].insert(j);
    }

    std::vector<Integer> diag;

    // Unit pivots first: clearing the pivot row by column operations leaves
    // the pivot column removable by row operations that touch nothing else.
    auto eliminate = [&](std::uint32_t r, std::uint32_t c) {
        const Integer u = cols[c].at(r); // +-1, its own inverse
        std::vector<std::uint32_t> others(row_support[r].begin(), row_support[r].end());
        for (std::uint32_t c2 : others)
        {
            if (c2 == c)
                continue;
            const Integer factor = cols[c2].at(r) * u;
            for (auto& [i, v] : cols[c])
            {
                Integer& slot = cols[c2][i];
                slot -= factor * v;
                if (slot == 0)
                {
                    cols[c2].erase(i);
                    row_support[i].erase(c2);
                }
                else
                    row_support[i].insert(c2);
            }
        }
        for (auto& [i, v] : cols[c])
            row_support[i].erase(c);
        cols[c].clear();
        diag.push_back(1);
    };

    for (bool progress = true; progress;)
    {
        progress = false;
        for (std::uint32_t c = 0; c < cols.size(); ++c)
        {
            if (cols[c].empty())
                continue;
            std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
            std::size_t best_cost = std::numeric_limits<std::size_t>::max();
            for (auto& [i, v] : cols[c])
            {
                if (abs(v) != 1)
                    continue;
                std::size_t cost = row_support[i].size();
                if (cost < best_cost)
                {
                    best_cost = cost;
                    best = i;
                }
            }
            if (best != std::numeric_limits<std::uint32_t>::max())
            {
                eliminate(best, c);
                progress = true;
            }
        }
    }

    // Dense remainder.
    std::vector<std::uint32_t> live_cols;
    std::unordered_map<std::uint32_t, std::size_t> live_rows;
    for (std::uint32_t c = 0; c < cols.size(); ++c)
    {
        if (cols[c].empty())
            continue;
        live_cols.push_back(c);
        for (auto& [i, v] : cols[c])
            live_rows.emplace(i, live_rows.size());
    }
    if (!live_cols.empty())
    {
        DenseIntMatrix dense(live_rows.size(), std::vector<Integer>(live_cols.size()));
        for (std::size_t j = 0; j < live_cols.size(); ++j)
        {
            for (auto& [i, v] : cols[live_cols[j]])
                dense[live_rows.at(i)][j] = v;
        }
        auto rest = dense_diagonal(std::move(dense));
        diag.insert(diag.end(), rest.begin(), rest.end());
    }

    SnfResult out;
    out.rank = diag.size();
    out.invariant_factors = invariant_factors(std::move(diag));
    return out;
}

SnfResult smith_normal_form(const DenseIntMatrix& m)
{
    SparseIntMatrix s;
    s.rows = m.size();
    const std::size_t ncols = m.empty() ? 0 : m.front().size();
    s.columns.resize(ncols);
    for (std::uint32_t i = 0; i < m.size(); ++i)
    {
        if (m[i].size() != ncols)
            throw InvalidInput("ragged matrix");
        for (std::uint32_t j = 0; j < ncols; ++j)
        {
            if (m[i][j] != 0)
                s.columns[j][i] = m[i][j];
        }
    }
    return smith_normal_form(std::move(s));
}

std::size_t rank_z2(const SparseIntMatrix& m)
{
    // Column reduction keyed by the lowest nonzero row.
    std::vector<std::uint32_t> pivot_col(m.rows, std::numeric_limits<std::uint32_t>::max());
    std::vector<std::vector<std::uint32_t>> reduced(m.cols());
    std::vector<std::uint32_t> scratch;
    std::size_t rank = 0;
    for (std::uint32_t j = 0; j < m.cols(); ++j)
    {
        auto& col = reduced[j];
        for (auto& [i, v] : m.columns[j])
        {
            if (v % 2 != 0)
                col.push_back(i);
        }
        while (!col.empty())
        {
            std::uint32_t low = col.back();
            std::uint32_t other = pivot_col[low];
            if (other == std::numeric_limits<std::uint32_t>::max())
            {
                pivot_col[low] = j;
                ++rank;
                break;
            }
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), reduced[other].begin(),
                                          reduced[other].end(), std::back_inserter(scratch));
            col.swap(scratch);
        }
    }
    return rank;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, const SimplexSet& basis, int p)
{
    BoundaryMatrix out;
    for (SimplexId s : basis)
    {
        if (complex.dim(s) == p)
            out.col_simplices.push_back(s);
        else if (complex.dim(s) == p - 1)
            out.row_simplices.push_back(s);
    }
    std::unordered_map<SimplexId, std::uint32_t> row_of;
    row_of.reserve(out.row_simplices.size());
    for (std::uint32_t i = 0; i < out.row_simplices.size(); ++i)
        row_of.emplace(out.row_simplices[i], i);

    out.matrix.rows = out.row_simplices.size();
    out.matrix.columns.resize(out.col_simplices.size());
    if (p <= 0)
        return out;
    for (std::uint32_t j = 0; j < out.col_simplices.size(); ++j)
    {
        auto facets = complex.facets(out.col_simplices[j]);
        for (std::size_t k = 0; k < facets.size(); ++k)
        {
            auto it = row_of.find(facets[k]);
            if (it != row_of.end())
                out.matrix.columns[j][it->second] = (k % 2 == 0) ? 1 : -1;
        }
    }
    return out;
}

bool HomologySummary::is_zero() const
{
    for (std::size_t b : betti)
    {
        if (b != 0)
            return false;
    }
    for (const auto& t : torsion)
    {
        if (!t.empty())
            return false;
    }
    return true;
}

HomologySummary chain_homology(const SimplicialComplex& complex, const SimplexSet& basis, Ring ring)
{
    const int top = std::max(complex.dimension(), 0);
    std::vector<std::size_t> count(static_cast<std::size_t>(top) + 1, 0);
    for (SimplexId s : basis)
        ++count[static_cast<std::size_t>(complex.dim(s))];

    // rank[p] = rank of the boundary C_p -> C_{p-1}; rank[0] = rank[top+1] = 0.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(top) + 2);
    for (int p = 1; p <= top; ++p)
    {
        auto bm = boundary_matrix(complex, basis, p);
        if (ring == Ring::Z2)
            rank[p] = rank_z2(bm.matrix);
        else
        {
            auto snf = smith_normal_form(std::move(bm.matrix));
            rank[p] = snf.rank;
            factors[p] = std::move(snf.invariant_factors);
        }
    }

    HomologySummary out;
    out.ring = ring;
    out.betti.resize(static_cast<std::size_t>(top) + 1);
    out.torsion.resize(static_cast<std::size_t>(top) + 1);
    for (std::size_t p = 0; p <= static_cast<std::size_t>(top); ++p)
    {
        out.betti[p] = count[p] - rank[p] - rank[p + 1];
        if (ring == Ring::Z)
            out.torsion[p] = factors[p + 1];
    }
    return out;
}

HomologySummary betti_numbers(const SimplicialComplex& complex, Ring ring)
{
    return chain_homology(complex, all_simplices(complex), ring);
}

HomologySummary relative_homology(const SimplicialComplex& complex, const SimplexSet& s, Ring ring)
{
    if (!is_face_convex(complex, s))
        throw InvalidInput("relative homology needs a face-convex set");
    return chain_homology(complex, s, ring);
}

MorseCountReport morse_count_check(const SimplicialComplex& complex, const DiscreteVectorField& field,
                                   const VectorFunction& f, Ring ring)
{
    if (field.size() != complex.size())
        throw InvalidInput("vector field size does not match the complex");
    if (!is_compatible(field, f))
        throw InvalidInput("vector field is not compatible with the function");

    auto decomposition = level_sets(complex, f);
    const std::size_t dims = static_cast<std::size_t>(std::max(complex.dimension(), 0)) + 1;
    MorseCountReport out;
    for (std::uint32_t l = 0; l < decomposition.levels.size(); ++l)
    {
        const auto& level = decomposition.levels[l];
        LevelMorseCount row{l, level.value, std::vector<std::size_t>(dims, 0), {}};
        for (SimplexId s : level.members)
        {
            if (field.is_critical(s))
                ++row.critical[static_cast<std::size_t>(complex.dim(s))];
        }
        row.rank = relative_homology(complex, SimplexSet(level.members), ring).betti;
        for (std::size_t p = 0; p < dims; ++p)
        {
            if (row.critical[p] < row.rank[p])
                out.inequality_holds = false;
            if (row.critical[p] != row.rank[p])
                out.relative_perfect = false;
        }
        out.levels.push_back(std::move(row));
    }
    return out;
}

} // namespace mdm
