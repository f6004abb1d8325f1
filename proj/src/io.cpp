#include "mdm/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mdm
{

namespace
{

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what)
{
    throw InvalidInput(source + ":" + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s)
{
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

/// Next non-blank, comment-free line; false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& number)
{
    std::string raw;
    while (std::getline(in, raw))
    {
        ++number;
        line = strip_comment(raw);
        if (!blank(line))
            return true;
    }
    return false;
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    return in;
}

} // namespace

MeshFile parse_off(std::istream& in, const std::string& source)
{
    std::string line;
    std::size_t number = 0;
    if (!next_line(in, line, number))
        fail(source, number, "empty file");

    std::istringstream header(line);
    std::string magic;
    header >> magic;
    if (magic != "OFF")
        fail(source, number, "expected OFF header, found '" + magic + "'");

    // Counts may share the header line.
    std::string rest;
    std::getline(header, rest);
    if (blank(rest) && !next_line(in, line, number))
        fail(source, number, "missing counts line");
    if (!blank(rest))
        line = rest;

    long nv = -1, nf = -1, ne = 0;
    {
        std::istringstream counts(line);
        if (!(counts >> nv >> nf) || nv < 0 || nf < 0)
            fail(source, number, "malformed counts line");
        counts >> ne;
    }

    MeshFile mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(nv));
    for (long i = 0; i < nv; ++i)
    {
        if (!next_line(in, line, number))
            fail(source, number, "expected " + std::to_string(nv) + " vertices, got " + std::to_string(i));
        std::istringstream row(line);
        Point3 p{};
        if (!(row >> p[0] >> p[1] >> p[2]))
            fail(source, number, "malformed vertex line");
        mesh.vertices.push_back(p);
    }
    mesh.faces.reserve(static_cast<std::size_t>(nf));
    for (long i = 0; i < nf; ++i)
    {
        if (!next_line(in, line, number))
            fail(source, number, "expected " + std::to_string(nf) + " faces, got " + std::to_string(i));
        std::istringstream row(line);
        long n = 0;
        if (!(row >> n))
            fail(source, number, "malformed face line");
        if (n != 3)
            fail(source, number, "only triangle faces are supported (found " + std::to_string(n) + " vertices)");
        std::array<VertexId, 3> face{};
        for (auto& v : face)
        {
            long idx = -1;
            if (!(row >> idx))
                fail(source, number, "malformed face line");
            if (idx < 0 || idx >= nv)
                fail(source, number, "vertex index " + std::to_string(idx) + " out of range (" + std::to_string(nv)
                                         + " vertices)");
            v = static_cast<VertexId>(idx);
        }
        if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2])
            fail(source, number, "degenerate face");
        mesh.faces.push_back(face);
    }
    return mesh;
}

MeshFile read_off(const std::string& path)
{
    auto in = open_input(path);
    return parse_off(in, path);
}

void write_off(std::ostream& out, const MeshFile& mesh)
{
    out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
    for (const auto& p : mesh.vertices)
        out << format_double(p[0]) << ' ' << format_double(p[1]) << ' ' << format_double(p[2]) << '\n';
    for (const auto& f : mesh.faces)
        out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

SimplicialComplex build_complex(const MeshFile& mesh)
{
    SimplicialComplex complex;
    for (auto face : mesh.faces)
    {
        std::sort(face.begin(), face.end());
        complex.insert(std::span<const VertexId>(face));
    }
    for (VertexId v = 0; v < mesh.vertices.size(); ++v)
    {
        if (!complex.vertex_simplex(v))
            complex.insert({v});
    }
    return complex;
}

VertexMap parse_vertex_function(std::istream& in, std::size_t k, const std::string& source)
{
    VertexMap map;
    map.k = k;
    std::string line;
    std::size_t number = 0;
    while (next_line(in, line, number))
    {
        std::vector<double> row;
        std::stringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
        {
            auto first = cell.find_first_not_of(" \t\r");
            auto last = cell.find_last_not_of(" \t\r");
            if (first == std::string::npos)
                fail(source, number, "empty field");
            std::string_view text(cell.data() + first, last - first + 1);
            if (text.front() == '+')
                text.remove_prefix(1);
            double value = 0.0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || end != text.data() + text.size())
                fail(source, number, "non-numeric field '" + std::string(text) + "'");
            row.push_back(value);
        }
        if (map.k == 0)
            map.k = row.size();
        if (row.size() != map.k)
            fail(source, number, "expected " + std::to_string(map.k) + " values, found " + std::to_string(row.size()));
        map.values.insert(map.values.end(), row.begin(), row.end());
    }
    if (map.values.empty())
        throw InvalidInput(source + ": no rows");
    return map;
}

VertexMap read_vertex_function(const std::string& path, std::size_t k)
{
    auto in = open_input(path);
    return parse_vertex_function(in, k, path);
}

std::string format_double(double x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

void write_vtk(std::ostream& out, const SimplicialComplex& complex, std::span<const Point3> coords,
               const VtkAnnotations& ann)
{
    if (complex.dimension() > 3)
        throw InvalidInput("VTK export supports simplices up to dimension 3");
    const std::size_t n = complex.size();

    out << "# vtk DataFile Version 3.0\nmdm\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << coords.size() << " double\n";
    for (const auto& p : coords)
        out << format_double(p[0]) << ' ' << format_double(p[1]) << ' ' << format_double(p[2]) << '\n';

    std::size_t total = 0;
    for (SimplexId s = 0; s < n; ++s)
        total += complex.vertices(s).size() + 1;
    out << "CELLS " << n << ' ' << total << '\n';
    for (SimplexId s = 0; s < n; ++s)
    {
        auto vs = complex.vertices(s);
        out << vs.size();
        for (VertexId v : vs)
        {
            if (v >= coords.size())
                throw InvalidInput("no coordinates for vertex " + std::to_string(v));
            out << ' ' << v;
        }
        out << '\n';
    }
    static constexpr int kCellType[] = {1, 3, 5, 10};
    out << "CELL_TYPES " << n << '\n';
    for (SimplexId s = 0; s < n; ++s)
        out << kCellType[complex.dim(s)] << '\n';

    if (!ann.field && !ann.pareto && !ann.component && !ann.g && !ann.f)
        return;
    out << "CELL_DATA " << n << '\n';
    auto int_array = [&](const char* name, auto value) {
        out << "SCALARS " << name << " int 1\nLOOKUP_TABLE default\n";
        for (SimplexId s = 0; s < n; ++s)
            out << value(s) << '\n';
    };
    auto double_array = [&](const std::string& name, auto value) {
        out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (SimplexId s = 0; s < n; ++s)
            out << format_double(value(s)) << '\n';
    };

    if (ann.field)
    {
        int_array("criticality", [&](SimplexId s) { return ann.field->is_critical(s) ? complex.dim(s) : -1; });
        int_array("partner", [&](SimplexId s) {
            SimplexId p = ann.field->partner(s);
            return p == kNoSimplex ? std::int64_t{-1} : std::int64_t{p};
        });
    }
    if (ann.pareto)
        int_array("pareto", [&](SimplexId s) { return ann.pareto->contains(s) ? 1 : 0; });
    if (ann.component)
        int_array("component", [&](SimplexId s) { return (*ann.component)[s]; });
    if (ann.g)
    {
        for (std::size_t i = 0; i < ann.g->arity(); ++i)
            double_array("g_" + std::to_string(i), [&](SimplexId s) { return (*ann.g)[s].realized(i, ann.g->delta()); });
    }
    if (ann.f)
    {
        for (std::size_t i = 0; i < ann.f->arity(); ++i)
            double_array("f_" + std::to_string(i), [&](SimplexId s) { return ann.f->at(s, i); });
    }
}

void write_vtk(const std::string& path, const SimplicialComplex& complex, std::span<const Point3> coords,
               const VtkAnnotations& annotations)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write " + path);
    write_vtk(out, complex, coords, annotations);
    if (!out)
        throw InvalidInput("write failed: " + path);
}

AnalysisReport make_report(const SimplicialComplex& complex, const VectorFunction& f, const GenerationResult& run,
                           const HomologySummary& homology)
{
    AnalysisReport r;
    const std::size_t dims = static_cast<std::size_t>(std::max(complex.dimension(), 0)) + 1;
    r.simplices.assign(dims, 0);
    for (SimplexId s = 0; s < complex.size(); ++s)
        ++r.simplices[static_cast<std::size_t>(complex.dim(s))];
    r.critical = run.field.critical_counts(complex);
    r.critical.resize(dims, 0);
    r.betti = homology.betti;
    for (std::size_t p = 0; p < dims; ++p)
        r.percent_critical.push_back(r.simplices[p] == 0 ? 0.0 : 100.0 * static_cast<double>(r.critical[p])
                                                                       / static_cast<double>(r.simplices[p]));
    auto levels = level_sets(complex, f);
    r.function_values = levels.levels.size();
    r.lambda = levels.max_level_size();
    r.delta = run.g.delta();
    r.epsilon = run.g.epsilon();
    return r;
}

nlohmann::json to_json(const AnalysisReport& r)
{
    nlohmann::json j;
    j["schema"] = 1;
    j["simplices"] = r.simplices;
    j["critical"] = r.critical;
    j["betti"] = r.betti;
    j["percent_critical"] = r.percent_critical;
    j["function_values"] = r.function_values;
    j["lambda"] = r.lambda;
    if (r.relative_perfect)
        j["relative_perfect"] = *r.relative_perfect;
    if (!r.components.empty())
        j["components"] = r.components;
    if (r.pareto_components)
        j["pareto_components"] = *r.pareto_components;
    j["delta"] = r.delta;
    j["epsilon"] = r.epsilon;
    return j;
}

} // namespace mdm
