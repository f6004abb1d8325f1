#ifndef MDM_IO_HPP
#define MDM_IO_HPP

#include "mdm/complex.hpp"
#include "mdm/filtration.hpp"
#include "mdm/homology.hpp"
#include "mdm/mdm.hpp"
#include "mdm/pareto.hpp"
#include "mdm/vector_field.hpp"

#include <json.hpp>

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mdm
{

struct MeshFile
{
    std::vector<Point3> vertices;
    std::vector<std::array<VertexId, 3>> faces;
};

/// ASCII OFF with triangle faces. `source` names the input in error messages.
MeshFile parse_off(std::istream& in, const std::string& source = "<stream>");
MeshFile read_off(const std::string& path);
void write_off(std::ostream& out, const MeshFile& mesh);

/// Inserts each triangle's closure in file order, then any vertex no face
/// uses. Vertex ids are the OFF indices.
SimplicialComplex build_complex(const MeshFile& mesh);

/// One row per vertex, k comma-separated numbers (k = 0: take the width of
/// the first row). Blank lines and lines starting with '#' are skipped.
VertexMap parse_vertex_function(std::istream& in, std::size_t k, const std::string& source = "<stream>");
VertexMap read_vertex_function(const std::string& path, std::size_t k = 0);

/// Optional per-cell data; absent members are left out of the file.
struct VtkAnnotations
{
    const DiscreteVectorField* field = nullptr;
    const SimplexSet* pareto = nullptr;
    const std::vector<std::int64_t>* component = nullptr; // per simplex, -1 if none
    const MdmFunction* g = nullptr;
    const VectorFunction* f = nullptr;
};

/// Legacy ASCII UNSTRUCTURED_GRID; cell i is simplex i.
void write_vtk(std::ostream& out, const SimplicialComplex& complex, std::span<const Point3> coords,
               const VtkAnnotations& annotations = {});
void write_vtk(const std::string& path, const SimplicialComplex& complex, std::span<const Point3> coords,
               const VtkAnnotations& annotations = {});

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

struct AnalysisReport
{
    std::vector<std::size_t> simplices;   // |K_p|
    std::vector<std::size_t> critical;    // m_p
    std::vector<std::size_t> betti;
    std::vector<double> percent_critical; // 100 m_p / |K_p|
    std::size_t function_values = 0;      // |f(K)|
    std::size_t lambda = 0;               // max |L_u|
    std::optional<bool> relative_perfect;
    std::map<std::string, std::size_t> components; // relation name -> class count
    std::optional<std::size_t> pareto_components;
    double delta = 0.0;
    double epsilon = 0.0;
};

AnalysisReport make_report(const SimplicialComplex& complex, const VectorFunction& f, const GenerationResult& run,
                           const HomologySummary& homology);

nlohmann::json to_json(const AnalysisReport& report);

} // namespace mdm

#endif
