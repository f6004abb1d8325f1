#include "mdm/cli.hpp"

#include "mdm/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace mdm
{

namespace
{

struct Options
{
    std::string mesh;
    std::string func;
    std::string axes;
    bool rips = false;
    double eps = 1e-3;
    std::string index = "insertion";
    std::string out;
    std::string report;
    std::string ring = "z";
    std::string relation = "g";
};

struct Loaded
{
    MeshFile mesh;
    SimplicialComplex complex;
    VectorFunction f;
};

Ring parse_ring(const std::string& s)
{
    if (s == "z")
        return Ring::Z;
    if (s == "z2")
        return Ring::Z2;
    throw InvalidInput("unknown ring '" + s + "' (expected z or z2)");
}

VectorFunction load_function(const Options& o, const MeshFile& mesh, const SimplicialComplex& complex)
{
    const int chosen = !o.func.empty() + !o.axes.empty() + o.rips;
    if (chosen == 0)
        throw InvalidInput("choose a function with --func, --axes or --rips");
    if (chosen > 1)
        throw InvalidInput("--func, --axes and --rips are mutually exclusive");
    if (o.rips)
        return rips_diameter_map(complex, mesh.vertices);
    if (!o.func.empty())
    {
        auto map = read_vertex_function(o.func);
        if (map.vertex_count() != mesh.vertices.size())
            throw InvalidInput(o.func + ": " + std::to_string(map.vertex_count()) + " rows for "
                               + std::to_string(mesh.vertices.size()) + " vertices");
        return max_extension(complex, map);
    }
    if (o.axes == "const0")
        return VectorFunction(1, std::vector<double>(complex.size(), 0.0));
    std::vector<Axis> axes;
    for (char c : o.axes)
    {
        if (c == 'x')
            axes.push_back(Axis::X);
        else if (c == 'y')
            axes.push_back(Axis::Y);
        else if (c == 'z')
            axes.push_back(Axis::Z);
        else
            throw InvalidInput("unknown axes '" + o.axes + "'");
    }
    if (axes.empty())
        throw InvalidInput("empty --axes");
    return max_extension(complex, coordinate_vertex_map(mesh.vertices, axes));
}

IndexingMap load_index(const Options& o, const Loaded& in)
{
    if (o.index == "insertion")
        return insertion_indexing_map(in.complex);
    if (o.index.size() == 2 && (o.index[1] == '+' || o.index[1] == '-') && o.index[0] >= 'x' && o.index[0] <= 'z')
    {
        auto axis = static_cast<Axis>(o.index[0] - 'x');
        auto dir = o.index[1] == '+' ? Direction::Increasing : Direction::Decreasing;
        return axis_indexing_map(in.complex, in.mesh.vertices, axis, dir);
    }
    throw InvalidInput("unknown index '" + o.index + "' (expected insertion, x+, x-, y+, y-, z+ or z-)");
}

Loaded load(const Options& o, bool need_function)
{
    Loaded in;
    in.mesh = read_off(o.mesh);
    in.complex = build_complex(in.mesh);
    if (need_function)
        in.f = load_function(o, in.mesh, in.complex);
    return in;
}

void print_counts(std::ostream& out, const char* label, const std::vector<std::size_t>& v)
{
    out << label << ':';
    for (auto x : v)
        out << ' ' << x;
    out << '\n';
}

void write_json(const std::string& path, const nlohmann::json& j)
{
    std::ofstream f(path);
    if (!f)
        throw InvalidInput("cannot write " + path);
    f << j.dump(2) << '\n';
}

std::vector<std::int64_t> block_labels(std::size_t n, const std::vector<SimplexSet>& blocks)
{
    std::vector<std::int64_t> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
    {
        for (SimplexId s : blocks[b])
            labels[s] = static_cast<std::int64_t>(b);
    }
    return labels;
}

int cmd_generate(const Options& o, std::ostream& out)
{
    auto in = load(o, true);
    auto ring = parse_ring(o.ring);
    auto run = generate_mdm(in.complex, in.f, load_index(o, in), o.eps);
    auto homology = betti_numbers(in.complex, ring);
    auto report = make_report(in.complex, in.f, run, homology);
    report.relative_perfect = morse_count_check(in.complex, run.field, in.f, ring).relative_perfect;

    print_counts(out, "simplices", report.simplices);
    print_counts(out, "critical", report.critical);
    print_counts(out, "betti", report.betti);
    out << "levels: " << report.function_values << " lambda: " << report.lambda << '\n';
    out << "relative_perfect: " << (*report.relative_perfect ? "yes" : "no") << '\n';
    out << "delta: " << format_double(run.g.delta()) << '\n';

    if (!o.report.empty())
        write_json(o.report, to_json(report));
    if (!o.out.empty())
        write_vtk(o.out, in.complex, in.mesh.vertices, {&run.field, nullptr, nullptr, &run.g, &in.f});
    return 0;
}

int cmd_betti(const Options& o, std::ostream& out)
{
    auto in = load(o, false);
    auto h = betti_numbers(in.complex, parse_ring(o.ring));
    out << "ring: " << to_string(h.ring) << '\n';
    print_counts(out, "betti", h.betti);
    for (std::size_t p = 0; p < h.torsion.size(); ++p)
    {
        if (h.torsion[p].empty())
            continue;
        out << "torsion H" << p << ':';
        for (const auto& t : h.torsion[p])
            out << ' ' << t;
        out << '\n';
    }
    return 0;
}

int cmd_pareto(const Options& o, std::ostream& out)
{
    auto in = load(o, true);
    auto pareto = pareto_set(in.complex, in.f, parse_ring(o.ring));
    auto comps = pareto_components(in.complex, pareto);
    out << "pareto_values: " << pareto.critical_levels.size() << '\n';
    out << "pareto_simplices: " << pareto.simplices.size() << '\n';
    out << "pareto_components: " << comps.size() << '\n';
    if (!o.report.empty())
    {
        nlohmann::json j;
        j["schema"] = 1;
        j["pareto_values"] = pareto.critical_levels.size();
        j["pareto_simplices"] = pareto.simplices.size();
        j["pareto_components"] = comps.size();
        write_json(o.report, j);
    }
    if (!o.out.empty())
    {
        auto labels = block_labels(in.complex.size(), comps);
        write_vtk(o.out, in.complex, in.mesh.vertices, {nullptr, &pareto.simplices, &labels, nullptr, &in.f});
    }
    return 0;
}

int cmd_components(const Options& o, std::ostream& out)
{
    auto in = load(o, true);
    auto relation = parse_relation(o.relation);
    auto run = generate_mdm(in.complex, in.f, load_index(o, in), o.eps);
    auto comps = critical_components(in.complex, run.g, run.field, &in.f, relation);
    out << "relation: " << to_string(relation) << '\n';
    out << "critical: " << run.field.critical_simplices().size() << '\n';
    out << "components: " << comps.blocks.size() << '\n';
    if (!o.report.empty())
    {
        nlohmann::json j;
        j["schema"] = 1;
        j["relation"] = to_string(relation);
        j["components"] = comps.blocks.size();
        std::vector<std::vector<SimplexId>> blocks;
        for (const auto& b : comps.blocks)
            blocks.push_back(b.ids());
        j["blocks"] = blocks;
        write_json(o.report, j);
    }
    if (!o.out.empty())
    {
        auto labels = block_labels(in.complex.size(), comps.blocks);
        write_vtk(o.out, in.complex, in.mesh.vertices, {&run.field, nullptr, &labels, &run.g, &in.f});
    }
    return 0;
}

int cmd_check(const Options& o, std::ostream& out)
{
    auto in = load(o, true);
    auto adm = check_admissible(in.complex, in.f);
    if (!adm.admissible)
    {
        auto [a, s] = *adm.violation;
        out << "admissible: no (" << in.complex.to_string(a) << " vs " << in.complex.to_string(s) << ")\n";
        return 1;
    }
    out << "admissible: yes\n";
    auto as_g = MdmFunction::from_function(in.f);
    auto mdm_check = verify_mdm(in.complex, as_g);
    out << "mdm: " << (mdm_check.valid ? "yes" : "no") << '\n';
    if (!mdm_check.valid)
    {
        out << "violations: " << mdm_check.violations.size() << '\n';
        return 0;
    }
    auto field = gradient_of(in.complex, as_g);
    auto valid = validate(in.complex, field);
    auto acyclic = is_acyclic(in.complex, field);
    out << "field_valid: " << (valid.valid ? "yes" : "no") << '\n';
    out << "acyclic: " << (acyclic.acyclic ? "yes" : "no") << '\n';
    print_counts(out, "critical", field.critical_counts(in.complex));
    return valid.valid && acyclic.acyclic ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multiparameter discrete Morse gradient fields on triangle meshes", "mdm"};
    app.require_subcommand(1);
    Options o;

    auto add_mesh = [&](CLI::App* sub) { sub->add_option("mesh", o.mesh, "ASCII OFF mesh")->required(); };
    auto add_function = [&](CLI::App* sub) {
        sub->add_option("--func", o.func, "CSV of per-vertex values (max-extended)");
        sub->add_option("--axes", o.axes, "coordinates as components: xy, xz, yz, ... or const0");
        sub->add_flag("--rips", o.rips, "diameter of each simplex");
    };
    auto add_run = [&](CLI::App* sub) {
        sub->add_option("--eps", o.eps, "approximation bound epsilon")->check(CLI::PositiveNumber);
        sub->add_option("--index", o.index, "indexing map: insertion, x+, x-, y+, y-, z+, z-");
    };
    auto add_outputs = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "VTK output");
        sub->add_option("--report", o.report, "JSON report");
    };
    auto add_ring = [&](CLI::App* sub) { sub->add_option("--ring", o.ring, "coefficients: z or z2"); };

    auto* generate = app.add_subcommand("generate", "build an mdm function and its gradient field");
    add_mesh(generate);
    add_function(generate);
    add_run(generate);
    add_outputs(generate);
    add_ring(generate);

    auto* betti = app.add_subcommand("betti", "Betti numbers and torsion");
    add_mesh(betti);
    add_ring(betti);

    auto* pareto = app.add_subcommand("pareto", "discrete Pareto set");
    add_mesh(pareto);
    add_function(pareto);
    add_outputs(pareto);
    add_ring(pareto);

    auto* components = app.add_subcommand("components", "critical components");
    add_mesh(components);
    add_function(components);
    add_run(components);
    add_outputs(components);
    components->add_option("--relation", o.relation, "g, gprime or f");

    auto* check = app.add_subcommand("check", "admissibility and mdm status of the input function");
    add_mesh(check);
    add_function(check);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e, out, err);
    }

    try
    {
        if (generate->parsed())
            return cmd_generate(o, out);
        if (betti->parsed())
            return cmd_betti(o, out);
        if (pareto->parsed())
            return cmd_pareto(o, out);
        if (components->parsed())
            return cmd_components(o, out);
        if (check->parsed())
            return cmd_check(o, out);
    }
    catch (const std::exception& e)
    {
        err << "mdm: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

} // namespace mdm
