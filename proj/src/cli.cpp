#include "isocover/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "isocover/certificate_io.hpp"
#include "isocover/cover.hpp"
#include "isocover/errors.hpp"
#include "isocover/generators.hpp"
#include "isocover/graph_io.hpp"
#include "isocover/incidence_coloring.hpp"
#include "isocover/verifiers.hpp"
#include "isocover/width_oracles.hpp"

namespace isocover {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text << std::flush;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text))
        throw InputError("cannot write " + path);
}

// First non-empty line of a graph6 file.
Graph read_graph6_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return from_graph6(line);
    throw InputError(path + " holds no graph");
}

struct GenerateOptions {
    std::string family;
    int order = 0;
    std::string input;
    std::string out;
};

int wall_parameter(const GenerateOptions& o, const Graph* x) {
    if (o.order > 0)
        return o.order;
    if (auto n = wall_order(*x))
        return *n;
    throw InputError("family " + o.family + " needs a wall: pass --order N or a wall in graph6");
}

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
    std::optional<Graph> x;
    if (!o.input.empty())
        x = read_graph6_file(o.input);
    else
        x = wall(o.order);
    if (x->size() == 0)
        throw InputError("input graph has no edges");
    if (!is_connected(*x))
        throw InputError("input graph is disconnected");

    CoverCertificate cert;
    if (o.family == "trees") {
        cert = build_tree_cover(*x, greedy_coloring(*x));
    } else if (o.family == "k4") {
        const int n = wall_parameter(o, &*x);
        cert = build_tree_cover(wall(n), wall_3_coloring(n));
    } else if (o.family == "k3") {
        cert = build_three_cover_wall(wall_parameter(o, &*x));
    } else {
        cert = build_two_cover(*x);
    }

    const auto reports = verify_certificate(cert);
    if (!all_pass(reports)) {
        err << "generated certificate failed verification; nothing written\n";
        for (const auto& r : reports)
            if (!r.pass)
                err << "FAIL " << r.check << ": " << r.witness << "\n";
        return kExitRefuted;
    }
    write_output(o.out, certificate_to_json(cert), out);
    if (!o.out.empty() && o.out != "-")
        out << "wrote " << o.out << ": family " << o.family << ", |V|=" << cert.graph.order()
            << ", |E|=" << cert.graph.size() << ", parts=" << cert.parts.size() << ", " << reports.size()
            << " checks pass\n";
    return kExitPass;
}

int cmd_verify(const std::string& path, bool json, std::ostream& out) {
    const auto cert = certificate_from_json(read_file(path));
    const auto reports = verify_certificate(cert);
    if (json) {
        out << reports_to_json(reports);
    } else {
        for (const auto& r : reports) {
            out << (r.pass ? "PASS " : "FAIL ") << r.check;
            if (!r.pass)
                out << ": " << r.witness;
            out << "\n";
        }
        out << (all_pass(reports) ? "certificate verified" : "certificate refuted") << "\n";
    }
    return all_pass(reports) ? kExitPass : kExitRefuted;
}

int cmd_export(const std::string& path, const std::string& format, const std::string& dest, std::ostream& out) {
    const auto cert = certificate_from_json(read_file(path));
    if (format == "dot")
        write_output(dest, certificate_to_dot(cert), out);
    else
        write_output(dest, to_graph6(cert.graph) + "\n", out);
    return kExitPass;
}

int cmd_widths(const std::string& path, std::optional<std::size_t> bound, std::ostream& out) {
    const Graph g = read_graph6_file(path);
    auto tw = exact_treewidth(g, bound);
    auto pw = exact_pathwidth(g, bound);
    auto td = exact_treedepth(g, bound);
    out << widths_to_json(g, tw, pw, td);
    return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Isometric edge covers: build, verify and export certificates"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Build a cover certificate and verify it before writing");
    generate->add_option("--family", gen.family, "Construction family")
        ->required()
        ->check(CLI::IsMember({"trees", "k4", "k3", "k2"}));
    auto* order_opt = generate->add_option("--order", gen.order, "Use wall(N) as the source graph")
                          ->check(CLI::PositiveNumber);
    auto* input_opt = generate->add_option("--input", gen.input, "Source graph in graph6");
    order_opt->excludes(input_opt);
    input_opt->excludes(order_opt);
    generate->add_option("--out", gen.out, "Certificate path ('-' or omitted: stdout)");

    std::string verify_path;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Run the full verifier suite on a certificate");
    verify->add_option("certificate", verify_path, "Certificate JSON")->required();
    verify->add_flag("--json", verify_json, "Print the reports as JSON");

    std::string export_path, export_format, export_out;
    auto* exporter = app.add_subcommand("export", "Render a certificate as DOT or its graph as graph6");
    exporter->add_option("certificate", export_path, "Certificate JSON")->required();
    exporter->add_option("--format", export_format, "Output format")
        ->required()
        ->check(CLI::IsMember({"dot", "graph6"}));
    exporter->add_option("--out", export_out, "Output path ('-' or omitted: stdout)");

    std::string widths_path;
    std::optional<std::size_t> widths_bound;
    auto* widths = app.add_subcommand("widths", "Exact treewidth, pathwidth and treedepth of a small graph");
    widths->add_option("graph", widths_path, "Graph in graph6")->required();
    widths->add_option("--bound", widths_bound, "Largest vertex count the oracles may take");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        // --help on the tool or on a subcommand.
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            if (gen.order == 0 && gen.input.empty()) {
                err << "error: generate needs --order N or --input FILE\n";
                return kExitUsage;
            }
            return cmd_generate(gen, out, err);
        }
        if (verify->parsed())
            return cmd_verify(verify_path, verify_json, out);
        if (exporter->parsed())
            return cmd_export(export_path, export_format, export_out, out);
        return cmd_widths(widths_path, widths_bound, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const SizeError& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

} // namespace isocover
