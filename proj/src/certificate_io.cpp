#include "isocover/certificate_io.hpp"

#include <set>

#include <json.hpp>

#include "isocover/errors.hpp"
#include "isocover/graph_io.hpp"

namespace isocover {

namespace {

using Json = nlohmann::ordered_json;

Json label_array(std::span<const VertexLabel> labels) {
    Json out = Json::array();
    for (const auto& v : labels)
        out.push_back(v.str());
    return out;
}

std::vector<VertexLabel> parse_labels(const Json& arr, const char* field) {
    if (!arr.is_array())
        throw InputError(std::string(field) + " must be an array of vertex labels");
    std::vector<VertexLabel> out;
    for (const auto& item : arr) {
        if (!item.is_string())
            throw InputError(std::string(field) + " holds a non-string label");
        out.push_back(VertexLabel::parse(item.get<std::string>()));
    }
    return out;
}

const Json& field(const Json& obj, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end())
        throw InputError(std::string("missing field \"") + name + "\"");
    return *it;
}

std::string get_string(const Json& obj, const char* name) {
    const auto& v = field(obj, name);
    if (!v.is_string())
        throw InputError(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
}

Graph read_graph(const Json& doc, const char* g6_field, const char* labels_field) {
    auto labels = parse_labels(field(doc, labels_field), labels_field);
    return from_graph6(get_string(doc, g6_field), labels);
}

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json report_json(const Report& r) {
    Json out;
    out["check"] = r.check;
    out["pass"] = r.pass;
    if (!r.pass)
        out["witness"] = r.witness;
    return out;
}

// Colour-blind friendly qualitative palette, cycled when there are more parts.
constexpr const char* kPalette[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44",
                                    "#66ccee", "#aa3377", "#bbbbbb", "#ee8866"};

} // namespace

std::string certificate_to_json(const CoverCertificate& cert) {
    Json doc;
    doc["format"] = kCertificateFormat;
    doc["graph"] = to_graph6(cert.graph);
    doc["graph_labels"] = label_array(cert.graph.vertices());
    doc["source"] = to_graph6(cert.source);
    doc["source_labels"] = label_array(cert.source.vertices());

    Json sub = Json::array();
    for (const auto& [e, path] : cert.subdivision.paths) {
        Json item;
        item["edge"] = Json::array({e.first.str(), e.second.str()});
        item["path"] = label_array(path);
        sub.push_back(std::move(item));
    }
    doc["subdivision"] = std::move(sub);

    Json parts = Json::array();
    for (const auto& p : cert.parts) {
        Json item;
        item["role"] = p.role.str();
        if (p.apex)
            item["apex"] = p.apex->str();
        if (p.radius)
            item["radius"] = *p.radius;
        item["vertices"] = label_array(p.vertices);
        parts.push_back(std::move(item));
    }
    doc["parts"] = std::move(parts);
    return doc.dump(2) + "\n";
}

CoverCertificate certificate_from_json(std::string_view text) {
    const Json doc = parse_document(text);
    if (!doc.is_object())
        throw InputError("certificate must be a JSON object");
    if (get_string(doc, "format") != kCertificateFormat)
        throw InputError("unsupported certificate format \"" + get_string(doc, "format") + "\"");

    CoverCertificate cert;
    cert.graph = read_graph(doc, "graph", "graph_labels");
    cert.source = read_graph(doc, "source", "source_labels");

    const auto& sub = field(doc, "subdivision");
    if (!sub.is_array())
        throw InputError("subdivision must be an array");
    for (const auto& item : sub) {
        if (!item.is_object())
            throw InputError("subdivision entries must be objects");
        auto ends = parse_labels(field(item, "edge"), "edge");
        if (ends.size() != 2 || ends[0] == ends[1])
            throw InputError("subdivision edge must name two distinct vertices");
        auto key = make_source_edge(ends[0], ends[1]);
        if (key.first != ends[0])
            throw InputError("subdivision edge " + ends[0].str() + " " + ends[1].str() + " not in canonical order");
        if (!cert.subdivision.paths.emplace(key, parse_labels(field(item, "path"), "path")).second)
            throw InputError("duplicate subdivision entry for " + key.first.str() + " " + key.second.str());
    }

    const auto& parts = field(doc, "parts");
    if (!parts.is_array())
        throw InputError("parts must be an array");
    for (const auto& item : parts) {
        if (!item.is_object())
            throw InputError("parts entries must be objects");
        Part p;
        p.role = Role::parse(get_string(item, "role"));
        p.vertices = parse_labels(field(item, "vertices"), "vertices");
        if (item.contains("apex"))
            p.apex = VertexLabel::parse(get_string(item, "apex"));
        if (item.contains("radius")) {
            const auto& r = item["radius"];
            if (!r.is_number_integer())
                throw InputError("radius must be an integer");
            p.radius = r.get<int>();
        }
        cert.parts.push_back(std::move(p));
    }
    return cert;
}

std::string coloring_to_json(const IncidenceColoring& phi) {
    Json doc;
    doc["kappa"] = phi.kappa();
    Json list = Json::array();
    for (const auto& [inc, c] : phi.entries()) {
        Json item;
        item["vertex"] = inc.vertex.str();
        item["edge"] = Json::array({inc.vertex.str(), inc.other.str()});
        item["color"] = c;
        list.push_back(std::move(item));
    }
    doc["incidences"] = std::move(list);
    return doc.dump(2) + "\n";
}

IncidenceColoring coloring_from_json(std::string_view text) {
    const Json doc = parse_document(text);
    if (!doc.is_object() || !field(doc, "kappa").is_number_integer() || !field(doc, "incidences").is_array())
        throw InputError("colouring must be an object with integer kappa and an incidences array");
    IncidenceColoring phi(doc["kappa"].get<int>());
    for (const auto& item : doc["incidences"]) {
        auto edge = parse_labels(field(item, "edge"), "edge");
        auto vertex = VertexLabel::parse(get_string(item, "vertex"));
        if (edge.size() != 2 || edge[0] != vertex)
            throw InputError("incidence edge must start at its vertex " + vertex.str());
        if (!field(item, "color").is_number_integer())
            throw InputError("colour must be an integer");
        phi.set({edge[0], edge[1]}, item["color"].get<int>());
    }
    return phi;
}

std::string reports_to_json(const std::vector<Report>& reports) {
    Json doc;
    doc["pass"] = all_pass(reports);
    Json list = Json::array();
    for (const auto& r : reports)
        list.push_back(report_json(r));
    doc["checks"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string widths_to_json(const Graph& g, const TreewidthResult& tw, const PathwidthResult& pw,
                           const TreedepthResult& td) {
    Json doc;
    doc["order"] = g.order();
    doc["size"] = g.size();

    Json t;
    t["value"] = tw.width;
    Json bags = Json::array();
    for (const auto& b : tw.decomposition.bags)
        bags.push_back(label_array(b));
    t["bags"] = std::move(bags);
    Json tree_edges = Json::array();
    for (auto [i, j] : tw.decomposition.tree.edges())
        tree_edges.push_back(Json::array({i, j}));
    t["tree_edges"] = std::move(tree_edges);
    t["check"] = report_json(verify_tree_decomposition(g, tw.decomposition));
    doc["treewidth"] = std::move(t);

    Json p;
    p["value"] = pw.width;
    Json pbags = Json::array();
    for (const auto& b : pw.decomposition.bags)
        pbags.push_back(label_array(b));
    p["bags"] = std::move(pbags);
    p["check"] = report_json(verify_path_decomposition(g, pw.decomposition));
    doc["pathwidth"] = std::move(p);

    Json d;
    d["value"] = td.depth;
    Json parent = Json::object();
    for (const auto& [v, up] : td.tree.parent)
        parent[v.str()] = up ? Json(up->str()) : Json(nullptr);
    d["parent"] = std::move(parent);
    d["check"] = report_json(verify_elimination_tree(g, g.vertices(), td.tree));
    doc["treedepth"] = std::move(d);
    return doc.dump(2) + "\n";
}

std::string certificate_to_dot(const CoverCertificate& cert) {
    if (cert.parts.empty())
        throw InputError("certificate has no parts to draw");
    std::map<VertexLabel, std::vector<std::size_t>> member;
    for (std::size_t i = 0; i < cert.parts.size(); ++i)
        for (const auto& v : cert.parts[i].vertices)
            member[v].push_back(i);

    constexpr std::size_t kColours = std::size(kPalette);
    return to_dot(cert.graph, [&](const VertexLabel& v) {
        std::string shape = v.is_apex() ? "doublecircle" : v.is_subdiv() ? "square" : "circle";
        std::string attrs = "shape=" + shape;
        if (v.is_apex())
            attrs += ", penwidth=2";
        auto it = member.find(v);
        if (it == member.end())
            return attrs + ", style=filled, fillcolor=\"white\"";
        std::string fill;
        for (auto i : it->second) {
            if (!fill.empty())
                fill += ":";
            fill += kPalette[i % kColours];
        }
        if (it->second.size() == 1)
            return attrs + ", style=filled, fillcolor=\"" + fill + "\"";
        // Graphviz wedges only work on ellipses; other shapes get stripes.
        const char* style = shape == "square" ? "striped" : "wedged";
        return attrs + ", style=" + style + ", fillcolor=\"" + fill + "\"";
    });
}

} // namespace isocover
