#include "soficlab/io.hpp"

#include "soficlab/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace soficlab {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
    if (!doc.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");
    return doc.at(key);
}

std::string as_string(const json& v, const std::string& what) {
    if (!v.is_string()) throw SchemaError(what + " must be a string");
    return v.get<std::string>();
}

} // namespace

LabeledGraph presentation_from_json(const json& doc, bool allow_reserved) {
    if (!doc.is_object()) throw SchemaError("graph file must be a JSON object");
    const std::string type = as_string(require(doc, "type"), "type");
    if (type != "edge-labeled" && type != "vertex-labeled")
        throw SchemaError("type must be 'edge-labeled' or 'vertex-labeled'");
    const bool vertex_labeled = type == "vertex-labeled";

    const json& alpha = require(doc, "alphabet");
    if (!alpha.is_array() || alpha.empty()) throw SchemaError("alphabet must be a non-empty array");
    std::vector<std::string> symbols;
    for (const auto& s : alpha) {
        symbols.push_back(as_string(s, "alphabet symbol"));
        if (symbols.back().empty()) throw ValidationError("empty alphabet symbol");
        if (!allow_reserved && symbols.back().rfind(kReservedPrefix, 0) == 0)
            throw ValidationError("symbol '" + symbols.back() + "' uses the reserved prefix '^'");
    }
    Alphabet alphabet(std::move(symbols));

    const json& verts = require(doc, "vertices");
    if (!verts.is_array()) throw SchemaError("vertices must be an array");
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& v : verts) {
        names.push_back(as_string(v, "vertex name"));
        if (!seen.insert(names.back()).second) throw ValidationError("duplicate vertex '" + names.back() + "'");
    }
    auto vertex_index = [&](const std::string& name) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        throw ValidationError("edge references unknown vertex '" + name + "'");
    };

    bool target_labels = false;
    if (doc.contains("label_convention")) {
        const std::string conv = as_string(doc.at("label_convention"), "label_convention");
        if (conv == "target") target_labels = true;
        else if (conv != "source") throw SchemaError("label_convention must be 'source' or 'target'");
    }

    std::vector<Symbol> vlabels;
    if (vertex_labeled) {
        const json& vl = require(doc, "vertex_labels");
        if (!vl.is_object()) throw SchemaError("vertex_labels must be an object");
        for (const auto& name : names) {
            if (!vl.contains(name)) throw SchemaError("vertex '" + name + "' has no label");
            vlabels.push_back(alphabet.index(as_string(vl.at(name), "vertex label")));
        }
    }

    const json& es = require(doc, "edges");
    if (!es.is_array()) throw SchemaError("edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : es) {
        if (!e.is_object()) throw SchemaError("edge must be an object");
        Edge ed;
        ed.src = vertex_index(as_string(require(e, "src"), "src"));
        ed.dst = vertex_index(as_string(require(e, "dst"), "dst"));
        if (vertex_labeled) {
            ed.label = vlabels[static_cast<size_t>(target_labels ? ed.dst : ed.src)];
        } else {
            ed.label = alphabet.index(as_string(require(e, "label"), "label"));
        }
        edges.push_back(ed);
    }
    return LabeledGraph(std::move(alphabet), std::move(names), std::move(edges));
}

LabeledGraph parse_presentation(std::string_view text, bool allow_reserved) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return presentation_from_json(doc, allow_reserved);
}

LabeledGraph load_presentation(const std::string& path, bool allow_reserved) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str(), allow_reserved);
}

json presentation_to_json(const LabeledGraph& g) {
    json doc = json::object();
    doc["type"] = "edge-labeled";
    doc["alphabet"] = g.alphabet().symbols();
    doc["vertices"] = g.vertex_names();
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"src", g.vertex_name(e.src)}, {"dst", g.vertex_name(e.dst)}, {"label", g.alphabet().name(e.label)}});
    doc["edges"] = std::move(edges);
    return doc;
}

std::string serialize_presentation(const LabeledGraph& g) { return presentation_to_json(g).dump(2); }

std::string to_dot(const LabeledGraph& g, std::string_view name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  n" << v << " [label=" << json(g.vertex_name(v)).dump() << "];\n";
    for (const Edge& e : g.edges())
        os << "  n" << e.src << " -> n" << e.dst << " [label=" << json(g.alphabet().name(e.label)).dump() << "];\n";
    os << "}\n";
    return os.str();
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word w;
    bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
    if (alphabet.compact() && !separated) {
        for (char c : text) w.push_back(alphabet.index(std::string_view(&c, 1)));
        return w;
    }
    std::string token;
    auto flush = [&] {
        if (!token.empty()) w.push_back(alphabet.index(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == ',' || c == '\t') flush();
        else token.push_back(c);
    }
    flush();
    return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
    std::string out;
    const bool compact = alphabet.compact();
    for (size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += ' ';
        out += alphabet.name(w[i]);
    }
    return out;
}

} // namespace soficlab
