#include "crossfam/io.hpp"

#include <sstream>

#include <json.hpp>

namespace crossfam {

namespace {

void write_side(std::ostringstream& out, const char* name, const std::vector<Edge>& side) {
    out << "  \"" << name << "\": [";
    if (side.empty()) {
        out << "]";
        return;
    }
    out << "\n";
    for (std::size_t i = 0; i < side.size(); ++i) {
        out << "    [";
        std::vector<int> vs = side[i].members();
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j) out << ", ";
            out << vs[j];
        }
        out << "]";
        if (i + 1 < side.size()) out << ",";
        out << "\n";
    }
    out << "  ]";
}

} // namespace

std::string serialize_family(const Family& f) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"version\": 1,\n";
    out << "  \"vertices\": " << f.vertex_count << ",\n";
    if (f.labels) {
        out << "  \"labels\": [";
        for (std::size_t i = 0; i < f.labels->size(); ++i) {
            if (i) out << ", ";
            out << nlohmann::json((*f.labels)[i]).dump();
        }
        out << "],\n";
    }
    write_side(out, "a", f.side_a);
    out << ",\n";
    write_side(out, "b", f.side_b);
    out << "\n}\n";
    return out.str();
}

namespace {

std::vector<std::vector<int>> read_side(const nlohmann::json& doc, const char* name) {
    if (!doc.contains(name) || !doc[name].is_array())
        throw std::invalid_argument(std::string("family file: missing edge array \"") + name +
                                    "\"");
    std::vector<std::vector<int>> out;
    for (const auto& edge : doc[name]) {
        if (!edge.is_array())
            throw std::invalid_argument(std::string("family file: side \"") + name +
                                        "\" contains a non-array edge");
        std::vector<int> vs;
        for (const auto& v : edge) {
            if (!v.is_number_integer())
                throw std::invalid_argument(std::string("family file: side \"") + name +
                                            "\" contains a non-integer vertex");
            vs.push_back(v.get<int>());
        }
        out.push_back(std::move(vs));
    }
    return out;
}

// The raw side matches the canonical one edge-for-edge?
bool side_is_canonical(const std::vector<std::vector<int>>& raw, const std::vector<Edge>& canon) {
    if (raw.size() != canon.size()) return false;
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (Edge::from(raw[i]) != canon[i] ||
            raw[i] != canon[i].members())
            return false;
    return true;
}

} // namespace

Family parse_family(const std::string& text, std::vector<std::string>* warnings) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("family file: malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("family file: top level must be an object");
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (key != "version" && key != "vertices" && key != "labels" && key != "a" && key != "b")
            throw std::invalid_argument("family file: unknown key \"" + key + "\"");
    }
    if (!doc.contains("version") || !doc["version"].is_number_integer())
        throw std::invalid_argument("family file: missing integer \"version\"");
    if (doc["version"].get<int>() != 1)
        throw std::invalid_argument("family file: unsupported version " +
                                    doc["version"].dump());
    if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
        throw std::invalid_argument("family file: missing integer \"vertices\"");
    int vertex_count = doc["vertices"].get<int>();

    std::optional<std::vector<std::string>> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            throw std::invalid_argument("family file: \"labels\" must be an array of strings");
        labels.emplace();
        for (const auto& l : doc["labels"]) {
            if (!l.is_string())
                throw std::invalid_argument("family file: \"labels\" must be an array of strings");
            labels->push_back(l.get<std::string>());
        }
    }

    auto raw_a = read_side(doc, "a");
    auto raw_b = read_side(doc, "b");
    Family f = make_family(vertex_count, raw_a, raw_b, std::move(labels));
    if (warnings) {
        if (!side_is_canonical(raw_a, f.side_a))
            warnings->push_back("side a was not canonical; edges reordered or deduplicated");
        if (!side_is_canonical(raw_b, f.side_b))
            warnings->push_back("side b was not canonical; edges reordered or deduplicated");
    }
    return f;
}

} // namespace crossfam
