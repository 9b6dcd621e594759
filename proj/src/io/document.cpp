#include "preord/document.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

namespace preord {

using json = nlohmann::ordered_json;

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] void fail(const std::string& field, const std::string& message) { throw ParseError(message, 0, field); }

const json& member(const json& obj, const char* key, const std::string& field) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(field, std::string("missing \"") + key + "\"");
    return *it;
}

std::string get_string(const json& v, const std::string& field) {
    if (!v.is_string()) fail(field, "expected a string");
    return v.get<std::string>();
}

class LabelIndex {
public:
    explicit LabelIndex(const FinSet& s) : size_(s.size()) {
        for (Index i = 0; i < s.size(); ++i) by_label_.emplace(s.label(i), i);
    }

    // A label string, or a non-negative integer index.
    Index resolve(const json& v, const std::string& field) const {
        if (v.is_number_unsigned()) {
            const auto i = v.get<std::uint64_t>();
            if (i >= size_) fail(field, "index " + std::to_string(i) + " is out of range");
            return static_cast<Index>(i);
        }
        if (!v.is_string()) fail(field, "expected a label or an index");
        auto it = by_label_.find(v.get<std::string>());
        if (it == by_label_.end()) fail(field, "unknown label \"" + v.get<std::string>() + "\"");
        return it->second;
    }

private:
    std::size_t size_;
    std::map<std::string, Index> by_label_;
};

FinSet read_carrier(const json& obj, const std::string& field) {
    if (obj.contains("labels")) {
        const json& labels = obj["labels"];
        if (!labels.is_array()) fail(field + ".labels", "expected an array");
        std::vector<std::string> names;
        for (std::size_t i = 0; i < labels.size(); ++i)
            names.push_back(get_string(labels[i], field + ".labels[" + std::to_string(i) + "]"));
        std::vector<std::string> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) fail(field + ".labels", "duplicate label \"" + *dup + "\"");
        return FinSet(std::move(names));
    }
    if (obj.contains("size")) {
        const json& size = obj["size"];
        if (!size.is_number_unsigned()) fail(field + ".size", "expected a non-negative integer");
        return FinSet(static_cast<std::size_t>(size.get<std::uint64_t>()));
    }
    fail(field, "needs \"labels\" or \"size\"");
}

std::string read_name(const json& obj, const std::string& field) {
    const std::string name = get_string(member(obj, "name", field), field + ".name");
    if (name.empty()) fail(field + ".name", "name is empty");
    return name;
}

FinPreorder read_object(const json& obj, const std::string& field, bool strict) {
    if (!obj.is_object()) fail(field, "expected an object");
    FinSet carrier = read_carrier(obj, field);
    const LabelIndex labels(carrier);
    BitMatrix m = BitMatrix::identity(carrier.size());
    if (obj.contains("edges")) {
        const json& edges = obj["edges"];
        if (!edges.is_array()) fail(field + ".edges", "expected an array");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string ef = field + ".edges[" + std::to_string(i) + "]";
            if (!edges[i].is_array() || edges[i].size() != 2) fail(ef, "an edge is a pair [from, to]");
            m.set(labels.resolve(edges[i][0], ef + "[0]"), labels.resolve(edges[i][1], ef + "[1]"));
        }
    }
    Relation rel(carrier, carrier, std::move(m));
    if (!strict) return reflexive_transitive_closure(rel);
    const std::size_t n = carrier.size();
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (!rel.contains(a, b)) continue;
            for (Index c = 0; c < n; ++c)
                if (rel.contains(b, c) && !rel.contains(a, c))
                    fail(field + ".edges", "not transitive: " + carrier.label(a) + " <= " + carrier.label(b) +
                                               " <= " + carrier.label(c) + " but not " + carrier.label(a) +
                                               " <= " + carrier.label(c));
        }
    return FinPreorder(std::move(rel));
}

AlexandroffSpace read_space(const json& obj, const std::string& field) {
    if (!obj.is_object()) fail(field, "expected an object");
    FinSet carrier = read_carrier(obj, field);
    const LabelIndex labels(carrier);
    const json& table = member(obj, "min_open", field);
    if (!table.is_object()) fail(field + ".min_open", "expected an object keyed by point label");
    BitMatrix u(carrier.size(), carrier.size());
    std::vector<bool> seen(carrier.size(), false);
    for (auto it = table.begin(); it != table.end(); ++it) {
        const std::string kf = field + ".min_open." + it.key();
        const Index x = labels.resolve(json(it.key()), kf);
        seen[x] = true;
        if (!it.value().is_array()) fail(kf, "expected an array of labels");
        for (std::size_t i = 0; i < it.value().size(); ++i)
            u.set(x, labels.resolve(it.value()[i], kf + "[" + std::to_string(i) + "]"));
    }
    for (Index x = 0; x < carrier.size(); ++x)
        if (!seen[x]) fail(field + ".min_open", "no entry for point " + carrier.label(x));
    try {
        return AlexandroffSpace(std::move(carrier), std::move(u));
    } catch (const InvariantViolation& e) {
        fail(field + ".min_open", e.what());
    }
}

void carrier_json(const FinSet& s, json& out) {
    if (s.has_labels()) {
        json labels = json::array();
        for (Index i = 0; i < s.size(); ++i) labels.push_back(s.label(i));
        out["labels"] = std::move(labels);
    } else {
        out["size"] = s.size();
    }
}

}  // namespace

const FinPreorder& Document::object(const std::string& name) const {
    for (const auto& o : objects)
        if (o.name == name) return o.object;
    throw Error("unknown object \"" + name + "\"");
}

const NamedMorphism& Document::morphism(const std::string& name) const {
    for (const auto& m : morphisms)
        if (m.name == name) return m;
    throw Error("unknown morphism \"" + name + "\"");
}

Document parse_document(const std::string& text, LoadOptions options) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte just past the offending token.
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        std::string what = e.what();
        auto pos = what.find("]: ");
        throw ParseError(pos == std::string::npos ? what : what.substr(pos + 3), line_of(text, byte), "");
    }
    if (!root.is_object()) fail("", "document must be a JSON object");
    const std::string format = get_string(member(root, "format", ""), "format");
    if (format != kDocumentFormat) fail("format", "unsupported format \"" + format + "\"");

    Document doc;
    std::map<std::string, std::size_t> object_index;
    if (root.contains("objects")) {
        const json& objs = root["objects"];
        if (!objs.is_array()) fail("objects", "expected an array");
        for (std::size_t i = 0; i < objs.size(); ++i) {
            const std::string field = "objects[" + std::to_string(i) + "]";
            if (!objs[i].is_object()) fail(field, "expected an object");
            std::string name = read_name(objs[i], field);
            if (!object_index.emplace(name, doc.objects.size()).second)
                fail(field + ".name", "duplicate object name \"" + name + "\"");
            doc.objects.push_back({std::move(name), read_object(objs[i], field, options.strict)});
        }
    }
    if (root.contains("spaces")) {
        const json& spaces = root["spaces"];
        if (!spaces.is_array()) fail("spaces", "expected an array");
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            const std::string field = "spaces[" + std::to_string(i) + "]";
            if (!spaces[i].is_object()) fail(field, "expected an object");
            std::string name = read_name(spaces[i], field);
            for (const auto& s : doc.spaces)
                if (s.name == name) fail(field + ".name", "duplicate space name \"" + name + "\"");
            doc.spaces.push_back({std::move(name), read_space(spaces[i], field)});
        }
    }
    if (root.contains("morphisms")) {
        const json& ms = root["morphisms"];
        if (!ms.is_array()) fail("morphisms", "expected an array");
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const std::string field = "morphisms[" + std::to_string(i) + "]";
            const json& m = ms[i];
            if (!m.is_object()) fail(field, "expected an object");
            std::string name = read_name(m, field);
            for (const auto& prev : doc.morphisms)
                if (prev.name == name) fail(field + ".name", "duplicate morphism name \"" + name + "\"");
            const std::string source = get_string(member(m, "source", field), field + ".source");
            const std::string target = get_string(member(m, "target", field), field + ".target");
            auto si = object_index.find(source);
            if (si == object_index.end()) fail(field + ".source", "unknown object \"" + source + "\"");
            auto ti = object_index.find(target);
            if (ti == object_index.end()) fail(field + ".target", "unknown object \"" + target + "\"");
            const FinPreorder& src = doc.objects[si->second].object;
            const FinPreorder& dst = doc.objects[ti->second].object;
            const json& values = member(m, "values", field);
            if (!values.is_array()) fail(field + ".values", "expected an array");
            if (values.size() != src.size())
                fail(field + ".values", "has " + std::to_string(values.size()) + " entries for a source of size " +
                                            std::to_string(src.size()));
            const LabelIndex labels(dst.carrier());
            std::vector<Index> v;
            for (std::size_t j = 0; j < values.size(); ++j)
                v.push_back(labels.resolve(values[j], field + ".values[" + std::to_string(j) + "]"));
            if (!is_monotone(src, dst, v)) {
                for (Index a = 0; a < src.size(); ++a)
                    for (Index b = 0; b < src.size(); ++b)
                        if (src.leq(a, b) && !dst.leq(v[a], v[b]))
                            fail(field + ".values", "not monotone: " + src.carrier().label(a) + " <= " +
                                                        src.carrier().label(b) + " but " +
                                                        dst.carrier().label(v[a]) + " is not <= " +
                                                        dst.carrier().label(v[b]));
            }
            doc.morphisms.push_back({std::move(name), source, target, PreordMorphism(src, dst, std::move(v))});
        }
    }
    return doc;
}

Document load_document(std::istream& in, LoadOptions options) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_document(text, options);
}

Document load_document_file(const std::string& path, LoadOptions options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return load_document(in, options);
}

std::string save_document(const Document& doc) {
    json root;
    root["format"] = kDocumentFormat;
    json objs = json::array();
    for (const auto& o : doc.objects) {
        json j;
        j["name"] = o.name;
        carrier_json(o.object.carrier(), j);
        json edges = json::array();
        for (const auto& [a, b] : o.object.rel().pairs())
            if (a != b) edges.push_back(json::array({o.object.carrier().label(a), o.object.carrier().label(b)}));
        j["edges"] = std::move(edges);
        objs.push_back(std::move(j));
    }
    root["objects"] = std::move(objs);
    if (!doc.spaces.empty()) {
        json spaces = json::array();
        for (const auto& s : doc.spaces) {
            json j;
            j["name"] = s.name;
            carrier_json(s.space.carrier(), j);
            json table = json::object();
            for (Index x = 0; x < s.space.size(); ++x) {
                json row = json::array();
                for (Index y : min_open(s.space, x)) row.push_back(s.space.carrier().label(y));
                table[s.space.carrier().label(x)] = std::move(row);
            }
            j["min_open"] = std::move(table);
            spaces.push_back(std::move(j));
        }
        root["spaces"] = std::move(spaces);
    }
    json ms = json::array();
    for (const auto& m : doc.morphisms) {
        json j;
        j["name"] = m.name;
        j["source"] = m.source;
        j["target"] = m.target;
        json values = json::array();
        for (Index v : m.morphism.values()) values.push_back(m.morphism.dst().carrier().label(v));
        j["values"] = std::move(values);
        ms.push_back(std::move(j));
    }
    root["morphisms"] = std::move(ms);
    return root.dump(2) + "\n";
}

}  // namespace preord
