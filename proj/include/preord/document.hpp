#pragma once

// Versioned JSON documents holding named preorders, Alexandroff spaces and
// morphisms between the preorders.
//
//   {
//     "format": "preord/1",
//     "objects":   [{"name": "P", "labels": ["a", "b"], "edges": [["a", "b"]]}],
//     "spaces":    [{"name": "S", "labels": ["a", "b"], "min_open": {"a": ["a"], "b": ["a", "b"]}}],
//     "morphisms": [{"name": "f", "source": "P", "target": "P", "values": ["a", "b"]}]
//   }
//
// Objects may give "size": n instead of labels (labels become "0".."n-1").
// Edges are generators: the reflexive-transitive closure is taken on load.
// In strict mode the edges must already be transitive (the diagonal is
// always implied). Saving writes the full closed relation, so a saved
// document loads identically in either mode.

#include <iosfwd>
#include <string>
#include <vector>

#include "preord/alexandroff.hpp"
#include "preord/relation.hpp"

namespace preord {

inline constexpr const char* kDocumentFormat = "preord/1";

struct NamedPreorder {
    std::string name;
    FinPreorder object;
};

struct NamedSpace {
    std::string name;
    AlexandroffSpace space;
};

struct NamedMorphism {
    std::string name;
    std::string source;
    std::string target;
    PreordMorphism morphism;
};

struct Document {
    std::vector<NamedPreorder> objects;
    std::vector<NamedSpace> spaces;
    std::vector<NamedMorphism> morphisms;

    // Both throw Error naming the missing entry.
    const FinPreorder& object(const std::string& name) const;
    const NamedMorphism& morphism(const std::string& name) const;
};

struct LoadOptions {
    bool strict = false;
};

// Throws ParseError with a line number for malformed JSON and a field path
// (e.g. "objects[0].edges[2]") for well-formed JSON that breaks the schema.
Document parse_document(const std::string& text, LoadOptions options = {});
Document load_document(std::istream& in, LoadOptions options = {});
Document load_document_file(const std::string& path, LoadOptions options = {});

// Canonical text: two-space indented JSON with a trailing newline.
std::string save_document(const Document& doc);

}  // namespace preord
