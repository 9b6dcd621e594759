#include <doctest.h>

#include <sstream>

#include "preord/document.hpp"
#include "preord/dot.hpp"
#include "preord/graph.hpp"
#include "preord/pretorsion.hpp"
#include "preord/testkit/enumerate.hpp"
#include "support.hpp"

using namespace preord;
using namespace preord::test;

namespace {

const char* kRunning = R"({
  "format": "preord/1",
  "objects": [
    {"name": "P", "labels": ["a", "b", "c"], "edges": [["a", "b"], ["b", "a"], ["b", "c"]]},
    {"name": "C", "size": 2, "edges": [[0, 1]]}
  ],
  "morphisms": [
    {"name": "f", "source": "P", "target": "C", "values": ["0", "0", "1"]}
  ]
})";

}  // namespace

TEST_CASE("minimal document") {
    const Document d = parse_document(R"({"format": "preord/1", "objects": [{"name": "pt", "size": 1}]})");
    REQUIRE(d.objects.size() == 1);
    CHECK(d.object("pt") == FinPreorder::discrete(1));
    CHECK(d.morphisms.empty());
}

TEST_CASE("edges are closed on load") {
    const Document d = parse_document(kRunning);
    CHECK(d.object("P") == running_example());
    CHECK(d.object("P").carrier().label(2) == "c");
    CHECK(d.object("C") == FinPreorder::chain(2));
    const NamedMorphism& f = d.morphism("f");
    CHECK(f.source == "P");
    CHECK(f.morphism.values() == std::vector<Index>{0, 0, 1});
    CHECK_THROWS_AS(d.object("Q"), Error);
    CHECK_THROWS_AS(d.morphism("g"), Error);
}

TEST_CASE("malformed label reference names the edge") {
    const std::string text =
        R"({"format": "preord/1", "objects": [{"name": "P", "labels": ["a", "b"], "edges": [["a", "b"], ["b", "z"]]}]})";
    try {
        parse_document(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.field() == "objects[0].edges[1][1]");
        CHECK(std::string(e.what()).find("\"z\"") != std::string::npos);
    }
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(parse_document(R"({"format": "preord/2", "objects": []})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format": "preord/1", "objects": [{"name": "P"}]})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format": "preord/1", "objects": [{"name": "P", "labels": ["a", "a"]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format": "preord/1", "objects": [{"name": "P", "size": 2, "edges": [[0, 5]]}]})"),
                    ParseError);
    // not monotone: the chain 0 ≤ 1 mapped onto the reversed pair of a discrete object
    CHECK_THROWS_AS(parse_document(R"({"format": "preord/1",
        "objects": [{"name": "C", "size": 2, "edges": [[0, 1]]}, {"name": "D", "size": 2}],
        "morphisms": [{"name": "f", "source": "C", "target": "D", "values": [1, 0]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format": "preord/1", "objects": [],
        "morphisms": [{"name": "f", "source": "X", "target": "X", "values": []}]})"),
                    ParseError);
}

TEST_CASE("strict mode requires closed edges") {
    const std::string open = R"({"format": "preord/1", "objects": [{"name": "P", "size": 3, "edges": [[0, 1], [1, 2]]}]})";
    CHECK(parse_document(open).object("P") == FinPreorder::chain(3));
    try {
        parse_document(open, {true});
        FAIL("expected a transitivity error");
    } catch (const ParseError& e) {
        CHECK(e.field() == "objects[0].edges");
        CHECK(std::string(e.what()).find("transitive") != std::string::npos);
    }
    const std::string closed =
        R"({"format": "preord/1", "objects": [{"name": "P", "size": 3, "edges": [[0, 1], [1, 2], [0, 2]]}]})";
    CHECK(parse_document(closed, {true}).object("P") == FinPreorder::chain(3));
}

TEST_CASE("syntax errors carry a line") {
    const std::string text = "{\n  \"format\": \"preord/1\",\n  \"objects\": [\n    {\"name\": \"P\" \"size\": 1}\n  ]\n}\n";
    try {
        parse_document(text);
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("spaces") {
    const Document d = parse_document(R"({"format": "preord/1", "spaces": [
        {"name": "S", "labels": ["a", "b"], "min_open": {"a": ["a"], "b": ["a", "b"]}}]})");
    REQUIRE(d.spaces.size() == 1);
    CHECK(space_to_preorder(d.spaces[0].space) == FinPreorder::chain(2));
    CHECK_THROWS_AS(parse_document(R"({"format": "preord/1", "spaces": [
        {"name": "S", "labels": ["a", "b"], "min_open": {"a": ["b"], "b": ["b"]}}]})"),
                    ParseError);
}

TEST_CASE("save and load round trip") {
    const Document d = parse_document(kRunning);
    const std::string once = save_document(d);
    const Document back = parse_document(once, {true});
    CHECK(save_document(back) == once);
    CHECK(back.object("P") == d.object("P"));
    CHECK(back.morphism("f").morphism == d.morphism("f").morphism);
    CHECK(once.back() == '\n');
    std::istringstream in(once);
    CHECK(save_document(load_document(in)) == once);

    // Every preorder on 3 points survives the trip.
    for (const auto& p : testkit::enumerate_preorders(3)) {
        Document one;
        one.objects.push_back({"P", p});
        CHECK(parse_document(save_document(one), {true}).object("P") == p);
    }
}

TEST_CASE("output is deterministic") {
    CHECK(save_document(parse_document(kRunning)) == save_document(parse_document(kRunning)));
    CHECK(to_dot(running_example()) == to_dot(running_example()));
}

TEST_CASE("hasse edges") {
    CHECK(hasse_edges(FinPreorder::chain(4)) == std::vector<Pair>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(hasse_edges(FinPreorder::discrete(3)).empty());
    CHECK_THROWS_AS(hasse_edges(FinPreorder::codiscrete(2)), PreconditionViolation);
}

TEST_CASE("DOT export") {
    const std::string dot = to_dot(running_example(), "P");
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("cluster_0") != std::string::npos);
    CHECK(dot.find("cluster_1") != std::string::npos);
    CHECK(dot.find("cluster_2") == std::string::npos);
    CHECK(dot.find("ltail=cluster_0") != std::string::npos);
    CHECK(dot.find("lhead=cluster_1") != std::string::npos);

    // The drawn class graph is acyclic for every preorder on 4 points.
    for (const auto& p : testkit::enumerate_preorders(4)) {
        const Reflection r = reflect(p);
        const auto edges = hasse_edges(r.object);
        BitMatrix adj(r.object.size(), r.object.size());
        for (auto [a, b] : edges) {
            CHECK(a != b);
            adj.set(a, b);
        }
        CHECK(strongly_connected_components(adj).count == r.object.size());
    }
}
